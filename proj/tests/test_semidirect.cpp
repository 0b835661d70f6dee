#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "garlink/braidrep.hpp"
#include "garlink/errors.hpp"
#include "garlink/semidirect.hpp"

using namespace garlink;
using namespace garlink::semidirect;
using garside::ComplementTable;
using garside::MonoidPresentation;
using words::Alphabet;
using words::Letter;
using words::PositiveWord;
using words::SignedWord;

namespace {

constexpr std::int64_t kCap = 1'000'000;

// B_3 with generators a, b (avoids clashing with braid generator names).
MonoidPresentation b3_base_presentation() {
  Alphabet alphabet({"a", "b"});
  return MonoidPresentation::unit_weights(
      alphabet, {{words::parse_positive_word("a b a", alphabet),
                  words::parse_positive_word("b a b", alphabet)}});
}

GarsideBase b3_base(const std::string& delta_text) {
  MonoidPresentation pres = b3_base_presentation();
  PositiveWord d = words::parse_positive_word(delta_text, pres.alphabet);
  return GarsideBase::build(pres, ComplementTable::derive_left(pres),
                            ComplementTable::derive_right(pres), d);
}

PositiveWord pw(const std::string& text, const MonoidPresentation& p) {
  return words::parse_positive_word(text, p.alphabet);
}

}  // namespace

TEST_CASE("integer base groups carry trivial tau") {
  GarsideBase z1 = GarsideBase::integers(1);
  CHECK(z1.certificate.passed());
  CHECK(z1.tau().at(0) == 0);
  GarsideBase z3 = GarsideBase::integers(3);
  CHECK(z3.certificate.passed());
  CHECK(z3.certificate.left_divisors.size() == 4);  // 1, a, a^2, a^3
  CHECK_THROWS_AS(GarsideBase::integers(0), InputError);
  CHECK_THROWS_AS(GarsideBase::integers(-2), InputError);
}

TEST_CASE("torsion base groups are rejected") {
  // Z/2 presented as <a | a^2 = 1> is not weight-homogeneous, hence not an
  // atomic monoid presentation; Garside groups are torsion free.
  Alphabet alphabet({"a"});
  MonoidPresentation pres = MonoidPresentation::unit_weights(
      alphabet, {{words::parse_positive_word("a a", alphabet), PositiveWord{}}});
  CHECK_THROWS_AS(GarsideBase::build(pres, ComplementTable::derive_left(pres),
                                     ComplementTable::derive_right(pres),
                                     words::parse_positive_word("a", alphabet)),
                  InputError);
}

TEST_CASE("non-Garside elements of the base are rejected") {
  // in B_3, the atom b does not divide a, so a is not a Garside element
  CHECK_THROWS_AS(b3_base("a"), InputError);
}

TEST_CASE("tau of the base: B_3 examples") {
  GarsideBase half = b3_base("a b a");
  CHECK(half.tau().at(0) == 1);  // conjugation by the half twist swaps a and b
  CHECK(half.tau().at(1) == 0);

  GarsideBase full = b3_base("a b a b a b");  // delta^2 is central
  CHECK(full.tau().at(0) == 0);
  CHECK(full.tau().at(1) == 1);
}

TEST_CASE("build_presentation: Z base gives the A(B_n) Artin presentations") {
  GarsideBase z = GarsideBase::integers(1);

  MonoidPresentation p2 = build_presentation(z, 2);
  REQUIRE(p2.alphabet.size() == 2);
  CHECK(p2.alphabet.name(0) == "a");
  CHECK(p2.alphabet.name(1) == "s1");
  REQUIRE(p2.relations.size() == 1);
  CHECK(p2.relations[0].first == pw("a s1 a s1", p2));
  CHECK(p2.relations[0].second == pw("s1 a s1 a", p2));

  MonoidPresentation p3 = build_presentation(z, 3);
  REQUIRE(p3.alphabet.size() == 3);
  bool has_braid = false, has_commute = false, has_twist = false;
  for (const auto& [l, r] : p3.relations) {
    if (l == pw("s1 s2 s1", p3) && r == pw("s2 s1 s2", p3)) has_braid = true;
    if (l == pw("s2 a", p3) && r == pw("a s2", p3)) has_commute = true;
    if (l == pw("a s1 a s1", p3) && r == pw("s1 a s1 a", p3)) has_twist = true;
  }
  CHECK(has_braid);
  CHECK(has_commute);
  CHECK(has_twist);

  GarsideBase z2 = GarsideBase::integers(2);
  MonoidPresentation q = build_presentation(z2, 2);
  REQUIRE(q.relations.size() == 1);
  CHECK(q.relations[0].first == pw("a s1 a^2 s1", q));
  CHECK(q.relations[0].second == pw("s1 a^2 s1 a", q));
}

TEST_CASE("the induced norm weights sigma letters by one and base letters by nu") {
  SemidirectInstance inst = build_instance(GarsideBase::integers(1), 2);
  const MonoidPresentation& p = inst.presentation;
  // nu~(x s1 D s1) = 4 = nu~(s1 D s1 tau(x)) for D = a
  CHECK(p.norm(pw("a s1 a s1", p)) == 4);
  CHECK(p.norm(pw("s1 a s1 a", p)) == 4);
  CHECK(p.norm(inst.delta) == 4);

  SemidirectInstance big = build_instance(GarsideBase::integers(2), 3);
  // wt(a) = 1, so nu~ counts letters here as well
  CHECK(big.presentation.norm(big.delta) == 12);  // (a^2 s1 s2)^3
}

TEST_CASE("built presentations are homogeneous") {
  for (int n : {2, 3, 4}) {
    MonoidPresentation p = build_presentation(GarsideBase::integers(1), n);
    CHECK(!p.homogeneity_witness().has_value());
  }
  MonoidPresentation q = build_presentation(b3_base("a b a"), 2);
  CHECK(!q.homogeneity_witness().has_value());
}

TEST_CASE("complement tables match the displayed entries and the presentation") {
  GarsideBase z = GarsideBase::integers(1);
  SemidirectInstance inst = build_instance(z, 3);
  const MonoidPresentation& p = inst.presentation;
  Letter a = 0, s1 = inst.sigma(1), s2 = inst.sigma(2);

  CHECK(*inst.F.entry(a, s1) == pw("s1 a s1", p));
  CHECK(*inst.F.entry(s1, a) == pw("a s1 a", p));
  CHECK(*inst.F.entry(a, s2) == PositiveWord({s2}));
  CHECK(*inst.F.entry(s2, a) == PositiveWord({a}));
  CHECK(*inst.F.entry(s1, s2) == PositiveWord({s2, s1}));

  CHECK(*inst.G.entry(s1, a) == pw("s1 a s1", p));
  CHECK(*inst.G.entry(a, s1) == pw("a s1 a", p));
  CHECK(*inst.G.entry(a, s2) == PositiveWord({a}));
  CHECK(*inst.G.entry(s2, a) == PositiveWord({s2}));
  CHECK(*inst.G.entry(s1, s2) == PositiveWord({s2, s1}));

  // the tables derived from the presentation's relations coincide
  ComplementTable df = ComplementTable::derive_left(p);
  ComplementTable dg = ComplementTable::derive_right(p);
  for (Letter x = 0; x < static_cast<Letter>(p.alphabet.size()); ++x) {
    for (Letter y = 0; y < static_cast<Letter>(p.alphabet.size()); ++y) {
      CHECK(df.entry(x, y) == inst.F.entry(x, y));
      CHECK(dg.entry(x, y) == inst.G.entry(x, y));
    }
  }
}

TEST_CASE("garside_delta formula") {
  GarsideBase z = GarsideBase::integers(1);
  SemidirectInstance i2 = build_instance(z, 2);
  CHECK(i2.delta == pw("a s1 a s1", i2.presentation));
  SemidirectInstance i3 = build_instance(z, 3);
  CHECK(i3.delta == pw("a s1 s2 a s1 s2 a s1 s2", i3.presentation));
  GarsideBase z2 = GarsideBase::integers(2);
  SemidirectInstance j2 = build_instance(z2, 2);
  CHECK(j2.delta == pw("a^2 s1 a^2 s1", j2.presentation));
}

TEST_CASE("tilde tau fixes sigmas and applies tau^n to base letters") {
  GarsideBase z = GarsideBase::integers(1);
  SemidirectInstance inst = build_instance(z, 2);
  CHECK(inst.tilde_tau_letter(inst.sigma(1)) == PositiveWord({inst.sigma(1)}));
  CHECK(inst.tilde_tau_letter(0) == PositiveWord({0}));

  SemidirectInstance b = build_instance(b3_base("a b a"), 2);
  // tau has order two, so tau^2 = id on base letters
  CHECK(b.tilde_tau_letter(0) == PositiveWord({0}));
  CHECK(b.tilde_tau_letter(1) == PositiveWord({1}));
}

TEST_CASE("semidirect structure verifies: H = Z, D = a, n = 2") {
  SemidirectInstance inst = build_instance(GarsideBase::integers(1), 2);
  StructureReport report = verify_semidirect_structure(inst);
  INFO(report.report(inst.presentation.alphabet));
  CHECK(report.passed());
  // A(B_2): divisors of (a s1)^2 in the dihedral Artin monoid
  CHECK(report.certificate.left_divisors.size() == 8);
}

TEST_CASE("semidirect structure verifies: H = Z, D = a^2, n = 2") {
  SemidirectInstance inst = build_instance(GarsideBase::integers(2), 2);
  StructureReport report = verify_semidirect_structure(inst);
  INFO(report.report(inst.presentation.alphabet));
  CHECK(report.passed());
}

TEST_CASE("semidirect structure verifies: H = B_3, D = delta, n = 2") {
  SemidirectInstance inst = build_instance(b3_base("a b a"), 2);
  StructureReport report = verify_semidirect_structure(inst);
  INFO(report.report(inst.presentation.alphabet));
  CHECK(report.passed());
}

TEST_CASE("semidirect structure verifies over a weighted abelian base") {
  // H = Z^2 as fractions of the free abelian monoid <a, b | ab = ba>,
  // h = ab, with wt(b) = 2 so the induced norm is genuinely weighted.
  Alphabet alphabet({"a", "b"});
  MonoidPresentation pres{alphabet,
                          {1, 2},
                          {{words::parse_positive_word("a b", alphabet),
                            words::parse_positive_word("b a", alphabet)}}};
  GarsideBase base = GarsideBase::build(pres, ComplementTable::derive_left(pres),
                                        ComplementTable::derive_right(pres),
                                        words::parse_positive_word("a b", alphabet));
  CHECK(base.tau().at(0) == 0);  // abelian, so conjugation is trivial
  SemidirectInstance inst = build_instance(base, 2);
  CHECK(!inst.presentation.homogeneity_witness().has_value());
  CHECK(inst.presentation.norm(inst.delta) == 8);  // (ab s1)^2 with wt(b) = 2
  StructureReport report = verify_semidirect_structure(inst);
  INFO(report.report(inst.presentation.alphabet));
  CHECK(report.passed());
}

TEST_CASE("oracle agreement for the quadratic instance H = Z, D = a^2") {
  SemidirectInstance inst = build_instance(GarsideBase::integers(2), 2);
  garside::Ball ball = garside::Ball::enumerate(inst.presentation, 5);
  for (auto a : ball.all_classes()) {
    for (auto b : ball.all_classes()) {
      PositiveWord wa = ball.canonical(a);
      PositiveWord wb = ball.canonical(b);
      PositiveWord join = garside::join_left(wa, wb, inst.F, kCap);
      auto lub = ball.lub_left(a, b);
      if (inst.presentation.norm(join) <= ball.norm_bound()) {
        REQUIRE(lub.has_value());
        CHECK(ball.class_of(join) == *lub);
      } else {
        CHECK(!ball.has_common_upper_left(a, b));
      }
      PositiveWord meet = garside::meet_left(wa, wb, inst.F, inst.G, kCap);
      auto glb = ball.glb_left(a, b);
      REQUIRE(glb.has_value());
      CHECK(ball.class_of(meet) == *glb);
    }
  }
}

TEST_CASE("conjugation in the verified group matches the Artin representation") {
  // H = Z, D = a, n = 3: sigma_k g sigma_k^{-1} = tau_k(g) on embedded factors
  SemidirectInstance inst = build_instance(GarsideBase::integers(1), 3);
  garside::GarsideStructure structure(inst.presentation, inst.F, inst.G, inst.delta);
  REQUIRE(structure.verified());

  auto z = freeprod::make_integers();
  braidrep::ArtinRepresentation rep(z, words::parse_signed_word("a", z->alphabet()), 3);

  for (int i = 1; i <= 3; ++i) {
    SignedWord a_word = words::parse_signed_word("a", z->alphabet());
    SignedWord embedded = inst.embed_factor_word(i, a_word);
    for (int k = 1; k <= 2; ++k) {
      SignedWord lhs;
      lhs.letters.push_back({inst.sigma(k), +1});
      lhs.letters.insert(lhs.letters.end(), embedded.letters.begin(), embedded.letters.end());
      lhs.letters.push_back({inst.sigma(k), -1});

      auto image = rep.apply_generator(k, +1, rep.generator(i, 0));
      SignedWord rhs = inst.embed_element(image);
      CHECK(structure.group_equal(lhs, rhs, kCap));
    }
  }
}
