#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "garlink/rng.hpp"
#include "garlink/wada.hpp"

using namespace garlink;
using namespace garlink::wada;
using braidrep::BraidWord;
using words::SignedWord;

namespace {

SignedWord fw(const std::string& text, const WadaRep& rep) {
  return words::parse_signed_word(text, rep.alphabet());
}

}  // namespace

TEST_CASE("defining formulas on generators") {
  WadaRep t1{WadaType::Type1, 2, 3};
  CHECK(wada_apply(t1, 1, +1, fw("x1", t1)) == fw("x1^-2 x2 x1^2", t1));
  CHECK(wada_apply(t1, 1, +1, fw("x2", t1)) == fw("x1", t1));
  CHECK(wada_apply(t1, 1, +1, fw("x3", t1)) == fw("x3", t1));

  WadaRep t1n{WadaType::Type1, -1, 2};
  CHECK(wada_apply(t1n, 1, +1, fw("x1", t1n)) == fw("x1 x2 x1^-1", t1n));

  WadaRep t2{WadaType::Type2, 0, 3};
  CHECK(wada_apply(t2, 2, +1, fw("x2", t2)) == fw("x2 x3^-1 x2", t2));
  CHECK(wada_apply(t2, 2, +1, fw("x3", t2)) == fw("x2", t2));

  WadaRep t3{WadaType::Type3, 0, 3};
  CHECK(wada_apply(t3, 1, +1, fw("x1", t3)) == fw("x1^2 x2", t3));
  CHECK(wada_apply(t3, 1, +1, fw("x2", t3)) == fw("x2^-1 x1^-1 x2", t3));
}

TEST_CASE("images compose with free reduction") {
  WadaRep t1{WadaType::Type1, 1, 2};
  // x_1 x_2 -> (x_1^{-1} x_2 x_1)(x_1) = x_1^{-1} x_2 x_1^2
  CHECK(wada_apply(t1, 1, +1, fw("x1 x2", t1)) == fw("x1^-1 x2 x1^2", t1));
  // inverses of letters map to inverses of images
  CHECK(wada_apply(t1, 1, +1, fw("x2^-1", t1)) == fw("x1^-1", t1));
}

TEST_CASE("braid relations and the inverse contract for all three types") {
  for (int n : {2, 3, 4, 5}) {
    CHECK(check_braid_relations(WadaRep{WadaType::Type1, 1, n}));
    CHECK(check_braid_relations(WadaRep{WadaType::Type1, -2, n}));
    CHECK(check_braid_relations(WadaRep{WadaType::Type1, 3, n}));
    CHECK(check_braid_relations(WadaRep{WadaType::Type2, 0, n}));
    CHECK(check_braid_relations(WadaRep{WadaType::Type3, 0, n}));
  }
}

TEST_CASE("inversion witness conjugates rho_h to rho_{-h}") {
  CHECK(check_inversion_witness(1, 3));
  CHECK(check_inversion_witness(2, 4));
  CHECK(check_inversion_witness(3, 5));
  CHECK(check_inversion_witness(-2, 3));
  // negative control: the identity witness does not work
  CHECK(!check_inversion_witness(1, 3, /*corrupt=*/true));
}

TEST_CASE("type 2 and type 3 are equivalent via the y-basis witness") {
  for (int n : {2, 3, 4, 5}) CHECK(check_equivalence_witness_23(n));
  // negative control: mu = id breaks the intertwining
  CHECK(!check_equivalence_witness_23(4, /*corrupt_mu=*/true));
}

TEST_CASE("fixed subgroup checks") {
  for (int h : {1, 2, 3}) {
    FixedSubgroupReport r = fixed_subgroup_checks(h, 4, 200, 5);
    INFO(r.to_string());
    CHECK(r.generators_fixed);
    CHECK(r.center_fixed);
    CHECK(r.converse_ok);
    CHECK(r.sampled == 200);
    CHECK(r.moved > 0);
  }
  // x_1 itself is moved by sigma_1
  WadaRep rep{WadaType::Type1, 1, 3};
  CHECK(wada_apply(rep, 1, +1, fw("x1", rep)) != fw("x1", rep));
}

TEST_CASE("abelianized action: growth against permutation matrices") {
  WadaRep t2{WadaType::Type2, 0, 2};
  for (int t = 1; t <= 50; ++t) {
    BraidWord beta;
    beta.strands = 2;
    for (int i = 0; i < t; ++i) beta.letters.letters.push_back({0, +1});
    auto m = abelianized_action(t2, beta);
    CHECK(m.at(0, 0) == t + 1);
    CHECK(m.at(1, 0) == -t);
  }

  for (int h : {1, 2, -3}) {
    for (int n : {2, 3, 4}) {
      WadaRep t1{WadaType::Type1, h, n};
      for (int k = 1; k <= n - 1; ++k) {
        BraidWord beta;
        beta.strands = n;
        beta.letters.letters.push_back({static_cast<words::Letter>(k - 1), +1});
        CHECK(abelianized_action(t1, beta).is_permutation());
      }
    }
  }

  BraidWord eps;
  eps.strands = 3;
  WadaRep t3{WadaType::Type3, 0, 3};
  CHECK(abelianized_action(t3, eps) == linkinv::IntegerMatrix::identity(3));

  // the abelianized action is multiplicative along words
  WadaRep rep{WadaType::Type2, 0, 3};
  BraidWord w1 = BraidWord::parse(3, "s1 s2^-1");
  BraidWord w2 = BraidWord::parse(3, "s2 s1");
  BraidWord w12 = BraidWord::parse(3, "s1 s2^-1 s2 s1");
  CHECK(abelianized_action(rep, w2).multiply(abelianized_action(rep, w1)) ==
        abelianized_action(rep, w12));
}

TEST_CASE("type 1 agrees with the Artin representation over H = Z") {
  for (int h : {1, 2, -2}) {
    const int n = 3;
    WadaRep rep{WadaType::Type1, h, n};
    auto z = freeprod::make_integers();
    SignedWord hw;
    for (int i = 0; i < (h > 0 ? h : -h); ++i) hw.letters.push_back({0, h > 0 ? +1 : -1});
    braidrep::ArtinRepresentation artin(z, hw, n);
    const auto& fp = artin.ambient();

    auto to_element = [&](const SignedWord& w) {
      freeprod::FreeProductElement g;
      for (const words::SignedLetter& l : w.letters) {
        SignedWord a;
        a.letters.push_back({0, l.sign});
        g = fp.multiply(g, fp.inject(l.index + 1, a));
      }
      return g;
    };
    auto to_word = [&](const freeprod::FreeProductElement& g) {
      SignedWord w;
      for (const auto& s : g.syllables) {
        for (const words::SignedLetter& l : s.content.letters) {
          w.letters.push_back({static_cast<words::Letter>(s.factor - 1), l.sign});
        }
      }
      return w;
    };

    Rng rng(900 + h);
    for (int trial = 0; trial < 50; ++trial) {
      SignedWord w;
      int len = rng.range(0, 8);
      for (int i = 0; i < len; ++i) {
        w.letters.push_back(
            {static_cast<words::Letter>(rng.below(static_cast<std::uint64_t>(n))),
             rng.coin() ? +1 : -1});
      }
      w = words::free_reduce(w);
      for (int k = 1; k <= n - 1; ++k) {
        for (int sign : {+1, -1}) {
          SignedWord via_wada = wada_apply(rep, k, sign, w);
          SignedWord via_artin = to_word(artin.apply_generator(k, sign, to_element(w)));
          CHECK(via_wada == via_artin);
        }
      }
    }
  }
}
