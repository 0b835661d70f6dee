#include "garlink/semidirect.hpp"

#include <algorithm>
#include <sstream>

#include "garlink/errors.hpp"

namespace garlink::semidirect {

using garside::CheckRecord;
using garside::ComplementTable;
using garside::MonoidPresentation;
using garside::Tri;

PositiveWord GarsideBase::tau_word(const PositiveWord& w) const {
  PositiveWord out;
  out.letters.reserve(w.size());
  for (Letter x : w.letters) out.letters.push_back(certificate.tau.at(x));
  return out;
}

PositiveWord GarsideBase::tau_inverse_word(const PositiveWord& w) const {
  PositiveWord out;
  out.letters.reserve(w.size());
  for (Letter x : w.letters) out.letters.push_back(certificate.tau_inverse.at(x));
  return out;
}

PositiveWord GarsideBase::tau_power_word(const PositiveWord& w, int power) const {
  PositiveWord out = w;
  for (int i = 0; i < power; ++i) out = tau_word(out);
  return out;
}

GarsideBase GarsideBase::build(MonoidPresentation pres, ComplementTable f, ComplementTable g,
                               PositiveWord d, const garside::VerifyOptions& opts) {
  GarsideBase base;
  base.certificate = garside::verify_garside(pres, f, g, d, opts);
  if (!base.certificate.passed()) {
    std::string why;
    for (const CheckRecord& c : base.certificate.checks) {
      if (c.status != CheckRecord::Status::Pass) {
        why = c.name + (c.detail.empty() ? "" : ": " + c.detail);
        break;
      }
    }
    throw InputError("the base is not a verified Garside monoid with Garside element '" +
                     words::to_string(d, pres.alphabet) + "' (" + why + ")");
  }
  if (base.certificate.atoms.size() != pres.alphabet.size()) {
    throw InputError("base generating set must consist of atoms (take S = atoms of M)");
  }
  base.presentation = std::move(pres);
  base.left = std::move(f);
  base.right = std::move(g);
  base.d = std::move(d);
  return base;
}

GarsideBase GarsideBase::integers(std::int64_t exponent, const garside::VerifyOptions& opts) {
  if (exponent < 1) {
    throw InputError("for H = Z the Garside element must be a positive power of the generator");
  }
  MonoidPresentation pres = MonoidPresentation::unit_weights(Alphabet({"a"}), {});
  PositiveWord d;
  for (std::int64_t i = 0; i < exponent; ++i) d.letters.push_back(0);
  return build(pres, ComplementTable::derive_left(pres), ComplementTable::derive_right(pres), d,
               opts);
}

Letter SemidirectInstance::sigma(int i) const {
  if (i < 1 || i > strands - 1) throw InputError("sigma index out of range");
  return static_cast<Letter>(base_letters() + static_cast<std::size_t>(i) - 1);
}

PositiveWord SemidirectInstance::u_word() const {
  PositiveWord u;
  u.letters.push_back(sigma(1));
  u.letters.insert(u.letters.end(), base.d.letters.begin(), base.d.letters.end());
  u.letters.push_back(sigma(1));
  for (int i = 2; i <= strands - 1; ++i) u.letters.push_back(sigma(i));
  return u;
}

PositiveWord SemidirectInstance::tilde_tau_letter(Letter x) const {
  if (is_sigma(x)) return PositiveWord({x});
  return base.tau_power_word(PositiveWord({x}), strands);
}

PositiveWord SemidirectInstance::tilde_tau_word(const PositiveWord& w) const {
  PositiveWord out;
  for (Letter x : w.letters) {
    PositiveWord img = tilde_tau_letter(x);
    out.letters.insert(out.letters.end(), img.letters.begin(), img.letters.end());
  }
  return out;
}

SignedWord SemidirectInstance::embed_factor_word(int factor, const SignedWord& base_word) const {
  if (factor < 1 || factor > strands) throw InputError("factor index out of range");
  SignedWord prefix;  // s_{i-1}^{-1} ... s_1^{-1} D^{i-1}
  for (int i = factor - 1; i >= 1; --i) prefix.letters.push_back({sigma(i), -1});
  for (int rep = 0; rep < factor - 1; ++rep) {
    for (Letter x : base.d.letters) prefix.letters.push_back({x, +1});
  }
  SignedWord out = prefix;
  out.letters.insert(out.letters.end(), base_word.letters.begin(), base_word.letters.end());
  SignedWord suffix = words::inverse(prefix);
  out.letters.insert(out.letters.end(), suffix.letters.begin(), suffix.letters.end());
  return out;
}

SignedWord SemidirectInstance::embed_element(const freeprod::FreeProductElement& g) const {
  SignedWord out;
  for (const freeprod::Syllable& s : g.syllables) {
    SignedWord piece = embed_factor_word(s.factor, s.content);
    out.letters.insert(out.letters.end(), piece.letters.begin(), piece.letters.end());
  }
  return words::free_reduce(out);
}

MonoidPresentation build_presentation(const GarsideBase& base, int strands) {
  if (strands < 2) throw InputError("the semidirect construction needs n >= 2");
  const Alphabet& s = base.presentation.alphabet;

  std::vector<std::string> names = s.names();
  for (int i = 1; i <= strands - 1; ++i) {
    std::string sig = "s" + std::to_string(i);
    if (s.find(sig)) {
      throw InputError("base generator name '" + sig + "' collides with a braid generator");
    }
    names.push_back(sig);
  }
  Alphabet alphabet(names);
  auto sig = [&](int i) { return static_cast<Letter>(s.size() + static_cast<std::size_t>(i) - 1); };

  std::vector<std::pair<PositiveWord, PositiveWord>> relations = base.presentation.relations;
  // braid relations among s1..s{n-1}
  for (int i = 1; i <= strands - 1; ++i) {
    for (int j = i + 1; j <= strands - 1; ++j) {
      if (j == i + 1) {
        relations.emplace_back(PositiveWord({sig(i), sig(j), sig(i)}),
                               PositiveWord({sig(j), sig(i), sig(j)}));
      } else {
        relations.emplace_back(PositiveWord({sig(i), sig(j)}), PositiveWord({sig(j), sig(i)}));
      }
    }
  }
  // sigma_i x = x sigma_i for i >= 2
  for (int i = 2; i <= strands - 1; ++i) {
    for (Letter x = 0; x < static_cast<Letter>(s.size()); ++x) {
      relations.emplace_back(PositiveWord({sig(i), x}), PositiveWord({x, sig(i)}));
    }
  }
  // x s1 D s1 = s1 D s1 tau(x)
  for (Letter x = 0; x < static_cast<Letter>(s.size()); ++x) {
    PositiveWord lhs({x, sig(1)});
    lhs.letters.insert(lhs.letters.end(), base.d.letters.begin(), base.d.letters.end());
    lhs.letters.push_back(sig(1));
    PositiveWord rhs({sig(1)});
    rhs.letters.insert(rhs.letters.end(), base.d.letters.begin(), base.d.letters.end());
    rhs.letters.push_back(sig(1));
    rhs.letters.push_back(base.tau().at(x));
    relations.emplace_back(std::move(lhs), std::move(rhs));
  }

  MonoidPresentation pres;
  pres.alphabet = std::move(alphabet);
  pres.weights = base.presentation.weights;
  for (int i = 1; i <= strands - 1; ++i) pres.weights.push_back(1);
  pres.relations = std::move(relations);
  return pres;
}

std::pair<ComplementTable, ComplementTable> build_complement_tables(const GarsideBase& base,
                                                                    int strands) {
  MonoidPresentation pres = build_presentation(base, strands);  // for the alphabet
  const auto m = static_cast<Letter>(base.presentation.alphabet.size());
  auto sig = [&](int i) { return static_cast<Letter>(m + i - 1); };

  ComplementTable F(pres.alphabet);
  ComplementTable G(pres.alphabet);

  PositiveWord s1ds1({sig(1)});
  s1ds1.letters.insert(s1ds1.letters.end(), base.d.letters.begin(), base.d.letters.end());
  s1ds1.letters.push_back(sig(1));

  // S x S block: the base tables.
  for (Letter x = 0; x < m; ++x) {
    for (Letter y = 0; y < m; ++y) {
      if (x == y) continue;
      if (const auto& e = base.left.entry(x, y)) F.set(x, y, *e);
      if (const auto& e = base.right.entry(x, y)) G.set(x, y, *e);
    }
  }
  for (Letter x = 0; x < m; ++x) {
    // F(x, s1) = s1 D s1 ; F(s1, x) = D s1 tau(x)
    F.set(x, sig(1), s1ds1);
    PositiveWord ds1t = base.d;
    ds1t.letters.push_back(sig(1));
    ds1t.letters.push_back(base.tau().at(x));
    F.set(sig(1), x, std::move(ds1t));
    // G(s1, x) = s1 D s1 ; G(x, s1) = tau^{-1}(x) s1 D
    G.set(sig(1), x, s1ds1);
    PositiveWord tis1d({base.tau_inverse().at(x)});
    tis1d.letters.push_back(sig(1));
    tis1d.letters.insert(tis1d.letters.end(), base.d.letters.begin(), base.d.letters.end());
    G.set(x, sig(1), std::move(tis1d));
    // F(x, s_i) = s_i, F(s_i, x) = x ; G(x, s_i) = x, G(s_i, x) = s_i   (i >= 2)
    for (int i = 2; i <= strands - 1; ++i) {
      F.set(x, sig(i), PositiveWord({sig(i)}));
      F.set(sig(i), x, PositiveWord({x}));
      G.set(x, sig(i), PositiveWord({x}));
      G.set(sig(i), x, PositiveWord({sig(i)}));
    }
  }
  for (int i = 1; i <= strands - 1; ++i) {
    for (int j = 1; j <= strands - 1; ++j) {
      if (i == j) continue;
      if (i - j == 1 || j - i == 1) {
        F.set(sig(i), sig(j), PositiveWord({sig(j), sig(i)}));
        G.set(sig(i), sig(j), PositiveWord({sig(j), sig(i)}));
      } else {
        F.set(sig(i), sig(j), PositiveWord({sig(j)}));
        G.set(sig(i), sig(j), PositiveWord({sig(i)}));
      }
    }
  }
  return {std::move(F), std::move(G)};
}

PositiveWord garside_delta(const GarsideBase& base, int strands) {
  if (strands < 2) throw InputError("the semidirect construction needs n >= 2");
  const auto m = static_cast<Letter>(base.presentation.alphabet.size());
  PositiveWord block = base.d;
  for (int i = 1; i <= strands - 1; ++i) block.letters.push_back(static_cast<Letter>(m + i - 1));
  PositiveWord delta;
  for (int rep = 0; rep < strands; ++rep) {
    delta.letters.insert(delta.letters.end(), block.letters.begin(), block.letters.end());
  }
  return delta;
}

SemidirectInstance build_instance(const GarsideBase& base, int strands) {
  SemidirectInstance inst;
  inst.base = base;
  inst.strands = strands;
  inst.presentation = build_presentation(base, strands);
  auto [f, g] = build_complement_tables(base, strands);
  inst.F = std::move(f);
  inst.G = std::move(g);
  inst.delta = garside_delta(base, strands);
  return inst;
}

bool StructureReport::passed() const {
  if (!certificate.passed()) return false;
  for (const CheckRecord& c : auxiliary) {
    if (c.status != CheckRecord::Status::Pass) return false;
  }
  return true;
}

std::string StructureReport::report(const Alphabet& alphabet) const {
  std::ostringstream out;
  out << certificate.report(alphabet);
  for (const CheckRecord& c : auxiliary) {
    out << "check " << c.name << " = " << garside::to_string(c.status);
    if (!c.detail.empty()) out << " (" << c.detail << ")";
    out << "\n";
  }
  out << "structure = " << (passed() ? "pass" : "fail") << "\n";
  return out.str();
}

StructureReport verify_semidirect_structure(const SemidirectInstance& instance,
                               const garside::VerifyOptions& opts) {
  StructureReport report;
  report.certificate =
      garside::verify_garside(instance.presentation, instance.F, instance.G, instance.delta, opts);

  const Alphabet& alphabet = instance.presentation.alphabet;
  auto record = [&](const std::string& name, Tri verdict, const std::string& detail) {
    CheckRecord c;
    c.name = name;
    c.detail = detail;
    c.status = verdict == Tri::True
                   ? CheckRecord::Status::Pass
                   : (verdict == Tri::Diverged ? CheckRecord::Status::Diverged
                                               : CheckRecord::Status::Fail);
    report.auxiliary.push_back(c);
  };
  auto equivalent = [&](const PositiveWord& a, const PositiveWord& b) {
    return garside::words_equivalent(a, b, instance.F, instance.G, opts.cap);
  };

  // Delta = D U^{n-1}
  {
    PositiveWord rhs = instance.base.d;
    PositiveWord u = instance.u_word();
    for (int i = 0; i < instance.strands - 1; ++i) {
      rhs.letters.insert(rhs.letters.end(), u.letters.begin(), u.letters.end());
    }
    record("aux.delta-eq-DU", equivalent(instance.delta, rhs),
           "delta vs D U^{n-1} = " + words::to_string(rhs, alphabet));
  }
  // x U = U tau(x) for all x in S
  {
    Tri all = Tri::True;
    std::string witness;
    PositiveWord u = instance.u_word();
    for (Letter x = 0; x < static_cast<Letter>(instance.base_letters()); ++x) {
      PositiveWord lhs({x});
      lhs.letters.insert(lhs.letters.end(), u.letters.begin(), u.letters.end());
      PositiveWord rhs = u;
      rhs.letters.push_back(instance.base.tau().at(x));
      Tri t = equivalent(lhs, rhs);
      if (t != Tri::True) {
        all = t;
        witness = "x = " + alphabet.name(x);
        break;
      }
    }
    record("aux.xU-eq-Utau", all, witness);
  }
  // sigma_i delta = delta sigma_i
  {
    Tri all = Tri::True;
    std::string witness;
    for (int i = 1; i <= instance.strands - 1; ++i) {
      PositiveWord lhs({instance.sigma(i)});
      lhs.letters.insert(lhs.letters.end(), instance.delta.letters.begin(),
                         instance.delta.letters.end());
      PositiveWord rhs = instance.delta;
      rhs.letters.push_back(instance.sigma(i));
      Tri t = equivalent(lhs, rhs);
      if (t != Tri::True) {
        all = t;
        witness = "i = " + std::to_string(i);
        break;
      }
    }
    record("aux.sigma-delta-commutes", all, witness);
  }
  // x delta = delta tilde-tau(x)
  {
    Tri all = Tri::True;
    std::string witness;
    for (Letter x = 0; x < static_cast<Letter>(instance.base_letters()); ++x) {
      PositiveWord lhs({x});
      lhs.letters.insert(lhs.letters.end(), instance.delta.letters.begin(),
                         instance.delta.letters.end());
      PositiveWord rhs = instance.delta;
      PositiveWord img = instance.tilde_tau_letter(x);
      rhs.letters.insert(rhs.letters.end(), img.letters.begin(), img.letters.end());
      Tri t = equivalent(lhs, rhs);
      if (t != Tri::True) {
        all = t;
        witness = "x = " + alphabet.name(x);
        break;
      }
    }
    record("aux.delta-conjugation-tilde-tau", all, witness);
  }
  // The A(B_n) fundamental element (b1 b2 ... bn)^n maps letter-for-letter
  // onto delta under b1 -> D, b_i -> s_{i-1}.
  {
    PositiveWord image;
    for (int rep = 0; rep < instance.strands; ++rep) {
      image.letters.insert(image.letters.end(), instance.base.d.letters.begin(),
                           instance.base.d.letters.end());
      for (int i = 2; i <= instance.strands; ++i) {
        image.letters.push_back(instance.sigma(i - 1));
      }
    }
    record("aux.deltaB-image", image == instance.delta ? Tri::True : Tri::False,
           "substituted word " + words::to_string(image, alphabet));
  }
  // Weights are tau-invariant (homogeneity of the twist relations needs this).
  {
    bool ok = true;
    for (const auto& [x, y] : instance.base.tau()) {
      if (instance.presentation.weights[static_cast<std::size_t>(x)] !=
          instance.presentation.weights[static_cast<std::size_t>(y)]) {
        ok = false;
        break;
      }
    }
    record("aux.weights-tau-invariant", ok ? Tri::True : Tri::False, "");
  }
  return report;
}

}  // namespace garlink::semidirect
