#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "garlink/freeprod.hpp"
#include "garlink/garside.hpp"
#include "garlink/words.hpp"

namespace garlink::semidirect {

using words::Alphabet;
using words::Letter;
using words::PositiveWord;
using words::SignedWord;

// The base group H as the group of fractions of a Garside monoid M, together
// with a chosen positive expression D of the Garside element h. The
// certificate is verified with delta = D, which also yields the atom
// permutation tau (x·h = h·tau(x)).
struct GarsideBase {
  garside::MonoidPresentation presentation;
  garside::ComplementTable left;
  garside::ComplementTable right;
  PositiveWord d;
  garside::GarsideCertificate certificate;

  const std::map<Letter, Letter>& tau() const { return certificate.tau; }
  const std::map<Letter, Letter>& tau_inverse() const { return certificate.tau_inverse; }
  PositiveWord tau_word(const PositiveWord& w) const;
  PositiveWord tau_inverse_word(const PositiveWord& w) const;
  PositiveWord tau_power_word(const PositiveWord& w, int power) const;

  // Throws InputError when D fails the Garside criterion on M (names the
  // failing condition) or when some generator is not an atom.
  static GarsideBase build(garside::MonoidPresentation pres, garside::ComplementTable f,
                           garside::ComplementTable g, PositiveWord d,
                           const garside::VerifyOptions& opts = {});
  // H = Z with D = a^exponent, exponent >= 1.
  static GarsideBase integers(std::int64_t exponent, const garside::VerifyOptions& opts = {});
};

// The presentation data of M~ = (M_1 * ... * M_n) ⋊ B_n^+ built from (H, D, n):
// generators S ∪ {s1..s{n-1}}, the induced complement tables F and G, and
// the Garside element (D s1 ... s{n-1})^n.
struct SemidirectInstance {
  GarsideBase base;
  int strands = 2;
  garside::MonoidPresentation presentation;
  garside::ComplementTable F;
  garside::ComplementTable G;
  PositiveWord delta;

  std::size_t base_letters() const { return base.presentation.alphabet.size(); }
  Letter sigma(int i) const;  // letter index of sigma_i, 1 <= i <= strands-1
  bool is_sigma(Letter x) const { return static_cast<std::size_t>(x) >= base_letters(); }
  // Base letter of M embedded into the instance alphabet (indices coincide).
  PositiveWord embed_base(const PositiveWord& w) const { return w; }

  // U = s1 D s1 . s2 s3 ... s{n-1}
  PositiveWord u_word() const;
  // tilde-tau on letters: sigma_i fixed, x -> tau^n(x).
  PositiveWord tilde_tau_letter(Letter x) const;
  PositiveWord tilde_tau_word(const PositiveWord& w) const;

  // phi(phi_i(y)) = s_{i-1}^{-1}..s_1^{-1} D^{i-1} y D^{1-i} s_1..s_{i-1}
  SignedWord embed_factor_word(int factor, const SignedWord& base_word) const;
  SignedWord embed_element(const freeprod::FreeProductElement& g) const;
};

garside::MonoidPresentation build_presentation(const GarsideBase& base, int strands);
std::pair<garside::ComplementTable, garside::ComplementTable> build_complement_tables(
    const GarsideBase& base, int strands);
PositiveWord garside_delta(const GarsideBase& base, int strands);

SemidirectInstance build_instance(const GarsideBase& base, int strands);

struct StructureReport {
  garside::GarsideCertificate certificate;
  std::vector<garside::CheckRecord> auxiliary;
  bool passed() const;
  std::string report(const Alphabet& alphabet) const;
};

// Runs the full Garside criterion on (presentation, F, G, delta) and the
// auxiliary identities: delta = D U^{n-1}, xU = U tau(x), sigma_i delta =
// delta sigma_i, x delta = delta tilde-tau(x), and the image of the A(B_n)
// fundamental element.
StructureReport verify_semidirect_structure(const SemidirectInstance& instance,
                               const garside::VerifyOptions& opts = {});

}  // namespace garlink::semidirect
