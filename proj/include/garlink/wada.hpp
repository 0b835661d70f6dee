#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "garlink/braidrep.hpp"
#include "garlink/linkinv.hpp"
#include "garlink/words.hpp"

namespace garlink::wada {

using words::Alphabet;
using words::SignedWord;

enum class WadaType { Type1, Type2, Type3 };

// The B_n actions on the free group F_n = <x1, ..., xn>:
//   type 1 (parameter h != 0):  x_k -> x_k^{-h} x_{k+1} x_k^h,  x_{k+1} -> x_k
//   type 2:                     x_k -> x_k x_{k+1}^{-1} x_k,    x_{k+1} -> x_k
//   type 3:                     x_k -> x_k^2 x_{k+1},           x_{k+1} -> x_{k+1}^{-1} x_k^{-1} x_{k+1}
struct WadaRep {
  WadaType kind = WadaType::Type1;
  int h = 1;     // used by type 1 only; must be non-zero
  int rank = 2;  // n

  Alphabet alphabet() const;
  void validate() const;
};

// Images of all generators under sigma_k^{sign}; index j-1 holds the image of x_j.
std::vector<SignedWord> generator_images(const WadaRep& rep, int k, int sign);

// Letterwise substitution followed by free reduction.
SignedWord wada_apply(const WadaRep& rep, int k, int sign, const SignedWord& w);
// Leftmost letter of beta acts first.
SignedWord wada_apply_braid(const WadaRep& rep, const braidrep::BraidWord& beta,
                            const SignedWord& w);

// phi(x_i) = x_i^{-1} conjugates rho_h^{(1)} to rho_{-h}^{(1)}. The corrupt
// flag swaps in the identity witness as a negative control.
bool check_inversion_witness(int h, int n, bool corrupt = false);

// phi(x_i) = y_{n-i+1} with y_i = x_1^2 ... x_{i-1}^2 x_i and mu(sigma_i) =
// sigma_{n-i} conjugate rho^{(3)} to rho^{(2)}; also checks the intermediate
// images rho^{(3)}(sigma_k)(y_i). The corrupt flag uses mu = id instead.
bool check_equivalence_witness_23(int n, bool corrupt_mu = false);

struct FixedSubgroupReport {
  bool generators_fixed = false;   // stated generators of F^{<sigma_i>} are fixed
  bool center_fixed = false;       // (x_n^h ... x_1^h)^r fixed by every sigma_i
  int sampled = 0;                 // random reduced words drawn
  int shaped = 0;                  // samples matching the fixed-word shape
  int moved = 0;                   // off-shape samples moved by some sigma_i
  bool converse_ok = false;        // every off-shape sample was moved
  bool passed() const { return generators_fixed && center_fixed && converse_ok; }
  std::string to_string() const;
};

FixedSubgroupReport fixed_subgroup_checks(int h, int n, int samples, std::uint64_t seed = 0);

// Induced matrix on H_1(F_n) in the basis [x_1], ..., [x_n] (columns are the
// images of the basis vectors).
linkinv::IntegerMatrix abelianized_action(const WadaRep& rep, const braidrep::BraidWord& beta);

// Braid relations hold on every generator (the maps are representations).
bool check_braid_relations(const WadaRep& rep);

}  // namespace garlink::wada
