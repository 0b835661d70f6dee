#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "garlink/freeprod.hpp"
#include "garlink/garside.hpp"
#include "garlink/words.hpp"

namespace garlink::braidrep {

using freeprod::FreeProduct;
using freeprod::FreeProductElement;
using words::Alphabet;
using words::PositiveWord;
using words::SignedWord;

// Generator names s1 ... s{n-1}; letter index k-1 stands for sigma_k.
Alphabet braid_alphabet(int strands);

struct BraidWord {
  int strands = 1;
  SignedWord letters;

  static BraidWord parse(int strands, const std::string& text);
  void validate() const;
  std::string to_string() const;

  bool operator==(const BraidWord& o) const {
    return strands == o.strands && letters == o.letters;
  }
};

// alpha^{-1} beta alpha, freely reduced; same strand count required.
BraidWord markov_conjugate(const BraidWord& beta, const BraidWord& alpha);
// beta sigma_n^{sign}, viewed in B_{n+1}.
BraidWord markov_stabilize(const BraidWord& beta, int sign);

// Image of the strand permutation (1-based): result[i-1] is where strand i ends.
std::vector<int> braid_permutation(const BraidWord& beta);

// The Artin type representation of B_n on G = H_1 * ... * H_n attached to
// the pair (H, h).
class ArtinRepresentation {
 public:
  ArtinRepresentation(std::shared_ptr<const freeprod::BaseGroup> base, SignedWord h, int strands);

  const FreeProduct& ambient() const { return ambient_; }
  int strands() const { return ambient_.factors(); }
  const SignedWord& distinguished() const { return h_; }

  FreeProductElement h_elem(int factor) const;          // phi_i(h)
  FreeProductElement generator(int factor, words::Letter x) const;  // phi_i(x)

  // tau_k (sign = +1) or its inverse (sign = -1) applied to g.
  FreeProductElement apply_generator(int k, int sign, const FreeProductElement& g) const;
  // Leftmost letter of beta acts first.
  FreeProductElement apply_braid(const BraidWord& beta, const FreeProductElement& g) const;

 private:
  FreeProduct ambient_;
  SignedWord h_;
};

// Positive braid monoid presentation of B_n and its half-twist Garside element.
garside::MonoidPresentation braid_presentation(int strands);
PositiveWord braid_delta(int strands);

// Shared verified Garside structure for B_n (built once per strand count).
std::shared_ptr<const garside::GarsideStructure> braid_structure(int strands);

// True iff beta represents 1 in B_n, decided by the fraction normal form.
bool braid_is_trivial(const BraidWord& beta, std::int64_t cap = 1'000'000);

}  // namespace garlink::braidrep
