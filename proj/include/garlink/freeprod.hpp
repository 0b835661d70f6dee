#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "garlink/garside.hpp"
#include "garlink/words.hpp"

namespace garlink::freeprod {

using words::Alphabet;
using words::PositiveWord;
using words::SignedWord;

// A base group H with solvable word problem, given by a canonical-form
// procedure over signed words in its generators.
class BaseGroup {
 public:
  virtual ~BaseGroup() = default;

  virtual const Alphabet& alphabet() const = 0;
  // Group relations as positive-word pairs (empty for free generators).
  virtual const std::vector<std::pair<PositiveWord, PositiveWord>>& relations() const = 0;
  // Canonical form: u and v represent the same element of H iff their
  // canonical forms are identical; the identity maps to the empty word.
  virtual SignedWord normal_form(const SignedWord& w) const = 0;
  virtual std::string describe() const = 0;

  bool word_problem(const SignedWord& u, const SignedWord& v) const {
    return normal_form(u) == normal_form(v);
  }
  bool is_identity(const SignedWord& w) const { return normal_form(w).empty(); }
};

// H = Z = <a>; canonical form a^k.
std::shared_ptr<const BaseGroup> make_integers();
// H = Z/k (k >= 2), presented as <a | a^k = 1>; canonical form a^r, 0 <= r < k.
std::shared_ptr<const BaseGroup> make_cyclic(std::int64_t modulus);
// H = group of fractions of a verified Garside monoid; canonical form is the
// fraction normal form a^{-1} b serialized as a signed word.
std::shared_ptr<const BaseGroup> make_garside_group(
    std::shared_ptr<const garside::GarsideStructure> structure, std::int64_t cap = 1'000'000);

// An element h of H known to be non-trivial.
struct DistinguishedElement {
  SignedWord word;
  std::optional<std::int64_t> order_hint;
};

DistinguishedElement make_distinguished(const BaseGroup& base, const SignedWord& word,
                                        std::optional<std::int64_t> order_hint = std::nullopt);

struct Syllable {
  int factor;          // 1-based factor index
  SignedWord content;  // canonical form of a non-trivial element of H

  bool operator==(const Syllable& o) const { return factor == o.factor && content == o.content; }
  bool operator!=(const Syllable& o) const { return !(*this == o); }
};

// Normal form in H_1 * ... * H_n: alternating syllables, none trivial.
struct FreeProductElement {
  std::vector<Syllable> syllables;

  bool is_identity() const { return syllables.empty(); }
  bool operator==(const FreeProductElement& o) const { return syllables == o.syllables; }
  bool operator!=(const FreeProductElement& o) const { return !(*this == o); }
};

// The ambient group G = H_1 * ... * H_n for a fixed base H and factor count n.
class FreeProduct {
 public:
  FreeProduct(std::shared_ptr<const BaseGroup> base, int n);

  int factors() const { return n_; }
  const BaseGroup& base() const { return *base_; }
  std::shared_ptr<const BaseGroup> base_ptr() const { return base_; }

  FreeProductElement identity() const { return {}; }
  // phi_i applied to the element of H represented by w.
  FreeProductElement inject(int factor, const SignedWord& w) const;
  FreeProductElement multiply(const FreeProductElement& a, const FreeProductElement& b) const;
  FreeProductElement inverse(const FreeProductElement& g) const;
  FreeProductElement conjugate(const FreeProductElement& by, const FreeProductElement& g) const;
  FreeProductElement power(const FreeProductElement& g, std::int64_t k) const;
  bool equals(const FreeProductElement& a, const FreeProductElement& b) const;

  std::pair<std::optional<Syllable>, std::optional<Syllable>> boundary_syllables(
      const FreeProductElement& g) const;

  std::string to_string(const FreeProductElement& g) const;

 private:
  void check_element(const FreeProductElement& g) const;

  std::shared_ptr<const BaseGroup> base_;
  int n_;
};

}  // namespace garlink::freeprod
