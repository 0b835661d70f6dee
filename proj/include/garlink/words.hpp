#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace garlink::words {

using Letter = std::int32_t;

// A finite ordered set of generator names. Words store indices into it, so
// letter comparison is O(1) and independent of the names.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(Letter i) const { return names_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Letter> find(const std::string& name) const;

  bool operator==(const Alphabet& other) const { return names_ == other.names_; }
  bool operator!=(const Alphabet& other) const { return !(*this == other); }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Letter> index_;
};

// True if `name` is usable as a generator: non-empty, no whitespace, none of
// the reserved characters ^ - ( ) , ; #
bool valid_generator_name(const std::string& name);

struct PositiveWord {
  std::vector<Letter> letters;

  PositiveWord() = default;
  explicit PositiveWord(std::vector<Letter> ls) : letters(std::move(ls)) {}

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  Letter operator[](std::size_t i) const { return letters[i]; }

  bool operator==(const PositiveWord& o) const { return letters == o.letters; }
  bool operator!=(const PositiveWord& o) const { return letters != o.letters; }
};

// Shortlex order: by length first, then lexicographically by letter index.
bool shortlex_less(const PositiveWord& a, const PositiveWord& b);

PositiveWord concat(const PositiveWord& a, const PositiveWord& b);

struct SignedLetter {
  Letter index;
  int sign;  // +1 or -1

  bool operator==(const SignedLetter& o) const { return index == o.index && sign == o.sign; }
  bool operator!=(const SignedLetter& o) const { return !(*this == o); }
};

struct SignedWord {
  std::vector<SignedLetter> letters;

  SignedWord() = default;
  explicit SignedWord(std::vector<SignedLetter> ls) : letters(std::move(ls)) {}

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  const SignedLetter& operator[](std::size_t i) const { return letters[i]; }

  bool operator==(const SignedWord& o) const { return letters == o.letters; }
  bool operator!=(const SignedWord& o) const { return letters != o.letters; }
};

SignedWord concat(const SignedWord& a, const SignedWord& b);
SignedWord as_signed(const PositiveWord& w);
// (x1 ... xk)^{-1} = xk^{-1} ... x1^{-1}
SignedWord inverse(const SignedWord& w);
// u v^{-1}
SignedWord fraction_right(const PositiveWord& u, const PositiveWord& v);
// u^{-1} v
SignedWord fraction_left(const PositiveWord& u, const PositiveWord& v);
// Extracts the positive word; throws InputError if any letter is negative.
PositiveWord as_positive(const SignedWord& w);
std::int64_t exponent_sum(const SignedWord& w, Letter x);

// Iterated cancellation of adjacent x x^{-1} / x^{-1} x pairs. Idempotent.
SignedWord free_reduce(const SignedWord& w);

PositiveWord parse_positive_word(const std::string& text, const Alphabet& alphabet);
SignedWord parse_signed_word(const std::string& text, const Alphabet& alphabet);

std::string to_string(const PositiveWord& w, const Alphabet& alphabet);
std::string to_string(const SignedWord& w, const Alphabet& alphabet);

}  // namespace garlink::words
