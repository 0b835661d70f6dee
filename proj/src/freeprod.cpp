#include "garlink/freeprod.hpp"

#include <sstream>

#include "garlink/errors.hpp"

namespace garlink::freeprod {

using words::Letter;
using words::SignedLetter;

namespace {

class IntegersGroup final : public BaseGroup {
 public:
  IntegersGroup() : alphabet_({"a"}) {}

  const Alphabet& alphabet() const override { return alphabet_; }
  const std::vector<std::pair<PositiveWord, PositiveWord>>& relations() const override {
    return relations_;
  }
  SignedWord normal_form(const SignedWord& w) const override {
    std::int64_t k = words::exponent_sum(w, 0);
    SignedWord out;
    int sign = k >= 0 ? +1 : -1;
    for (std::int64_t i = 0; i < (k >= 0 ? k : -k); ++i) out.letters.push_back({0, sign});
    return out;
  }
  std::string describe() const override { return "Z"; }

 private:
  Alphabet alphabet_;
  std::vector<std::pair<PositiveWord, PositiveWord>> relations_;
};

class CyclicGroup final : public BaseGroup {
 public:
  explicit CyclicGroup(std::int64_t modulus) : alphabet_({"a"}), modulus_(modulus) {
    if (modulus < 2) throw InputError("cyclic base group needs modulus >= 2");
    PositiveWord ak;
    for (std::int64_t i = 0; i < modulus; ++i) ak.letters.push_back(0);
    relations_.emplace_back(ak, PositiveWord{});
  }

  const Alphabet& alphabet() const override { return alphabet_; }
  const std::vector<std::pair<PositiveWord, PositiveWord>>& relations() const override {
    return relations_;
  }
  SignedWord normal_form(const SignedWord& w) const override {
    std::int64_t k = words::exponent_sum(w, 0) % modulus_;
    if (k < 0) k += modulus_;
    SignedWord out;
    for (std::int64_t i = 0; i < k; ++i) out.letters.push_back({0, +1});
    return out;
  }
  std::string describe() const override { return "Z/" + std::to_string(modulus_); }

 private:
  Alphabet alphabet_;
  std::int64_t modulus_;
  std::vector<std::pair<PositiveWord, PositiveWord>> relations_;
};

class GarsideGroup final : public BaseGroup {
 public:
  GarsideGroup(std::shared_ptr<const garside::GarsideStructure> s, std::int64_t cap)
      : structure_(std::move(s)), cap_(cap) {
    if (!structure_->verified()) {
      throw InputError("base group requires a passing Garside certificate");
    }
  }

  const Alphabet& alphabet() const override { return structure_->alphabet(); }
  const std::vector<std::pair<PositiveWord, PositiveWord>>& relations() const override {
    return structure_->presentation().relations;
  }
  SignedWord normal_form(const SignedWord& w) const override {
    auto [a, b] = structure_->group_normal_form(w, cap_);
    return words::concat(words::inverse(words::as_signed(a)), words::as_signed(b));
  }
  std::string describe() const override { return "garside-group"; }

 private:
  std::shared_ptr<const garside::GarsideStructure> structure_;
  std::int64_t cap_;
};

}  // namespace

std::shared_ptr<const BaseGroup> make_integers() { return std::make_shared<IntegersGroup>(); }

std::shared_ptr<const BaseGroup> make_cyclic(std::int64_t modulus) {
  return std::make_shared<CyclicGroup>(modulus);
}

std::shared_ptr<const BaseGroup> make_garside_group(
    std::shared_ptr<const garside::GarsideStructure> structure, std::int64_t cap) {
  return std::make_shared<GarsideGroup>(std::move(structure), cap);
}

DistinguishedElement make_distinguished(const BaseGroup& base, const SignedWord& word,
                                        std::optional<std::int64_t> order_hint) {
  if (base.is_identity(word)) {
    throw InputError("distinguished element must be non-trivial in the base group");
  }
  return {base.normal_form(word), order_hint};
}

FreeProduct::FreeProduct(std::shared_ptr<const BaseGroup> base, int n)
    : base_(std::move(base)), n_(n) {
  if (!base_) throw InputError("free product needs a base group");
  if (n_ < 1) throw InputError("free product needs at least one factor");
}

void FreeProduct::check_element(const FreeProductElement& g) const {
  int last = 0;
  for (const Syllable& s : g.syllables) {
    if (s.factor < 1 || s.factor > n_) {
      throw InputError("syllable factor index out of range (mismatched ambient group?)");
    }
    if (s.factor == last) throw InputError("adjacent syllables share a factor");
    last = s.factor;
  }
}

FreeProductElement FreeProduct::inject(int factor, const SignedWord& w) const {
  if (factor < 1 || factor > n_) throw InputError("factor index out of range");
  SignedWord nf = base_->normal_form(w);
  if (nf.empty()) return {};
  return {{Syllable{factor, std::move(nf)}}};
}

FreeProductElement FreeProduct::multiply(const FreeProductElement& a,
                                         const FreeProductElement& b) const {
  check_element(a);
  check_element(b);
  std::vector<Syllable> stack = a.syllables;
  for (const Syllable& s : b.syllables) {
    if (stack.empty() || stack.back().factor != s.factor) {
      stack.push_back(s);
      continue;
    }
    SignedWord merged = base_->normal_form(words::concat(stack.back().content, s.content));
    if (merged.empty()) {
      stack.pop_back();  // syllables cancelled; boundary may cascade
    } else {
      stack.back().content = std::move(merged);
    }
  }
  return {std::move(stack)};
}

FreeProductElement FreeProduct::inverse(const FreeProductElement& g) const {
  check_element(g);
  FreeProductElement out;
  out.syllables.reserve(g.syllables.size());
  for (auto it = g.syllables.rbegin(); it != g.syllables.rend(); ++it) {
    out.syllables.push_back({it->factor, base_->normal_form(words::inverse(it->content))});
  }
  return out;
}

FreeProductElement FreeProduct::conjugate(const FreeProductElement& by,
                                          const FreeProductElement& g) const {
  return multiply(multiply(inverse(by), g), by);
}

FreeProductElement FreeProduct::power(const FreeProductElement& g, std::int64_t k) const {
  FreeProductElement base = k >= 0 ? g : inverse(g);
  std::int64_t count = k >= 0 ? k : -k;
  FreeProductElement out;
  for (std::int64_t i = 0; i < count; ++i) out = multiply(out, base);
  return out;
}

bool FreeProduct::equals(const FreeProductElement& a, const FreeProductElement& b) const {
  check_element(a);
  check_element(b);
  return a == b;
}

std::pair<std::optional<Syllable>, std::optional<Syllable>> FreeProduct::boundary_syllables(
    const FreeProductElement& g) const {
  check_element(g);
  if (g.syllables.empty()) return {std::nullopt, std::nullopt};
  return {g.syllables.front(), g.syllables.back()};
}

std::string FreeProduct::to_string(const FreeProductElement& g) const {
  if (g.is_identity()) return "1";
  std::ostringstream out;
  for (std::size_t i = 0; i < g.syllables.size(); ++i) {
    if (i) out << " . ";
    const Syllable& s = g.syllables[i];
    out << "phi" << s.factor << "(" << words::to_string(s.content, base_->alphabet()) << ")";
  }
  return out.str();
}

}  // namespace garlink::freeprod
