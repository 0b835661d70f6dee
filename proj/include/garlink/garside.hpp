#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "garlink/words.hpp"

namespace garlink::garside {

using words::Alphabet;
using words::Letter;
using words::PositiveWord;
using words::SignedWord;

// Generators with positive integer weights plus positive-word relation pairs.
// Weight-homogeneous relations give the additive norm that certifies atomicity.
struct MonoidPresentation {
  Alphabet alphabet;
  std::vector<std::int64_t> weights;
  std::vector<std::pair<PositiveWord, PositiveWord>> relations;

  static MonoidPresentation unit_weights(
      Alphabet alphabet, std::vector<std::pair<PositiveWord, PositiveWord>> relations);

  // Structural validation: weights sized and positive, relation letters in range.
  void validate() const;

  // Description of the first weight-unbalanced relation, or nullopt if all balance.
  std::optional<std::string> homogeneity_witness() const;

  std::int64_t norm(const PositiveWord& w) const;
};

// The function f: S x S -> S* with f(x,x) = empty. Off-diagonal entries may be
// absent, which encodes "no common multiple" (reversing blocks there).
class ComplementTable {
 public:
  ComplementTable() = default;
  explicit ComplementTable(Alphabet alphabet);

  const Alphabet& alphabet() const { return alphabet_; }
  void set(Letter x, Letter y, PositiveWord w);
  const std::optional<PositiveWord>& entry(Letter x, Letter y) const;
  bool total() const;

  // Derive a left table from relations x·u = y·v (each unordered pair of
  // distinct letters may head at most one relation).
  static ComplementTable derive_left(const MonoidPresentation& pres);
  // Derive a right table from relations p·x = q·y (reading last letters).
  static ComplementTable derive_right(const MonoidPresentation& pres);

  // The relations x f(x,y) = y f(y,x) induced by a left table (x < y, both present).
  std::vector<std::pair<PositiveWord, PositiveWord>> left_relations() const;
  // The relations g(y,x) x = g(x,y) y induced by a right table.
  std::vector<std::pair<PositiveWord, PositiveWord>> right_relations() const;

 private:
  Alphabet alphabet_;
  std::vector<std::vector<std::optional<PositiveWord>>> entries_;
};

enum class Strategy { Leftmost, Rightmost, Random };

struct ReversalOutcome {
  enum class Status { Converged, Diverged, Blocked };

  Status status = Status::Converged;
  // Converged left reversing ends at left·right^{-1}; right reversing at
  // left^{-1}·right.
  PositiveWord left;
  PositiveWord right;
  std::int64_t steps = 0;
  std::int64_t cap = 0;
  // Blocked: the ordered pair whose table entry is missing.
  Letter blocked_x = -1;
  Letter blocked_y = -1;

  bool converged() const { return status == Status::Converged; }
};

// Repeatedly replace x^{-1}y by f(x,y) f(y,x)^{-1} until the word has the
// shape u v^{-1} or the budget runs out. Confluent, so the strategy only
// affects which identical run is taken; Leftmost is the deterministic default.
ReversalOutcome reverse_left(const SignedWord& w, const ComplementTable& f, std::int64_t cap,
                             Strategy strategy = Strategy::Leftmost, std::uint64_t seed = 0);

// Mirror image: replace y x^{-1} by g(x,y)^{-1} g(y,x), ending at u^{-1} v.
ReversalOutcome reverse_right(const SignedWord& w, const ComplementTable& g, std::int64_t cap,
                              Strategy strategy = Strategy::Leftmost, std::uint64_t seed = 0);

enum class Tri { False = 0, True = 1, Diverged = 2 };

// u ≡ v in the left-complemented monoid: u^{-1}v left-reverses to the empty word.
Tri equal_left(const PositiveWord& u, const PositiveWord& v, const ComplementTable& f,
               std::int64_t cap);
// u ≡ v in the right-complemented monoid: u v^{-1} right-reverses to the empty word.
Tri equal_right(const PositiveWord& u, const PositiveWord& v, const ComplementTable& g,
                std::int64_t cap);
// Double-reversing equality: both of the above must vanish.
Tri words_equivalent(const PositiveWord& u, const PositiveWord& v, const ComplementTable& f,
                     const ComplementTable& g, std::int64_t cap);

// u ≤_L v, decided by reversing u^{-1}v and asking for an empty second
// component. Throws DivergenceError when the budget runs out.
bool left_divides(const PositiveWord& u, const PositiveWord& v, const ComplementTable& f,
                  std::int64_t cap);
Tri left_divides_tri(const PositiveWord& u, const PositiveWord& v, const ComplementTable& f,
                     std::int64_t cap);
// u ≤_R v (some c with c·u = v), via right reversing of v·u^{-1}.
bool right_divides(const PositiveWord& u, const PositiveWord& v, const ComplementTable& g,
                   std::int64_t cap);
Tri right_divides_tri(const PositiveWord& u, const PositiveWord& v, const ComplementTable& g,
                      std::int64_t cap);

// Representative of u ∨_L v, namely u·C_L(u,v).
PositiveWord join_left(const PositiveWord& u, const PositiveWord& v, const ComplementTable& f,
                       std::int64_t cap);
// Representative of u ∨_R v.
PositiveWord join_right(const PositiveWord& u, const PositiveWord& v, const ComplementTable& g,
                        std::int64_t cap);
// The word c with u·c ≡ v; requires u ≤_L v.
PositiveWord left_quotient(const PositiveWord& u, const PositiveWord& v, const ComplementTable& f,
                           std::int64_t cap);
// The word c with c·u ≡ v; requires u ≤_R v.
PositiveWord right_quotient(const PositiveWord& u, const PositiveWord& v,
                            const ComplementTable& g, std::int64_t cap);
// Representative of u ∧_L v via (u ∨_L v) /_R ((u\_L v) ∨_R (v\_L u)).
PositiveWord meet_left(const PositiveWord& u, const PositiveWord& v, const ComplementTable& f,
                       const ComplementTable& g, std::int64_t cap);

struct TripleRecord {
  Letter x, y, z;
  Tri verdict;  // True = coherent, False = violated, Diverged = undecided
  std::string detail;
};

struct CoherenceReport {
  std::int64_t triples = 0;
  std::vector<TripleRecord> failures;   // verdict False
  std::vector<TripleRecord> undecided;  // verdict Diverged
  bool all_pass() const { return failures.empty() && undecided.empty(); }
};

CoherenceReport check_coherence_left(const ComplementTable& f, std::int64_t cap);
CoherenceReport check_coherence_right(const ComplementTable& g, std::int64_t cap);

// Shortlex-least word obtainable from w by single relation applications.
// Exact canonical form for the congruence (relations preserve the norm, so
// the closure is finite); budget guards against blowup.
PositiveWord canonical_rep(const PositiveWord& w, const MonoidPresentation& pres,
                           std::int64_t budget = 2'000'000);

// Brute-force oracle: all congruence classes of positive words of norm <= bound.
class Ball {
 public:
  using ClassId = std::int32_t;

  static Ball enumerate(const MonoidPresentation& pres, std::int64_t norm_bound,
                        std::int64_t word_budget = 4'000'000);

  std::size_t class_count() const { return classes_.size(); }
  std::int64_t norm_bound() const { return bound_; }
  std::optional<ClassId> find(const PositiveWord& w) const;
  ClassId class_of(const PositiveWord& w) const;
  const PositiveWord& canonical(ClassId c) const { return classes_[static_cast<std::size_t>(c)].canonical; }
  std::int64_t norm(ClassId c) const { return classes_[static_cast<std::size_t>(c)].norm; }
  ClassId identity() const;

  // nullopt when the product's norm exceeds the bound.
  std::optional<ClassId> multiply(ClassId a, ClassId b) const;
  bool divides_left(ClassId a, ClassId b) const;
  bool divides_right(ClassId a, ClassId b) const;
  bool has_common_upper_left(ClassId a, ClassId b) const;
  // Least common upper bound within the ball, if one exists.
  std::optional<ClassId> lub_left(ClassId a, ClassId b) const;
  std::optional<ClassId> glb_left(ClassId a, ClassId b) const;
  std::vector<ClassId> all_classes() const;
  const std::vector<ClassId>& classes_of_norm(std::int64_t n) const;

 private:
  struct ClassInfo {
    PositiveWord canonical;
    std::int64_t norm = 0;
  };

  std::int64_t bound_ = 0;
  std::vector<ClassInfo> classes_;
  std::unordered_map<std::string, ClassId> index_;  // packed word -> class
  std::vector<std::vector<ClassId>> by_norm_;
  static std::string pack(const PositiveWord& w);
};

struct CheckRecord {
  std::string name;
  enum class Status { Pass, Fail, Diverged } status = Status::Pass;
  std::string detail;
};

// Outcome of the Garside criterion on (presentation, f, g, delta): per-condition
// evidence, the divisor sets L(delta) and R(delta), and the atom permutation tau.
struct GarsideCertificate {
  PositiveWord delta;
  std::vector<Letter> atoms;
  std::vector<PositiveWord> left_divisors;   // canonical words, shortlex-sorted
  std::vector<PositiveWord> right_divisors;  // canonical words, shortlex-sorted
  std::map<Letter, Letter> tau;
  std::map<Letter, Letter> tau_inverse;
  std::vector<CheckRecord> checks;

  bool passed() const;
  const CheckRecord* check(const std::string& name) const;
  std::string report(const Alphabet& alphabet, const std::string& indent = "") const;
};

struct VerifyOptions {
  std::int64_t cap = 1'000'000;          // reversal step budget
  std::int64_t class_budget = 2'000'000; // canonicalization closure budget
  std::int64_t divisor_budget = 100'000; // max divisor-set size
  int random_word_checks = 100;          // samples for w·delta = delta·tau(w)
  std::uint64_t seed = 0;
};

GarsideCertificate verify_garside(const MonoidPresentation& pres, const ComplementTable& f,
                                  const ComplementTable& g, const PositiveWord& delta,
                                  const VerifyOptions& opts = {});

// A presentation together with complement tables and a verified certificate;
// carries the normal-form and word-problem machinery.
class GarsideStructure {
 public:
  GarsideStructure(MonoidPresentation pres, ComplementTable f, ComplementTable g,
                   PositiveWord delta, const VerifyOptions& opts = {});

  const MonoidPresentation& presentation() const { return pres_; }
  const Alphabet& alphabet() const { return pres_.alphabet; }
  const ComplementTable& left_table() const { return f_; }
  const ComplementTable& right_table() const { return g_; }
  const GarsideCertificate& certificate() const { return cert_; }
  const PositiveWord& delta() const { return cert_.delta; }
  bool verified() const { return cert_.passed(); }

  // Greedy factorization w = pi(w)·pi(d(w))·...; factors are canonical words
  // of elements of L(delta) \ {1}. Requires a passing certificate.
  std::vector<PositiveWord> greedy_normal_form(const PositiveWord& w, std::int64_t cap) const;
  // The fraction pair (a, b) with w = a^{-1} b and a ∧_L b = 1, both sides
  // emitted as greedy normal-form concatenations.
  std::pair<PositiveWord, PositiveWord> group_normal_form(const SignedWord& w,
                                                          std::int64_t cap) const;
  bool group_equal(const SignedWord& a, const SignedWord& b, std::int64_t cap) const;
  bool group_trivial(const SignedWord& w, std::int64_t cap) const;
  // Monoid-level double-reversing equality of positive words.
  bool monoid_equal(const PositiveWord& a, const PositiveWord& b, std::int64_t cap) const;

  PositiveWord tau_word(const PositiveWord& w) const;
  PositiveWord tau_inverse_word(const PositiveWord& w) const;

  // Canonical word of the whole class (exact; used for small elements).
  PositiveWord canonical(const PositiveWord& w) const;

 private:
  void require_verified() const;

  MonoidPresentation pres_;
  ComplementTable f_;
  ComplementTable g_;
  GarsideCertificate cert_;
  std::int64_t class_budget_;
};

const char* to_string(CheckRecord::Status s);

}  // namespace garlink::garside
