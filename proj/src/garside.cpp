#include "garlink/garside.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>

#include "garlink/errors.hpp"
#include "garlink/rng.hpp"

namespace garlink::garside {

// ---------------------------------------------------------------------------
// MonoidPresentation

MonoidPresentation MonoidPresentation::unit_weights(
    Alphabet alphabet, std::vector<std::pair<PositiveWord, PositiveWord>> relations) {
  MonoidPresentation p;
  p.weights.assign(alphabet.size(), 1);
  p.alphabet = std::move(alphabet);
  p.relations = std::move(relations);
  return p;
}

void MonoidPresentation::validate() const {
  if (weights.size() != alphabet.size()) {
    throw InputError("presentation has " + std::to_string(weights.size()) + " weights for " +
                     std::to_string(alphabet.size()) + " generators");
  }
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] < 1) {
      throw InputError("generator '" + alphabet.name(static_cast<Letter>(i)) +
                       "' has non-positive weight");
    }
  }
  auto check_word = [&](const PositiveWord& w) {
    for (Letter x : w.letters) {
      if (x < 0 || static_cast<std::size_t>(x) >= alphabet.size()) {
        throw InputError("relation letter index out of range");
      }
    }
  };
  for (const auto& [l, r] : relations) {
    check_word(l);
    check_word(r);
  }
}

std::optional<std::string> MonoidPresentation::homogeneity_witness() const {
  for (const auto& [l, r] : relations) {
    if (norm(l) != norm(r)) {
      return "relation '" + words::to_string(l, alphabet) + " = " + words::to_string(r, alphabet) +
             "' has weights " + std::to_string(norm(l)) + " vs " + std::to_string(norm(r));
    }
  }
  return std::nullopt;
}

std::int64_t MonoidPresentation::norm(const PositiveWord& w) const {
  std::int64_t s = 0;
  for (Letter x : w.letters) s += weights.at(static_cast<std::size_t>(x));
  return s;
}

// ---------------------------------------------------------------------------
// ComplementTable

ComplementTable::ComplementTable(Alphabet alphabet) : alphabet_(std::move(alphabet)) {
  entries_.assign(alphabet_.size(), std::vector<std::optional<PositiveWord>>(alphabet_.size()));
  for (std::size_t x = 0; x < alphabet_.size(); ++x) {
    entries_[x][x] = PositiveWord{};  // f(x,x) = empty word
  }
}

void ComplementTable::set(Letter x, Letter y, PositiveWord w) {
  if (x == y && !w.empty()) {
    throw InputError("diagonal complement entries must be empty");
  }
  entries_.at(static_cast<std::size_t>(x)).at(static_cast<std::size_t>(y)) = std::move(w);
}

const std::optional<PositiveWord>& ComplementTable::entry(Letter x, Letter y) const {
  return entries_.at(static_cast<std::size_t>(x)).at(static_cast<std::size_t>(y));
}

bool ComplementTable::total() const {
  for (const auto& row : entries_) {
    for (const auto& e : row) {
      if (!e) return false;
    }
  }
  return true;
}

ComplementTable ComplementTable::derive_left(const MonoidPresentation& pres) {
  ComplementTable t(pres.alphabet);
  for (const auto& [l, r] : pres.relations) {
    if (l.empty() || r.empty()) {
      throw InputError("cannot derive complements from a relation with an empty side");
    }
    Letter x = l[0];
    Letter y = r[0];
    if (x == y) {
      throw InputError("cannot derive a left complement: relation sides start with the same "
                       "letter '" + pres.alphabet.name(x) + "'");
    }
    if (t.entry(x, y) || t.entry(y, x)) {
      throw InputError("pair (" + pres.alphabet.name(x) + ", " + pres.alphabet.name(y) +
                       ") heads more than one relation; provide an explicit table");
    }
    PositiveWord fx(std::vector<Letter>(l.letters.begin() + 1, l.letters.end()));
    PositiveWord fy(std::vector<Letter>(r.letters.begin() + 1, r.letters.end()));
    t.set(x, y, std::move(fx));
    t.set(y, x, std::move(fy));
  }
  return t;
}

ComplementTable ComplementTable::derive_right(const MonoidPresentation& pres) {
  ComplementTable t(pres.alphabet);
  for (const auto& [l, r] : pres.relations) {
    if (l.empty() || r.empty()) {
      throw InputError("cannot derive complements from a relation with an empty side");
    }
    Letter x = l[l.size() - 1];
    Letter y = r[r.size() - 1];
    if (x == y) {
      throw InputError("cannot derive a right complement: relation sides end with the same "
                       "letter '" + pres.alphabet.name(x) + "'");
    }
    if (t.entry(x, y) || t.entry(y, x)) {
      throw InputError("pair (" + pres.alphabet.name(x) + ", " + pres.alphabet.name(y) +
                       ") tails more than one relation; provide an explicit table");
    }
    // l = p·x, r = q·y matches g(y,x)·x = g(x,y)·y.
    PositiveWord p(std::vector<Letter>(l.letters.begin(), l.letters.end() - 1));
    PositiveWord q(std::vector<Letter>(r.letters.begin(), r.letters.end() - 1));
    t.set(y, x, std::move(p));
    t.set(x, y, std::move(q));
  }
  return t;
}

std::vector<std::pair<PositiveWord, PositiveWord>> ComplementTable::left_relations() const {
  std::vector<std::pair<PositiveWord, PositiveWord>> rels;
  const auto n = static_cast<Letter>(alphabet_.size());
  for (Letter x = 0; x < n; ++x) {
    for (Letter y = x + 1; y < n; ++y) {
      const auto& fxy = entry(x, y);
      const auto& fyx = entry(y, x);
      if (!fxy || !fyx) continue;
      PositiveWord l(std::vector<Letter>{x});
      PositiveWord r(std::vector<Letter>{y});
      rels.emplace_back(words::concat(l, *fxy), words::concat(r, *fyx));
    }
  }
  return rels;
}

std::vector<std::pair<PositiveWord, PositiveWord>> ComplementTable::right_relations() const {
  std::vector<std::pair<PositiveWord, PositiveWord>> rels;
  const auto n = static_cast<Letter>(alphabet_.size());
  for (Letter x = 0; x < n; ++x) {
    for (Letter y = x + 1; y < n; ++y) {
      const auto& gyx = entry(y, x);
      const auto& gxy = entry(x, y);
      if (!gyx || !gxy) continue;
      PositiveWord l(std::vector<Letter>{x});
      PositiveWord r(std::vector<Letter>{y});
      rels.emplace_back(words::concat(*gyx, l), words::concat(*gxy, r));
    }
  }
  return rels;
}

// ---------------------------------------------------------------------------
// Reversing

namespace {

using words::SignedLetter;

// Pattern position for left reversing: w[i] negative, w[i+1] positive.
// For right reversing: w[i] positive, w[i+1] negative.
bool is_pattern(const std::vector<SignedLetter>& w, std::size_t i, bool left) {
  if (left) return w[i].sign < 0 && w[i + 1].sign > 0;
  return w[i].sign > 0 && w[i + 1].sign < 0;
}

std::vector<std::size_t> pattern_positions(const std::vector<SignedLetter>& w, bool left) {
  std::vector<std::size_t> ps;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (is_pattern(w, i, left)) ps.push_back(i);
  }
  return ps;
}

ReversalOutcome reverse_impl(const SignedWord& input, const ComplementTable& table,
                             std::int64_t cap, Strategy strategy, std::uint64_t seed, bool left) {
  ReversalOutcome out;
  out.cap = cap;
  std::vector<SignedLetter> w = input.letters;
  Rng rng(seed);

  std::size_t resume = 0;  // leftmost-scan resume point
  while (true) {
    std::size_t pos = 0;
    bool found = false;
    if (strategy == Strategy::Leftmost) {
      for (std::size_t i = resume; i + 1 < w.size(); ++i) {
        if (is_pattern(w, i, left)) {
          pos = i;
          found = true;
          break;
        }
      }
    } else {
      auto ps = pattern_positions(w, left);
      if (!ps.empty()) {
        found = true;
        if (strategy == Strategy::Rightmost) {
          pos = ps.back();
        } else {
          pos = ps[rng.below(ps.size())];
        }
      }
    }
    if (!found) break;
    if (out.steps >= cap) {
      out.status = ReversalOutcome::Status::Diverged;
      return out;
    }

    Letter x, y;
    if (left) {
      x = w[pos].index;      // x^{-1} y
      y = w[pos + 1].index;
    } else {
      y = w[pos].index;      // y x^{-1}
      x = w[pos + 1].index;
    }
    const auto& fxy = table.entry(x, y);
    const auto& fyx = table.entry(y, x);
    if (!fxy || !fyx) {
      out.status = ReversalOutcome::Status::Blocked;
      out.blocked_x = x;
      out.blocked_y = y;
      return out;
    }

    std::vector<SignedLetter> repl;
    repl.reserve(fxy->size() + fyx->size());
    if (left) {
      // x^{-1} y  ->  f(x,y) f(y,x)^{-1}
      for (Letter a : fxy->letters) repl.push_back({a, +1});
      for (auto it = fyx->letters.rbegin(); it != fyx->letters.rend(); ++it)
        repl.push_back({*it, -1});
    } else {
      // y x^{-1}  ->  g(x,y)^{-1} g(y,x)
      for (auto it = fxy->letters.rbegin(); it != fxy->letters.rend(); ++it)
        repl.push_back({*it, -1});
      for (Letter a : fyx->letters) repl.push_back({a, +1});
    }
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(pos),
            w.begin() + static_cast<std::ptrdiff_t>(pos) + 2);
    w.insert(w.begin() + static_cast<std::ptrdiff_t>(pos), repl.begin(), repl.end());
    ++out.steps;
    resume = pos == 0 ? 0 : pos - 1;
  }

  // Terminal shape: left reversing ends positive-then-negative, right
  // reversing negative-then-positive.
  std::size_t split = 0;
  if (left) {
    while (split < w.size() && w[split].sign > 0) ++split;
    for (std::size_t i = split; i < w.size(); ++i) out.right.letters.push_back(w[i].index);
    std::reverse(out.right.letters.begin(), out.right.letters.end());
    for (std::size_t i = 0; i < split; ++i) out.left.letters.push_back(w[i].index);
  } else {
    while (split < w.size() && w[split].sign < 0) ++split;
    for (std::size_t i = 0; i < split; ++i) out.left.letters.push_back(w[i].index);
    std::reverse(out.left.letters.begin(), out.left.letters.end());
    for (std::size_t i = split; i < w.size(); ++i) out.right.letters.push_back(w[i].index);
  }
  return out;
}

}  // namespace

ReversalOutcome reverse_left(const SignedWord& w, const ComplementTable& f, std::int64_t cap,
                             Strategy strategy, std::uint64_t seed) {
  return reverse_impl(w, f, cap, strategy, seed, /*left=*/true);
}

ReversalOutcome reverse_right(const SignedWord& w, const ComplementTable& g, std::int64_t cap,
                              Strategy strategy, std::uint64_t seed) {
  return reverse_impl(w, g, cap, strategy, seed, /*left=*/false);
}

// ---------------------------------------------------------------------------
// Equality, divisibility, lattice operations

Tri equal_left(const PositiveWord& u, const PositiveWord& v, const ComplementTable& f,
               std::int64_t cap) {
  auto ro = reverse_left(words::fraction_left(u, v), f, cap);
  if (ro.status == ReversalOutcome::Status::Diverged) return Tri::Diverged;
  if (ro.status == ReversalOutcome::Status::Blocked) return Tri::False;
  return (ro.left.empty() && ro.right.empty()) ? Tri::True : Tri::False;
}

Tri equal_right(const PositiveWord& u, const PositiveWord& v, const ComplementTable& g,
                std::int64_t cap) {
  auto ro = reverse_right(words::fraction_right(u, v), g, cap);
  if (ro.status == ReversalOutcome::Status::Diverged) return Tri::Diverged;
  if (ro.status == ReversalOutcome::Status::Blocked) return Tri::False;
  return (ro.left.empty() && ro.right.empty()) ? Tri::True : Tri::False;
}

Tri words_equivalent(const PositiveWord& u, const PositiveWord& v, const ComplementTable& f,
                     const ComplementTable& g, std::int64_t cap) {
  Tri a = equal_left(u, v, f, cap);
  Tri b = equal_right(u, v, g, cap);
  if (a == Tri::Diverged || b == Tri::Diverged) return Tri::Diverged;
  return (a == Tri::True && b == Tri::True) ? Tri::True : Tri::False;
}

Tri left_divides_tri(const PositiveWord& u, const PositiveWord& v, const ComplementTable& f,
                     std::int64_t cap) {
  auto ro = reverse_left(words::fraction_left(u, v), f, cap);
  if (ro.status == ReversalOutcome::Status::Diverged) return Tri::Diverged;
  if (ro.status == ReversalOutcome::Status::Blocked) return Tri::False;
  return ro.right.empty() ? Tri::True : Tri::False;
}

bool left_divides(const PositiveWord& u, const PositiveWord& v, const ComplementTable& f,
                  std::int64_t cap) {
  Tri t = left_divides_tri(u, v, f, cap);
  if (t == Tri::Diverged) throw DivergenceError("left divisibility reversal exceeded cap", cap);
  return t == Tri::True;
}

Tri right_divides_tri(const PositiveWord& u, const PositiveWord& v, const ComplementTable& g,
                      std::int64_t cap) {
  auto ro = reverse_right(words::fraction_right(v, u), g, cap);
  if (ro.status == ReversalOutcome::Status::Diverged) return Tri::Diverged;
  if (ro.status == ReversalOutcome::Status::Blocked) return Tri::False;
  return ro.left.empty() ? Tri::True : Tri::False;
}

bool right_divides(const PositiveWord& u, const PositiveWord& v, const ComplementTable& g,
                   std::int64_t cap) {
  Tri t = right_divides_tri(u, v, g, cap);
  if (t == Tri::Diverged) throw DivergenceError("right divisibility reversal exceeded cap", cap);
  return t == Tri::True;
}

namespace {

ReversalOutcome reverse_or_throw(const SignedWord& w, const ComplementTable& t, std::int64_t cap,
                                 bool left, const char* what) {
  auto ro = left ? reverse_left(w, t, cap) : reverse_right(w, t, cap);
  if (ro.status == ReversalOutcome::Status::Diverged) {
    throw DivergenceError(std::string(what) + ": reversal exceeded cap", cap);
  }
  if (ro.status == ReversalOutcome::Status::Blocked) {
    throw DivergenceError(std::string(what) + ": reversal blocked (no common multiple for pair " +
                              t.alphabet().name(ro.blocked_x) + ", " +
                              t.alphabet().name(ro.blocked_y) + ")",
                          cap);
  }
  return ro;
}

}  // namespace

PositiveWord join_left(const PositiveWord& u, const PositiveWord& v, const ComplementTable& f,
                       std::int64_t cap) {
  auto ro = reverse_or_throw(words::fraction_left(u, v), f, cap, true, "join_left");
  return words::concat(u, ro.left);
}

PositiveWord join_right(const PositiveWord& u, const PositiveWord& v, const ComplementTable& g,
                        std::int64_t cap) {
  // v u^{-1} right-reverses to s^{-1} t with t·u = s·v the common multiple.
  auto ro = reverse_or_throw(words::fraction_right(v, u), g, cap, false, "join_right");
  return words::concat(ro.right, u);
}

PositiveWord left_quotient(const PositiveWord& u, const PositiveWord& v, const ComplementTable& f,
                           std::int64_t cap) {
  auto ro = reverse_or_throw(words::fraction_left(u, v), f, cap, true, "left_quotient");
  if (!ro.right.empty()) {
    throw DivergenceError("left_quotient: first argument does not left-divide the second", cap);
  }
  return ro.left;
}

PositiveWord right_quotient(const PositiveWord& u, const PositiveWord& v,
                            const ComplementTable& g, std::int64_t cap) {
  auto ro = reverse_or_throw(words::fraction_right(v, u), g, cap, false, "right_quotient");
  if (!ro.left.empty()) {
    throw DivergenceError("right_quotient: first argument does not right-divide the second", cap);
  }
  return ro.right;
}

PositiveWord meet_left(const PositiveWord& u, const PositiveWord& v, const ComplementTable& f,
                       const ComplementTable& g, std::int64_t cap) {
  auto ro = reverse_or_throw(words::fraction_left(u, v), f, cap, true, "meet_left");
  const PositiveWord& a = ro.left;   // u \_L v
  const PositiveWord& b = ro.right;  // v \_L u
  PositiveWord join = words::concat(u, a);
  PositiveWord r = join_right(a, b, g, cap);  // (u\v) ∨_R (v\u)
  return right_quotient(r, join, g, cap);
}

// ---------------------------------------------------------------------------
// Coherence

namespace {

struct ComplementsOf {
  Tri status = Tri::True;  // False = no common multiple (entry missing / blocked)
  PositiveWord value;      // C_L(u,v) resp. C_R(u,v)
};

// C_L(u, v): left-reverse u^{-1} v.
ComplementsOf complement_left(const PositiveWord& u, const PositiveWord& v,
                              const ComplementTable& f, std::int64_t cap) {
  auto ro = reverse_left(words::fraction_left(u, v), f, cap);
  ComplementsOf c;
  if (ro.status == ReversalOutcome::Status::Diverged) {
    c.status = Tri::Diverged;
  } else if (ro.status == ReversalOutcome::Status::Blocked) {
    c.status = Tri::False;
  } else {
    c.value = ro.left;
  }
  return c;
}

// C_R(u, v): right-reverse v·u^{-1}; the inverted component.
ComplementsOf complement_right(const PositiveWord& u, const PositiveWord& v,
                               const ComplementTable& g, std::int64_t cap) {
  auto ro = reverse_right(words::fraction_right(v, u), g, cap);
  ComplementsOf c;
  if (ro.status == ReversalOutcome::Status::Diverged) {
    c.status = Tri::Diverged;
  } else if (ro.status == ReversalOutcome::Status::Blocked) {
    c.status = Tri::False;
  } else {
    c.value = ro.left;
  }
  return c;
}

Tri symmetric_equal(const PositiveWord& a, const PositiveWord& b, const ComplementTable& t,
                    std::int64_t cap, bool left) {
  Tri r1 = left ? equal_left(a, b, t, cap) : equal_right(a, b, t, cap);
  Tri r2 = left ? equal_left(b, a, t, cap) : equal_right(b, a, t, cap);
  if (r1 == Tri::Diverged || r2 == Tri::Diverged) return Tri::Diverged;
  return (r1 == Tri::True && r2 == Tri::True) ? Tri::True : Tri::False;
}

CoherenceReport coherence_impl(const ComplementTable& table, std::int64_t cap, bool left) {
  CoherenceReport report;
  const auto n = static_cast<Letter>(table.alphabet().size());
  for (Letter x = 0; x < n; ++x) {
    for (Letter y = 0; y < n; ++y) {
      for (Letter z = 0; z < n; ++z) {
        ++report.triples;
        const auto& e1 = left ? table.entry(x, y) : table.entry(z, x);
        const auto& e2 = left ? table.entry(x, z) : table.entry(y, x);
        const auto& e3 = left ? table.entry(y, x) : table.entry(z, y);
        const auto& e4 = left ? table.entry(y, z) : table.entry(x, y);
        if (!e1 || !e2 || !e3 || !e4) continue;  // vacuous: some pair has no common multiple

        ComplementsOf lhs = left ? complement_left(*e1, *e2, table, cap)
                                 : complement_right(*e1, *e2, table, cap);
        if (lhs.status == Tri::False) continue;  // premise C = ∞ fails
        if (lhs.status == Tri::Diverged) {
          report.undecided.push_back({x, y, z, Tri::Diverged, "first complement diverged"});
          continue;
        }
        ComplementsOf rhs = left ? complement_left(*e3, *e4, table, cap)
                                 : complement_right(*e3, *e4, table, cap);
        if (rhs.status == Tri::Diverged) {
          report.undecided.push_back({x, y, z, Tri::Diverged, "second complement diverged"});
          continue;
        }
        if (rhs.status == Tri::False) {
          report.failures.push_back({x, y, z, Tri::False, "second complement does not exist"});
          continue;
        }
        Tri eq = symmetric_equal(lhs.value, rhs.value, table, cap, left);
        if (eq == Tri::Diverged) {
          report.undecided.push_back({x, y, z, Tri::Diverged, "equality test diverged"});
        } else if (eq == Tri::False) {
          report.failures.push_back(
              {x, y, z, Tri::False,
               words::to_string(lhs.value, table.alphabet()) + " != " +
                   words::to_string(rhs.value, table.alphabet())});
        }
      }
    }
  }
  return report;
}

}  // namespace

CoherenceReport check_coherence_left(const ComplementTable& f, std::int64_t cap) {
  return coherence_impl(f, cap, /*left=*/true);
}

CoherenceReport check_coherence_right(const ComplementTable& g, std::int64_t cap) {
  return coherence_impl(g, cap, /*left=*/false);
}

// ---------------------------------------------------------------------------
// Canonical class representatives

PositiveWord canonical_rep(const PositiveWord& w, const MonoidPresentation& pres,
                           std::int64_t budget) {
  std::set<std::vector<Letter>> seen;
  std::deque<PositiveWord> queue;
  seen.insert(w.letters);
  queue.push_back(w);
  PositiveWord best = w;
  while (!queue.empty()) {
    PositiveWord cur = queue.front();
    queue.pop_front();
    if (words::shortlex_less(cur, best)) best = cur;
    for (const auto& [l, r] : pres.relations) {
      for (int dir = 0; dir < 2; ++dir) {
        const PositiveWord& from = dir == 0 ? l : r;
        const PositiveWord& to = dir == 0 ? r : l;
        if (from.size() > cur.size()) continue;
        for (std::size_t i = 0; i + from.size() <= cur.size(); ++i) {
          if (!std::equal(from.letters.begin(), from.letters.end(), cur.letters.begin() + static_cast<std::ptrdiff_t>(i))) {
            continue;
          }
          PositiveWord next;
          next.letters.reserve(cur.size() - from.size() + to.size());
          next.letters.insert(next.letters.end(), cur.letters.begin(),
                              cur.letters.begin() + static_cast<std::ptrdiff_t>(i));
          next.letters.insert(next.letters.end(), to.letters.begin(), to.letters.end());
          next.letters.insert(next.letters.end(),
                              cur.letters.begin() + static_cast<std::ptrdiff_t>(i + from.size()),
                              cur.letters.end());
          if (seen.insert(next.letters).second) {
            if (static_cast<std::int64_t>(seen.size()) > budget) {
              throw ResourceError("canonical_rep: congruence class exceeds budget");
            }
            queue.push_back(next);
          }
        }
      }
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Ball

std::string Ball::pack(const PositiveWord& w) {
  std::string s;
  s.reserve(w.size() * sizeof(Letter));
  for (Letter x : w.letters) {
    s.append(reinterpret_cast<const char*>(&x), sizeof(Letter));
  }
  return s;
}

Ball Ball::enumerate(const MonoidPresentation& pres, std::int64_t norm_bound,
                     std::int64_t word_budget) {
  pres.validate();
  if (auto witness = pres.homogeneity_witness()) {
    throw InputError("enumerate_ball requires a homogeneous presentation: " + *witness);
  }

  // All words of norm <= bound, in shortlex-by-layers order.
  std::vector<PositiveWord> wordlist;
  std::unordered_map<std::string, std::int32_t> word_index;
  std::vector<std::int64_t> word_norm;
  std::deque<std::int32_t> frontier;

  auto add_word = [&](const PositiveWord& w, std::int64_t nrm) {
    if (static_cast<std::int64_t>(wordlist.size()) >= word_budget) {
      throw ResourceError("enumerate_ball exceeded its word budget");
    }
    auto id = static_cast<std::int32_t>(wordlist.size());
    wordlist.push_back(w);
    word_norm.push_back(nrm);
    word_index.emplace(pack(w), id);
    frontier.push_back(id);
  };

  add_word(PositiveWord{}, 0);
  while (!frontier.empty()) {
    std::int32_t id = frontier.front();
    frontier.pop_front();
    PositiveWord base = wordlist[static_cast<std::size_t>(id)];
    std::int64_t nrm = word_norm[static_cast<std::size_t>(id)];
    for (Letter x = 0; x < static_cast<Letter>(pres.alphabet.size()); ++x) {
      std::int64_t next = nrm + pres.weights[static_cast<std::size_t>(x)];
      if (next > norm_bound) continue;
      PositiveWord w = base;
      w.letters.push_back(x);
      add_word(w, next);
    }
  }

  // Union-find over words; single relation applications connect classes.
  std::vector<std::int32_t> parent(wordlist.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<std::int32_t>(i);
  std::function<std::int32_t(std::int32_t)> find = [&](std::int32_t a) {
    while (parent[static_cast<std::size_t>(a)] != a) {
      parent[static_cast<std::size_t>(a)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
      a = parent[static_cast<std::size_t>(a)];
    }
    return a;
  };
  auto unite = [&](std::int32_t a, std::int32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(b)] = a;
  };

  for (std::size_t id = 0; id < wordlist.size(); ++id) {
    const PositiveWord& cur = wordlist[id];
    for (const auto& [l, r] : pres.relations) {
      if (l.size() > cur.size()) continue;
      for (std::size_t i = 0; i + l.size() <= cur.size(); ++i) {
        if (!std::equal(l.letters.begin(), l.letters.end(), cur.letters.begin() + static_cast<std::ptrdiff_t>(i))) {
          continue;
        }
        PositiveWord next;
        next.letters.reserve(cur.size() - l.size() + r.size());
        next.letters.insert(next.letters.end(), cur.letters.begin(),
                            cur.letters.begin() + static_cast<std::ptrdiff_t>(i));
        next.letters.insert(next.letters.end(), r.letters.begin(), r.letters.end());
        next.letters.insert(next.letters.end(),
                            cur.letters.begin() + static_cast<std::ptrdiff_t>(i + l.size()),
                            cur.letters.end());
        auto it = word_index.find(pack(next));
        if (it == word_index.end()) {
          throw std::logic_error("enumerate_ball: rewritten word escaped the ball");
        }
        unite(static_cast<std::int32_t>(id), it->second);
      }
    }
  }

  // Collect classes; canonical representative is the shortlex-least member.
  std::unordered_map<std::int32_t, std::int32_t> root_to_class;
  struct Draft {
    PositiveWord canonical;
    std::int64_t norm;
  };
  std::vector<Draft> drafts;
  for (std::size_t id = 0; id < wordlist.size(); ++id) {
    std::int32_t root = find(static_cast<std::int32_t>(id));
    auto [it, inserted] = root_to_class.emplace(root, static_cast<std::int32_t>(drafts.size()));
    if (inserted) {
      drafts.push_back({wordlist[id], word_norm[id]});
    } else if (words::shortlex_less(wordlist[id], drafts[static_cast<std::size_t>(it->second)].canonical)) {
      drafts[static_cast<std::size_t>(it->second)].canonical = wordlist[id];
    }
  }
  std::vector<std::int32_t> order(drafts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<std::int32_t>(i);
  std::sort(order.begin(), order.end(), [&](std::int32_t a, std::int32_t b) {
    const Draft& da = drafts[static_cast<std::size_t>(a)];
    const Draft& db = drafts[static_cast<std::size_t>(b)];
    if (da.norm != db.norm) return da.norm < db.norm;
    return words::shortlex_less(da.canonical, db.canonical);
  });
  std::vector<std::int32_t> draft_to_class(drafts.size());
  Ball ball;
  ball.bound_ = norm_bound;
  ball.classes_.reserve(drafts.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Draft& d = drafts[static_cast<std::size_t>(order[i])];
    draft_to_class[static_cast<std::size_t>(order[i])] = static_cast<std::int32_t>(i);
    ball.classes_.push_back({d.canonical, d.norm});
  }
  for (std::size_t id = 0; id < wordlist.size(); ++id) {
    std::int32_t cls = draft_to_class[static_cast<std::size_t>(root_to_class[find(static_cast<std::int32_t>(id))])];
    ball.index_.emplace(pack(wordlist[id]), cls);
  }
  ball.by_norm_.assign(static_cast<std::size_t>(norm_bound) + 1, {});
  for (std::size_t c = 0; c < ball.classes_.size(); ++c) {
    ball.by_norm_[static_cast<std::size_t>(ball.classes_[c].norm)].push_back(
        static_cast<ClassId>(c));
  }
  return ball;
}

std::optional<Ball::ClassId> Ball::find(const PositiveWord& w) const {
  auto it = index_.find(pack(w));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Ball::ClassId Ball::class_of(const PositiveWord& w) const {
  auto c = find(w);
  if (!c) throw InputError("word lies outside the enumerated ball");
  return *c;
}

Ball::ClassId Ball::identity() const { return class_of(PositiveWord{}); }

std::optional<Ball::ClassId> Ball::multiply(ClassId a, ClassId b) const {
  if (norm(a) + norm(b) > bound_) return std::nullopt;
  return class_of(words::concat(canonical(a), canonical(b)));
}

bool Ball::divides_left(ClassId a, ClassId b) const {
  std::int64_t rest = norm(b) - norm(a);
  if (rest < 0) return false;
  for (ClassId c : classes_of_norm(rest)) {
    if (multiply(a, c) == b) return true;
  }
  return false;
}

bool Ball::divides_right(ClassId a, ClassId b) const {
  std::int64_t rest = norm(b) - norm(a);
  if (rest < 0) return false;
  for (ClassId c : classes_of_norm(rest)) {
    if (multiply(c, a) == b) return true;
  }
  return false;
}

bool Ball::has_common_upper_left(ClassId a, ClassId b) const {
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    auto cid = static_cast<ClassId>(c);
    if (divides_left(a, cid) && divides_left(b, cid)) return true;
  }
  return false;
}

std::optional<Ball::ClassId> Ball::lub_left(ClassId a, ClassId b) const {
  std::vector<ClassId> upper;
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    auto cid = static_cast<ClassId>(c);
    if (divides_left(a, cid) && divides_left(b, cid)) upper.push_back(cid);
  }
  for (ClassId u : upper) {
    bool least = true;
    for (ClassId c : upper) {
      if (!divides_left(u, c)) {
        least = false;
        break;
      }
    }
    if (least) return u;
  }
  return std::nullopt;
}

std::optional<Ball::ClassId> Ball::glb_left(ClassId a, ClassId b) const {
  std::vector<ClassId> lower;
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    auto cid = static_cast<ClassId>(c);
    if (divides_left(cid, a) && divides_left(cid, b)) lower.push_back(cid);
  }
  for (ClassId g : lower) {
    bool greatest = true;
    for (ClassId c : lower) {
      if (!divides_left(c, g)) {
        greatest = false;
        break;
      }
    }
    if (greatest) return g;
  }
  return std::nullopt;
}

std::vector<Ball::ClassId> Ball::all_classes() const {
  std::vector<ClassId> ids(classes_.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<ClassId>(i);
  return ids;
}

const std::vector<Ball::ClassId>& Ball::classes_of_norm(std::int64_t n) const {
  static const std::vector<ClassId> kEmpty;
  if (n < 0 || n > bound_) return kEmpty;
  return by_norm_[static_cast<std::size_t>(n)];
}

// ---------------------------------------------------------------------------
// Certificate

bool GarsideCertificate::passed() const {
  for (const CheckRecord& c : checks) {
    if (c.status != CheckRecord::Status::Pass) return false;
  }
  return !checks.empty();
}

const CheckRecord* GarsideCertificate::check(const std::string& name) const {
  for (const CheckRecord& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

const char* to_string(CheckRecord::Status s) {
  switch (s) {
    case CheckRecord::Status::Pass: return "pass";
    case CheckRecord::Status::Fail: return "fail";
    case CheckRecord::Status::Diverged: return "diverged";
  }
  return "?";
}

std::string GarsideCertificate::report(const Alphabet& alphabet, const std::string& indent) const {
  std::ostringstream out;
  out << indent << "delta = " << words::to_string(delta, alphabet) << "\n";
  out << indent << "pass = " << (passed() ? "true" : "false") << "\n";
  out << indent << "atoms =";
  for (Letter a : atoms) out << ' ' << alphabet.name(a);
  out << "\n";
  out << indent << "left-divisor-count = " << left_divisors.size() << "\n";
  out << indent << "right-divisor-count = " << right_divisors.size() << "\n";
  if (left_divisors.size() <= 64) {
    out << indent << "left-divisors =";
    for (const auto& w : left_divisors) out << " (" << words::to_string(w, alphabet) << ")";
    out << "\n";
  }
  if (right_divisors.size() <= 64) {
    out << indent << "right-divisors =";
    for (const auto& w : right_divisors) out << " (" << words::to_string(w, alphabet) << ")";
    out << "\n";
  }
  if (!tau.empty()) {
    out << indent << "tau =";
    for (const auto& [a, b] : tau) out << ' ' << alphabet.name(a) << "->" << alphabet.name(b);
    out << "\n";
  }
  for (const CheckRecord& c : checks) {
    out << indent << "check " << c.name << " = " << to_string(c.status);
    if (!c.detail.empty()) out << " (" << c.detail << ")";
    out << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// verify_garside

namespace {

struct Recorder {
  GarsideCertificate* cert;
  bool fatal = false;  // set when later stages cannot run

  void add(const std::string& name, CheckRecord::Status status, const std::string& detail = "") {
    cert->checks.push_back({name, status, detail});
  }
  void pass(const std::string& name, const std::string& detail = "") {
    add(name, CheckRecord::Status::Pass, detail);
  }
  void fail(const std::string& name, const std::string& detail = "") {
    add(name, CheckRecord::Status::Fail, detail);
  }
  void diverged(const std::string& name, const std::string& detail = "") {
    add(name, CheckRecord::Status::Diverged, detail);
  }
};

std::string word_set_to_string(const std::vector<PositiveWord>& set, const Alphabet& alphabet) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out << ", ";
    out << (set[i].empty() ? std::string("1") : words::to_string(set[i], alphabet));
  }
  out << '}';
  return out.str();
}

// Divisor-set search: closure of {1} under appending (left) or prepending
// (right) generators, keeping the words that divide delta. Canonical class
// representatives keep the set duplicate-free.
std::optional<std::vector<PositiveWord>> divisor_set(
    const MonoidPresentation& pres, const ComplementTable& table, const PositiveWord& delta,
    bool left, const VerifyOptions& opts, Recorder& rec, const std::string& check_name) {
  std::set<std::vector<Letter>> seen;
  std::vector<PositiveWord> out;
  std::deque<PositiveWord> queue;
  std::int64_t delta_norm = pres.norm(delta);

  seen.insert({});
  out.push_back(PositiveWord{});
  queue.push_back(PositiveWord{});
  while (!queue.empty()) {
    PositiveWord cur = queue.front();
    queue.pop_front();
    for (Letter x = 0; x < static_cast<Letter>(pres.alphabet.size()); ++x) {
      PositiveWord cand = cur;
      if (left) {
        cand.letters.push_back(x);
      } else {
        cand.letters.insert(cand.letters.begin(), x);
      }
      if (pres.norm(cand) > delta_norm) continue;
      Tri div = left ? left_divides_tri(cand, delta, table, opts.cap)
                     : right_divides_tri(cand, delta, table, opts.cap);
      if (div == Tri::Diverged) {
        rec.diverged(check_name, "divisibility reversal exceeded cap at word '" +
                                     words::to_string(cand, pres.alphabet) + "'");
        return std::nullopt;
      }
      if (div != Tri::True) continue;
      PositiveWord canon = canonical_rep(cand, pres, opts.class_budget);
      if (seen.insert(canon.letters).second) {
        if (static_cast<std::int64_t>(out.size()) >= opts.divisor_budget) {
          rec.fail(check_name, "divisor set exceeded budget");
          return std::nullopt;
        }
        out.push_back(canon);
        queue.push_back(canon);
      }
    }
  }
  std::sort(out.begin(), out.end(), words::shortlex_less);
  return out;
}

}  // namespace

GarsideCertificate verify_garside(const MonoidPresentation& pres, const ComplementTable& f,
                                  const ComplementTable& g, const PositiveWord& delta,
                                  const VerifyOptions& opts) {
  GarsideCertificate cert;
  cert.delta = delta;
  Recorder rec{&cert};

  // --- (C1) finitely generated and atomic -------------------------------
  try {
    pres.validate();
  } catch (const InputError& e) {
    rec.fail("C1.presentation", e.what());
    return cert;
  }
  if (pres.alphabet.size() == 0 && !delta.empty()) {
    rec.fail("C1.presentation", "delta over an empty alphabet");
    return cert;
  }
  rec.pass("C1.finitely-generated", std::to_string(pres.alphabet.size()) + " generators");
  if (auto witness = pres.homogeneity_witness()) {
    rec.fail("C1.homogeneous", *witness);
    return cert;
  }
  rec.pass("C1.homogeneous", "norm = weight sum is relation-invariant");

  // Atom set: letters whose class contains no word of length >= 2; duplicate
  // letters collapse onto their shortlex-least representative.
  bool generators_all_atoms = true;
  {
    std::set<Letter> atom_set;
    std::set<std::vector<Letter>> seen_classes;
    for (Letter x = 0; x < static_cast<Letter>(pres.alphabet.size()); ++x) {
      // Closure of the one-letter word under rewrites.
      std::set<std::vector<Letter>> cls;
      std::deque<PositiveWord> queue;
      PositiveWord start(std::vector<Letter>{x});
      cls.insert(start.letters);
      queue.push_back(start);
      bool decomposes = false;
      PositiveWord least = start;
      while (!queue.empty()) {
        PositiveWord cur = queue.front();
        queue.pop_front();
        if (cur.size() >= 2) decomposes = true;
        if (words::shortlex_less(cur, least)) least = cur;
        for (const auto& [l, r] : pres.relations) {
          for (int dir = 0; dir < 2; ++dir) {
            const PositiveWord& from = dir == 0 ? l : r;
            const PositiveWord& to = dir == 0 ? r : l;
            if (from.size() > cur.size()) continue;
            for (std::size_t i = 0; i + from.size() <= cur.size(); ++i) {
              if (!std::equal(from.letters.begin(), from.letters.end(),
                              cur.letters.begin() + static_cast<std::ptrdiff_t>(i))) {
                continue;
              }
              PositiveWord next;
              next.letters.insert(next.letters.end(), cur.letters.begin(),
                                  cur.letters.begin() + static_cast<std::ptrdiff_t>(i));
              next.letters.insert(next.letters.end(), to.letters.begin(), to.letters.end());
              next.letters.insert(next.letters.end(),
                                  cur.letters.begin() + static_cast<std::ptrdiff_t>(i + from.size()),
                                  cur.letters.end());
              if (cls.insert(next.letters).second) {
                if (static_cast<std::int64_t>(cls.size()) > opts.class_budget) {
                  throw ResourceError("atom classification exceeded class budget");
                }
                queue.push_back(next);
              }
            }
          }
        }
      }
      if (decomposes) {
        generators_all_atoms = false;
        continue;
      }
      if (seen_classes.insert(least.letters).second) {
        if (least.size() == 1) atom_set.insert(least[0]);
      }
    }
    cert.atoms.assign(atom_set.begin(), atom_set.end());
  }
  {
    std::ostringstream d;
    d << cert.atoms.size() << " atoms:";
    for (Letter a : cert.atoms) d << ' ' << pres.alphabet.name(a);
    if (!generators_all_atoms) d << " (some generators decompose)";
    rec.pass("C1.atoms", d.str());
  }

  // --- (C2) coherent complements presenting the monoid ------------------
  {
    CoherenceReport cl = check_coherence_left(f, opts.cap);
    if (cl.all_pass()) {
      rec.pass("C2.left-coherence", std::to_string(cl.triples) + " triples");
    } else if (!cl.failures.empty()) {
      const TripleRecord& t = cl.failures.front();
      rec.fail("C2.left-coherence",
               "triple (" + pres.alphabet.name(t.x) + ", " + pres.alphabet.name(t.y) + ", " +
                   pres.alphabet.name(t.z) + "): " + t.detail);
    } else {
      const TripleRecord& t = cl.undecided.front();
      rec.diverged("C2.left-coherence",
                   "triple (" + pres.alphabet.name(t.x) + ", " + pres.alphabet.name(t.y) + ", " +
                       pres.alphabet.name(t.z) + "): " + t.detail);
    }
    CoherenceReport cr = check_coherence_right(g, opts.cap);
    if (cr.all_pass()) {
      rec.pass("C2.right-coherence", std::to_string(cr.triples) + " triples");
    } else if (!cr.failures.empty()) {
      const TripleRecord& t = cr.failures.front();
      rec.fail("C2.right-coherence",
               "triple (" + pres.alphabet.name(t.x) + ", " + pres.alphabet.name(t.y) + ", " +
                   pres.alphabet.name(t.z) + "): " + t.detail);
    } else {
      const TripleRecord& t = cr.undecided.front();
      rec.diverged("C2.right-coherence",
                   "triple (" + pres.alphabet.name(t.x) + ", " + pres.alphabet.name(t.y) + ", " +
                       pres.alphabet.name(t.z) + "): " + t.detail);
    }
  }
  {
    // The presentation's relations must hold under both reversing equalities,
    // and each table's induced relations must hold under the other side.
    auto run_pairs = [&](const std::vector<std::pair<PositiveWord, PositiveWord>>& rels,
                         bool via_left, const std::string& name) {
      for (const auto& [l, r] : rels) {
        Tri t = via_left ? equal_left(l, r, f, opts.cap) : equal_right(l, r, g, opts.cap);
        if (t == Tri::True) continue;
        std::string detail = "'" + words::to_string(l, pres.alphabet) + " = " +
                             words::to_string(r, pres.alphabet) + "'";
        if (t == Tri::Diverged) {
          rec.diverged(name, detail + " undecided (cap)");
        } else {
          rec.fail(name, detail + " not derivable");
        }
        return false;
      }
      rec.pass(name, std::to_string(rels.size()) + " relations");
      return true;
    };
    run_pairs(pres.relations, true, "C2.relations-hold-left");
    run_pairs(pres.relations, false, "C2.relations-hold-right");
    run_pairs(f.left_relations(), false, "C2.left-table-matches");
    run_pairs(g.right_relations(), true, "C2.right-table-matches");
  }

  // --- (C3) Garside element ---------------------------------------------
  {
    bool all = true;
    for (Letter a : cert.atoms) {
      PositiveWord wa(std::vector<Letter>{a});
      Tri t = left_divides_tri(wa, delta, f, opts.cap);
      if (t == Tri::True) continue;
      all = false;
      if (t == Tri::Diverged) {
        rec.diverged("C3.atoms-divide-delta", "atom '" + pres.alphabet.name(a) + "' undecided");
      } else {
        rec.fail("C3.atoms-divide-delta",
                 "atom '" + pres.alphabet.name(a) + "' does not left-divide delta");
      }
      break;
    }
    if (all) rec.pass("C3.atoms-divide-delta", std::to_string(cert.atoms.size()) + " atoms");
  }

  auto left_set = divisor_set(pres, f, delta, true, opts, rec, "C3.left-divisors");
  auto right_set = divisor_set(pres, g, delta, false, opts, rec, "C3.right-divisors");
  if (left_set) cert.left_divisors = *left_set;
  if (right_set) cert.right_divisors = *right_set;
  if (left_set && right_set) {
    if (*left_set == *right_set) {
      rec.pass("C3.divisors-equal", "|L(delta)| = " + std::to_string(left_set->size()));
    } else {
      std::vector<PositiveWord> lr, rl;
      std::set_difference(left_set->begin(), left_set->end(), right_set->begin(),
                          right_set->end(), std::back_inserter(lr), words::shortlex_less);
      std::set_difference(right_set->begin(), right_set->end(), left_set->begin(),
                          left_set->end(), std::back_inserter(rl), words::shortlex_less);
      rec.fail("C3.divisors-equal",
               "L(delta) = " + word_set_to_string(*left_set, pres.alphabet) +
                   " differs from R(delta) = " + word_set_to_string(*right_set, pres.alphabet));
    }
  }

  // tau on atoms: solve a·delta = delta·tau(a) by reversing delta^{-1}·a·delta.
  {
    bool ok = !cert.atoms.empty() || pres.alphabet.size() == 0;
    bool defined = true;
    std::string failure;
    for (Letter a : cert.atoms) {
      PositiveWord a_delta = words::concat(PositiveWord(std::vector<Letter>{a}), delta);
      auto ro = reverse_left(words::fraction_left(delta, a_delta), f, opts.cap);
      if (ro.status == ReversalOutcome::Status::Diverged) {
        rec.diverged("C3.tau-permutation", "tau(" + pres.alphabet.name(a) + ") undecided (cap)");
        defined = false;
        break;
      }
      if (ro.status == ReversalOutcome::Status::Blocked || !ro.right.empty()) {
        failure = "delta does not left-divide " + pres.alphabet.name(a) + "·delta";
        defined = false;
        break;
      }
      PositiveWord image = canonical_rep(ro.left, pres, opts.class_budget);
      if (image.size() != 1 ||
          std::find(cert.atoms.begin(), cert.atoms.end(), image[0]) == cert.atoms.end()) {
        failure = "tau(" + pres.alphabet.name(a) + ") = '" +
                  words::to_string(ro.left, pres.alphabet) + "' is not an atom";
        defined = false;
        break;
      }
      cert.tau[a] = image[0];
    }
    if (defined) {
      // Must be a bijection of the atom set.
      std::set<Letter> image;
      for (const auto& [a, b] : cert.tau) image.insert(b);
      if (image.size() == cert.atoms.size()) {
        for (const auto& [a, b] : cert.tau) cert.tau_inverse[b] = a;
        std::ostringstream d;
        for (const auto& [a, b] : cert.tau) {
          d << pres.alphabet.name(a) << "->" << pres.alphabet.name(b) << ' ';
        }
        if (ok) rec.pass("C3.tau-permutation", d.str());
      } else {
        rec.fail("C3.tau-permutation", "tau is not injective on atoms");
        cert.tau.clear();
      }
    } else if (!failure.empty()) {
      rec.fail("C3.tau-permutation", failure);
      cert.tau.clear();
    } else {
      cert.tau.clear();
    }
  }

  // Conjugation sampling: w·delta = delta·tau(w) for random positive words w,
  // with tau extended letterwise over atoms.
  if (!cert.tau.empty() && generators_all_atoms) {
    Rng rng(opts.seed ^ 0x5eedULL);
    bool all = true;
    for (int i = 0; i < opts.random_word_checks && all; ++i) {
      PositiveWord w;
      int len = rng.range(0, 6);
      for (int j = 0; j < len; ++j) {
        w.letters.push_back(cert.atoms[rng.below(cert.atoms.size())]);
      }
      PositiveWord tw;
      for (Letter x : w.letters) tw.letters.push_back(cert.tau.at(x));
      Tri t = words_equivalent(words::concat(w, delta), words::concat(delta, tw), f, g, opts.cap);
      if (t == Tri::True) continue;
      all = false;
      std::string detail = "w = '" + words::to_string(w, pres.alphabet) + "'";
      if (t == Tri::Diverged) {
        rec.diverged("C3.delta-conjugation", detail + " undecided (cap)");
      } else {
        rec.fail("C3.delta-conjugation", detail);
      }
    }
    if (all) {
      rec.pass("C3.delta-conjugation",
               std::to_string(opts.random_word_checks) + " random words");
    }
  } else if (cert.tau.empty()) {
    rec.fail("C3.delta-conjugation", "no atom permutation tau available");
  } else {
    rec.fail("C3.delta-conjugation", "generators are not all atoms; letterwise tau unavailable");
  }

  return cert;
}

// ---------------------------------------------------------------------------
// GarsideStructure

GarsideStructure::GarsideStructure(MonoidPresentation pres, ComplementTable f, ComplementTable g,
                                   PositiveWord delta, const VerifyOptions& opts)
    : pres_(std::move(pres)),
      f_(std::move(f)),
      g_(std::move(g)),
      cert_(verify_garside(pres_, f_, g_, delta, opts)),
      class_budget_(opts.class_budget) {}

void GarsideStructure::require_verified() const {
  if (!cert_.passed()) {
    throw InputError("operation requires a passing Garside certificate");
  }
}

PositiveWord GarsideStructure::canonical(const PositiveWord& w) const {
  return canonical_rep(w, pres_, class_budget_);
}

std::vector<PositiveWord> GarsideStructure::greedy_normal_form(const PositiveWord& w,
                                                               std::int64_t cap) const {
  require_verified();
  std::vector<PositiveWord> factors;
  PositiveWord cur = w;
  while (!cur.empty()) {
    PositiveWord head = meet_left(cert_.delta, cur, f_, g_, cap);
    if (head.empty()) {
      throw std::logic_error("greedy_normal_form: trivial head factor for a nonempty word");
    }
    factors.push_back(canonical(head));
    cur = left_quotient(head, cur, f_, cap);
  }
  return factors;
}

namespace {

PositiveWord concat_factors(const std::vector<PositiveWord>& factors) {
  PositiveWord w;
  for (const PositiveWord& p : factors) {
    w.letters.insert(w.letters.end(), p.letters.begin(), p.letters.end());
  }
  return w;
}

}  // namespace

std::pair<PositiveWord, PositiveWord> GarsideStructure::group_normal_form(
    const SignedWord& w, std::int64_t cap) const {
  require_verified();
  auto ro = reverse_right(w, g_, cap);
  if (ro.status == ReversalOutcome::Status::Diverged) {
    throw DivergenceError("group_normal_form: right reversal exceeded cap", cap);
  }
  if (ro.status == ReversalOutcome::Status::Blocked) {
    throw DivergenceError("group_normal_form: right reversal blocked", cap);
  }
  PositiveWord u = ro.left;
  PositiveWord v = ro.right;
  PositiveWord d = meet_left(u, v, f_, g_, cap);
  PositiveWord a = left_quotient(d, u, f_, cap);
  PositiveWord b = left_quotient(d, v, f_, cap);
  return {concat_factors(greedy_normal_form(a, cap)), concat_factors(greedy_normal_form(b, cap))};
}

bool GarsideStructure::group_equal(const SignedWord& a, const SignedWord& b,
                                   std::int64_t cap) const {
  return group_normal_form(a, cap) == group_normal_form(b, cap);
}

bool GarsideStructure::group_trivial(const SignedWord& w, std::int64_t cap) const {
  auto [a, b] = group_normal_form(w, cap);
  return a.empty() && b.empty();
}

bool GarsideStructure::monoid_equal(const PositiveWord& a, const PositiveWord& b,
                                    std::int64_t cap) const {
  Tri t = words_equivalent(a, b, f_, g_, cap);
  if (t == Tri::Diverged) throw DivergenceError("monoid equality test exceeded cap", cap);
  return t == Tri::True;
}

PositiveWord GarsideStructure::tau_word(const PositiveWord& w) const {
  require_verified();
  PositiveWord out;
  out.letters.reserve(w.size());
  for (Letter x : w.letters) {
    auto it = cert_.tau.find(x);
    if (it == cert_.tau.end()) throw InputError("tau is undefined on a non-atom letter");
    out.letters.push_back(it->second);
  }
  return out;
}

PositiveWord GarsideStructure::tau_inverse_word(const PositiveWord& w) const {
  require_verified();
  PositiveWord out;
  out.letters.reserve(w.size());
  for (Letter x : w.letters) {
    auto it = cert_.tau_inverse.find(x);
    if (it == cert_.tau_inverse.end()) throw InputError("tau^{-1} is undefined on a non-atom letter");
    out.letters.push_back(it->second);
  }
  return out;
}

}  // namespace garlink::garside
