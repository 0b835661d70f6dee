#include "garlink/words.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "garlink/errors.hpp"

namespace garlink::words {

namespace {

const std::string kReserved = "^-(),;#";

}  // namespace

bool valid_generator_name(const std::string& name) {
  if (name.empty()) return false;
  for (char c : name) {
    if (std::isspace(static_cast<unsigned char>(c))) return false;
    if (kReserved.find(c) != std::string::npos) return false;
  }
  return true;
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const std::string& n = names_[i];
    if (!valid_generator_name(n)) {
      throw InputError("invalid generator name: '" + n + "'");
    }
    if (!index_.emplace(n, static_cast<Letter>(i)).second) {
      throw InputError("duplicate generator name: '" + n + "'");
    }
  }
}

std::optional<Letter> Alphabet::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool shortlex_less(const PositiveWord& a, const PositiveWord& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.letters < b.letters;
}

PositiveWord concat(const PositiveWord& a, const PositiveWord& b) {
  PositiveWord r = a;
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

SignedWord concat(const SignedWord& a, const SignedWord& b) {
  SignedWord r = a;
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

SignedWord as_signed(const PositiveWord& w) {
  SignedWord r;
  r.letters.reserve(w.size());
  for (Letter x : w.letters) r.letters.push_back({x, +1});
  return r;
}

SignedWord inverse(const SignedWord& w) {
  SignedWord r;
  r.letters.reserve(w.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    r.letters.push_back({it->index, -it->sign});
  }
  return r;
}

SignedWord fraction_right(const PositiveWord& u, const PositiveWord& v) {
  return concat(as_signed(u), inverse(as_signed(v)));
}

SignedWord fraction_left(const PositiveWord& u, const PositiveWord& v) {
  return concat(inverse(as_signed(u)), as_signed(v));
}

PositiveWord as_positive(const SignedWord& w) {
  PositiveWord r;
  r.letters.reserve(w.size());
  for (const SignedLetter& l : w.letters) {
    if (l.sign < 0) throw InputError("expected a positive word, found an inverse letter");
    r.letters.push_back(l.index);
  }
  return r;
}

std::int64_t exponent_sum(const SignedWord& w, Letter x) {
  std::int64_t s = 0;
  for (const SignedLetter& l : w.letters) {
    if (l.index == x) s += l.sign;
  }
  return s;
}

SignedWord free_reduce(const SignedWord& w) {
  SignedWord out;
  out.letters.reserve(w.size());
  for (const SignedLetter& l : w.letters) {
    if (!out.letters.empty() && out.letters.back().index == l.index &&
        out.letters.back().sign == -l.sign) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(l);
    }
  }
  return out;
}

namespace {

struct Token {
  std::string name;
  std::int64_t exponent;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> tokens;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok[0] == '#') break;  // comment to end of line (single-line inputs)
    auto caret = tok.find('^');
    if (caret == std::string::npos) {
      tokens.push_back({tok, 1});
      continue;
    }
    std::string name = tok.substr(0, caret);
    std::string exp = tok.substr(caret + 1);
    if (name.empty()) throw InputError("missing generator name in token '" + tok + "'");
    if (exp.empty()) throw InputError("missing exponent in token '" + tok + "'");
    std::size_t pos = 0;
    std::int64_t k = 0;
    try {
      k = std::stoll(exp, &pos);
    } catch (const std::exception&) {
      throw InputError("malformed exponent in token '" + tok + "'");
    }
    if (pos != exp.size()) throw InputError("malformed exponent in token '" + tok + "'");
    if (k == 0) throw InputError("zero exponent in token '" + tok + "'");
    tokens.push_back({name, k});
  }
  return tokens;
}

Letter lookup(const std::string& name, const Alphabet& alphabet) {
  auto idx = alphabet.find(name);
  if (!idx) throw InputError("unknown generator name: '" + name + "'");
  return *idx;
}

}  // namespace

PositiveWord parse_positive_word(const std::string& text, const Alphabet& alphabet) {
  PositiveWord w;
  for (const Token& t : tokenize(text)) {
    if (t.exponent < 0) {
      throw InputError("negative exponent not allowed in a positive word: '" + t.name + "'");
    }
    Letter x = lookup(t.name, alphabet);
    for (std::int64_t i = 0; i < t.exponent; ++i) w.letters.push_back(x);
  }
  return w;
}

SignedWord parse_signed_word(const std::string& text, const Alphabet& alphabet) {
  SignedWord w;
  for (const Token& t : tokenize(text)) {
    Letter x = lookup(t.name, alphabet);
    int sign = t.exponent > 0 ? +1 : -1;
    std::int64_t count = t.exponent > 0 ? t.exponent : -t.exponent;
    for (std::int64_t i = 0; i < count; ++i) w.letters.push_back({x, sign});
  }
  return w;
}

namespace {

void append_run(std::ostringstream& out, const std::string& name, std::int64_t run, int sign,
                bool first) {
  if (!first) out << ' ';
  out << name;
  std::int64_t e = sign * run;
  if (e != 1) out << '^' << e;
}

}  // namespace

std::string to_string(const PositiveWord& w, const Alphabet& alphabet) {
  std::ostringstream out;
  std::size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    append_run(out, alphabet.name(w[i]), static_cast<std::int64_t>(j - i), +1, first);
    first = false;
    i = j;
  }
  return out.str();
}

std::string to_string(const SignedWord& w, const Alphabet& alphabet) {
  std::ostringstream out;
  std::size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    append_run(out, alphabet.name(w[i].index), static_cast<std::int64_t>(j - i), w[i].sign, first);
    first = false;
    i = j;
  }
  return out.str();
}

}  // namespace garlink::words
