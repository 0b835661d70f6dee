#include "garlink/wada.hpp"

#include <sstream>

#include "garlink/errors.hpp"
#include "garlink/rng.hpp"

namespace garlink::wada {

using linkinv::IntegerMatrix;
using words::Letter;
using words::SignedLetter;

Alphabet WadaRep::alphabet() const {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(rank));
  for (int i = 1; i <= rank; ++i) names.push_back("x" + std::to_string(i));
  return Alphabet(names);
}

void WadaRep::validate() const {
  if (rank < 2) throw InputError("Wada representations need rank n >= 2");
  if (kind == WadaType::Type1 && h == 0) throw InputError("type 1 needs a non-zero parameter h");
}

namespace {

SignedWord power(Letter x, int e) {
  SignedWord w;
  int sign = e >= 0 ? +1 : -1;
  for (int i = 0; i < (e >= 0 ? e : -e); ++i) w.letters.push_back({x, sign});
  return w;
}

SignedWord gen(Letter x) { return power(x, 1); }

SignedWord cat(std::initializer_list<SignedWord> parts) {
  SignedWord out;
  for (const SignedWord& p : parts) {
    out.letters.insert(out.letters.end(), p.letters.begin(), p.letters.end());
  }
  return out;
}

SignedWord apply_substitution(const std::vector<SignedWord>& images, const SignedWord& w) {
  SignedWord out;
  for (const SignedLetter& l : w.letters) {
    const SignedWord& img = images[static_cast<std::size_t>(l.index)];
    if (l.sign > 0) {
      out.letters.insert(out.letters.end(), img.letters.begin(), img.letters.end());
    } else {
      SignedWord inv = words::inverse(img);
      out.letters.insert(out.letters.end(), inv.letters.begin(), inv.letters.end());
    }
  }
  return words::free_reduce(out);
}

}  // namespace

std::vector<SignedWord> generator_images(const WadaRep& rep, int k, int sign) {
  rep.validate();
  if (k < 1 || k > rep.rank - 1) throw InputError("generator index out of range");
  std::vector<SignedWord> images;
  images.reserve(static_cast<std::size_t>(rep.rank));
  for (Letter j = 0; j < static_cast<Letter>(rep.rank); ++j) images.push_back(gen(j));
  Letter a = static_cast<Letter>(k - 1);  // x_k
  Letter b = static_cast<Letter>(k);      // x_{k+1}

  switch (rep.kind) {
    case WadaType::Type1:
      if (sign >= 0) {
        images[static_cast<std::size_t>(a)] = cat({power(a, -rep.h), gen(b), power(a, rep.h)});
        images[static_cast<std::size_t>(b)] = gen(a);
      } else {
        images[static_cast<std::size_t>(a)] = gen(b);
        images[static_cast<std::size_t>(b)] = cat({power(b, rep.h), gen(a), power(b, -rep.h)});
      }
      break;
    case WadaType::Type2:
      if (sign >= 0) {
        images[static_cast<std::size_t>(a)] = cat({gen(a), power(b, -1), gen(a)});
        images[static_cast<std::size_t>(b)] = gen(a);
      } else {
        images[static_cast<std::size_t>(a)] = gen(b);
        images[static_cast<std::size_t>(b)] = cat({gen(b), power(a, -1), gen(b)});
      }
      break;
    case WadaType::Type3:
      if (sign >= 0) {
        images[static_cast<std::size_t>(a)] = cat({power(a, 2), gen(b)});
        images[static_cast<std::size_t>(b)] = cat({power(b, -1), power(a, -1), gen(b)});
      } else {
        images[static_cast<std::size_t>(a)] = cat({gen(a), power(b, -1), power(a, -1)});
        images[static_cast<std::size_t>(b)] = cat({gen(a), power(b, 2)});
      }
      break;
  }
  return images;
}

SignedWord wada_apply(const WadaRep& rep, int k, int sign, const SignedWord& w) {
  return apply_substitution(generator_images(rep, k, sign), w);
}

SignedWord wada_apply_braid(const WadaRep& rep, const braidrep::BraidWord& beta,
                            const SignedWord& w) {
  if (beta.strands != rep.rank) throw InputError("strand count does not match the rank");
  beta.validate();
  SignedWord cur = words::free_reduce(w);
  for (const SignedLetter& l : beta.letters.letters) {
    cur = wada_apply(rep, l.index + 1, l.sign, cur);
  }
  return cur;
}

bool check_inversion_witness(int h, int n, bool corrupt) {
  if (h == 0) throw InputError("h must be non-zero");
  WadaRep pos{WadaType::Type1, h, n};
  WadaRep neg{WadaType::Type1, -h, n};
  // phi(x_i) = x_i^{-1} is an involution, so phi^{-1} = phi.
  std::vector<SignedWord> phi;
  for (Letter j = 0; j < static_cast<Letter>(n); ++j) {
    phi.push_back(corrupt ? gen(j) : power(j, -1));
  }
  for (int i = 1; i <= n - 1; ++i) {
    for (Letter j = 0; j < static_cast<Letter>(n); ++j) {
      SignedWord lhs =
          apply_substitution(phi, wada_apply(pos, i, +1, apply_substitution(phi, gen(j))));
      SignedWord rhs = wada_apply(neg, i, +1, gen(j));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

bool check_equivalence_witness_23(int n, bool corrupt_mu) {
  if (n < 2) throw InputError("rank must be at least 2");
  WadaRep two{WadaType::Type2, 1, n};
  WadaRep three{WadaType::Type3, 1, n};

  // y_i = x_1^2 ... x_{i-1}^2 x_i
  std::vector<SignedWord> y(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    SignedWord w;
    for (int j = 1; j < i; ++j) {
      SignedWord sq = power(static_cast<Letter>(j - 1), 2);
      w.letters.insert(w.letters.end(), sq.letters.begin(), sq.letters.end());
    }
    w.letters.push_back({static_cast<Letter>(i - 1), +1});
    y[static_cast<std::size_t>(i - 1)] = words::free_reduce(w);
  }

  // intermediate identity: rho^{(3)}(sigma_k) permutes the y basis as stated
  for (int k = 1; k <= n - 1; ++k) {
    for (int i = 1; i <= n; ++i) {
      SignedWord image = wada_apply(three, k, +1, y[static_cast<std::size_t>(i - 1)]);
      SignedWord expected;
      if (i == k) {
        expected = y[static_cast<std::size_t>(k)];
      } else if (i == k + 1) {
        expected = words::free_reduce(
            cat({y[static_cast<std::size_t>(k)], words::inverse(y[static_cast<std::size_t>(k - 1)]),
                 y[static_cast<std::size_t>(k)]}));
      } else {
        expected = y[static_cast<std::size_t>(i - 1)];
      }
      if (image != expected) return false;
    }
  }

  // phi(x_i) = y_{n-i+1}; check rho3(sigma_i) . phi = phi . rho2(mu(sigma_i)).
  std::vector<SignedWord> phi;
  for (int i = 1; i <= n; ++i) phi.push_back(y[static_cast<std::size_t>(n - i)]);
  for (int i = 1; i <= n - 1; ++i) {
    int mu_i = corrupt_mu ? i : n - i;
    for (Letter j = 0; j < static_cast<Letter>(n); ++j) {
      SignedWord lhs = wada_apply(three, i, +1, apply_substitution(phi, gen(j)));
      SignedWord rhs = apply_substitution(phi, wada_apply(two, mu_i, +1, gen(j)));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

namespace {

// Syllable shape test from the fixed-subgroup analysis: all syllable
// exponents are +-h, x_i^h is followed by x_{i-1}^h and preceded by
// x_{i+1}^h (when those neighbours exist), and dually for x_i^{-h}.
bool has_fixed_shape(const SignedWord& w, int h, int n) {
  struct Syllable {
    Letter x;
    std::int64_t e;
  };
  std::vector<Syllable> syl;
  for (const SignedLetter& l : w.letters) {
    if (!syl.empty() && syl.back().x == l.index) {
      syl.back().e += l.sign;
    } else {
      syl.push_back({l.index, l.sign});
    }
  }
  for (const Syllable& s : syl) {
    if (s.e != h && s.e != -h) return false;
  }
  for (std::size_t i = 0; i < syl.size(); ++i) {
    int letter = syl[i].x + 1;  // 1-based
    if (syl[i].e == h) {
      if (letter != 1 && (i + 1 >= syl.size() || syl[i + 1].x != syl[i].x - 1 ||
                          syl[i + 1].e != h)) {
        return false;
      }
      if (letter != n && (i == 0 || syl[i - 1].x != syl[i].x + 1 || syl[i - 1].e != h)) {
        return false;
      }
    } else {
      if (letter != n && (i + 1 >= syl.size() || syl[i + 1].x != syl[i].x + 1 ||
                          syl[i + 1].e != -h)) {
        return false;
      }
      if (letter != 1 && (i == 0 || syl[i - 1].x != syl[i].x - 1 || syl[i - 1].e != -h)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

FixedSubgroupReport fixed_subgroup_checks(int h, int n, int samples, std::uint64_t seed) {
  if (h == 0) throw InputError("h must be non-zero");
  WadaRep rep{WadaType::Type1, h, n};
  FixedSubgroupReport report;

  // (a) the stated generators of F^{<sigma_i>} are fixed by sigma_i
  report.generators_fixed = true;
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (j == i || j == i + 1) continue;
      SignedWord xj = gen(static_cast<Letter>(j - 1));
      if (wada_apply(rep, i, +1, xj) != xj) report.generators_fixed = false;
    }
    SignedWord special = words::free_reduce(
        cat({power(static_cast<Letter>(i), h), power(static_cast<Letter>(i - 1), h)}));
    if (wada_apply(rep, i, +1, special) != special) report.generators_fixed = false;
  }

  // (b) powers of x_n^h ... x_1^h are fixed by every generator
  SignedWord c;
  for (int j = n; j >= 1; --j) {
    SignedWord p = power(static_cast<Letter>(j - 1), h);
    c.letters.insert(c.letters.end(), p.letters.begin(), p.letters.end());
  }
  report.center_fixed = true;
  for (int r = -3; r <= 3; ++r) {
    if (r == 0) continue;
    SignedWord cr;
    SignedWord base = r > 0 ? c : words::inverse(c);
    for (int t = 0; t < (r > 0 ? r : -r); ++t) {
      cr.letters.insert(cr.letters.end(), base.letters.begin(), base.letters.end());
    }
    cr = words::free_reduce(cr);
    for (int i = 1; i <= n - 1; ++i) {
      if (wada_apply(rep, i, +1, cr) != cr) report.center_fixed = false;
    }
  }

  // (c) converse sampling: words off the fixed shape are moved by some sigma_i
  Rng rng(seed ^ 0xf1eecef1ULL);
  report.converse_ok = true;
  while (report.sampled < samples) {
    SignedWord w;
    int len = rng.range(1, 12);
    for (int t = 0; t < len; ++t) {
      w.letters.push_back(
          {static_cast<Letter>(rng.below(static_cast<std::uint64_t>(n))), rng.coin() ? +1 : -1});
    }
    w = words::free_reduce(w);
    if (w.empty()) continue;
    ++report.sampled;
    if (has_fixed_shape(w, h, n)) {
      ++report.shaped;
      continue;
    }
    bool moved = false;
    for (int i = 1; i <= n - 1 && !moved; ++i) {
      if (wada_apply(rep, i, +1, w) != w) moved = true;
    }
    if (moved) {
      ++report.moved;
    } else {
      report.converse_ok = false;
    }
  }
  return report;
}

std::string FixedSubgroupReport::to_string() const {
  std::ostringstream out;
  out << "generators-fixed = " << (generators_fixed ? "pass" : "fail") << "\n";
  out << "center-fixed = " << (center_fixed ? "pass" : "fail") << "\n";
  out << "converse-sampling = " << (converse_ok ? "pass" : "fail") << " (" << moved << "/"
      << (sampled - shaped) << " off-shape words moved, " << shaped << " shaped)\n";
  return out.str();
}

IntegerMatrix abelianized_action(const WadaRep& rep, const braidrep::BraidWord& beta) {
  rep.validate();
  if (beta.strands != rep.rank) throw InputError("strand count does not match the rank");
  beta.validate();
  const auto n = static_cast<std::size_t>(rep.rank);
  IntegerMatrix total = IntegerMatrix::identity(n);
  for (const SignedLetter& l : beta.letters.letters) {
    std::vector<SignedWord> images = generator_images(rep, l.index + 1, l.sign);
    IntegerMatrix step(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      for (const SignedLetter& im : images[j].letters) {
        step.at(static_cast<std::size_t>(im.index), j) += im.sign;
      }
    }
    total = step.multiply(total);
  }
  return total;
}

bool check_braid_relations(const WadaRep& rep) {
  rep.validate();
  const int n = rep.rank;
  for (Letter j = 0; j < static_cast<Letter>(n); ++j) {
    SignedWord xj = gen(j);
    for (int i = 1; i + 1 <= n - 1; ++i) {
      SignedWord lhs = wada_apply(rep, i, +1, wada_apply(rep, i + 1, +1, wada_apply(rep, i, +1, xj)));
      SignedWord rhs =
          wada_apply(rep, i + 1, +1, wada_apply(rep, i, +1, wada_apply(rep, i + 1, +1, xj)));
      if (lhs != rhs) return false;
    }
    for (int i = 1; i <= n - 1; ++i) {
      for (int k = i + 2; k <= n - 1; ++k) {
        SignedWord lhs = wada_apply(rep, i, +1, wada_apply(rep, k, +1, xj));
        SignedWord rhs = wada_apply(rep, k, +1, wada_apply(rep, i, +1, xj));
        if (lhs != rhs) return false;
      }
    }
    for (int i = 1; i <= n - 1; ++i) {
      if (wada_apply(rep, i, -1, wada_apply(rep, i, +1, xj)) != xj) return false;
      if (wada_apply(rep, i, +1, wada_apply(rep, i, -1, xj)) != xj) return false;
    }
  }
  return true;
}

}  // namespace garlink::wada
