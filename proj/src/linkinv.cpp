#include "garlink/linkinv.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "garlink/errors.hpp"
#include "garlink/rng.hpp"

namespace garlink::linkinv {

using braidrep::ArtinRepresentation;
using braidrep::BraidWord;
using freeprod::FreeProductElement;
using words::Letter;
using words::SignedLetter;

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::multiply(const IntegerMatrix& other) const {
  if (cols != other.rows) throw InputError("matrix shape mismatch");
  IntegerMatrix out(rows, other.cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t k = 0; k < cols; ++k) {
      if (at(i, k) == 0) continue;
      for (std::size_t j = 0; j < other.cols; ++j) {
        out.at(i, j) += at(i, k) * other.at(k, j);
      }
    }
  }
  return out;
}

bool IntegerMatrix::is_permutation() const {
  if (rows != cols) return false;
  for (std::size_t i = 0; i < rows; ++i) {
    int ones = 0;
    for (std::size_t j = 0; j < cols; ++j) {
      if (at(i, j) == 1) {
        ++ones;
      } else if (at(i, j) != 0) {
        return false;
      }
    }
    if (ones != 1) return false;
  }
  for (std::size_t j = 0; j < cols; ++j) {
    int ones = 0;
    for (std::size_t i = 0; i < rows; ++i) {
      if (at(i, j) == 1) ++ones;
    }
    if (ones != 1) return false;
  }
  return true;
}

std::string IntegerMatrix::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < rows; ++i) {
    out << '[';
    for (std::size_t j = 0; j < cols; ++j) {
      if (j) out << ' ';
      out << at(i, j).get_str();
    }
    out << "]\n";
  }
  return out.str();
}

std::string Fingerprint::to_string() const {
  std::ostringstream out;
  out << "rank=" << free_rank << " torsion=[";
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    if (i) out << ',';
    out << torsion[i].get_str();
  }
  out << ']';
  return out.str();
}

GroupPresentation gamma_presentation(std::shared_ptr<const freeprod::BaseGroup> base,
                                     const SignedWord& h, const braidrep::BraidWord& beta) {
  beta.validate();
  const int n = beta.strands;
  ArtinRepresentation rep(base, h, n);
  const Alphabet& s = base->alphabet();
  const auto m = static_cast<Letter>(s.size());

  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n) * s.size());
  for (int i = 1; i <= n; ++i) {
    for (const std::string& g : s.names()) names.push_back(g + "_" + std::to_string(i));
  }
  GroupPresentation out;
  out.generators = Alphabet(names);

  auto embed_letter = [&](int factor, Letter x) {
    return static_cast<Letter>((factor - 1) * m + x);
  };
  auto embed_signed = [&](int factor, const SignedWord& w) {
    SignedWord r;
    r.letters.reserve(w.size());
    for (const SignedLetter& l : w.letters) r.letters.push_back({embed_letter(factor, l.index), l.sign});
    return r;
  };
  auto serialize = [&](const FreeProductElement& g) {
    SignedWord r;
    for (const freeprod::Syllable& syl : g.syllables) {
      SignedWord piece = embed_signed(syl.factor, syl.content);
      r.letters.insert(r.letters.end(), piece.letters.begin(), piece.letters.end());
    }
    return r;
  };

  // copies of the base relations in every factor
  for (int i = 1; i <= n; ++i) {
    for (const auto& [l, r] : base->relations()) {
      SignedWord relator = embed_signed(i, words::as_signed(l));
      SignedWord rinv = words::inverse(embed_signed(i, words::as_signed(r)));
      relator.letters.insert(relator.letters.end(), rinv.letters.begin(), rinv.letters.end());
      out.relators.push_back(words::free_reduce(relator));
    }
  }
  // phi_i(x)^{-1} . rho(beta)(phi_i(x)) for every factor and base generator
  for (int i = 1; i <= n; ++i) {
    for (Letter x = 0; x < m; ++x) {
      FreeProductElement g = rep.generator(i, x);
      FreeProductElement image = rep.apply_braid(beta, g);
      SignedWord relator;
      relator.letters.push_back({embed_letter(i, x), -1});
      SignedWord img = serialize(image);
      relator.letters.insert(relator.letters.end(), img.letters.begin(), img.letters.end());
      out.relators.push_back(words::free_reduce(relator));
    }
  }
  return out;
}

IntegerMatrix abelianized_matrix(const GroupPresentation& p) {
  IntegerMatrix m(p.relators.size(), p.generators.size());
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    for (const SignedLetter& l : p.relators[r].letters) {
      m.at(r, static_cast<std::size_t>(l.index)) += l.sign;
    }
  }
  return m;
}

namespace {

// Position of the pivot: smallest nonzero |entry| in the trailing submatrix,
// ties broken in row-major order.
bool find_pivot(const IntegerMatrix& m, std::size_t t, std::size_t* pr, std::size_t* pc) {
  bool found = false;
  mpz_class best;
  for (std::size_t i = t; i < m.rows; ++i) {
    for (std::size_t j = t; j < m.cols; ++j) {
      if (m.at(i, j) == 0) continue;
      mpz_class a = abs(m.at(i, j));
      if (!found || a < best) {
        found = true;
        best = a;
        *pr = i;
        *pc = j;
      }
    }
  }
  return found;
}

void swap_rows(IntegerMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntegerMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows; ++i) std::swap(m.at(i, a), m.at(i, b));
}

}  // namespace

Fingerprint smith_normal_form(const IntegerMatrix& input) {
  IntegerMatrix m = input;
  std::size_t t = 0;
  const std::size_t limit = std::min(m.rows, m.cols);

  while (t < limit) {
    std::size_t pr = 0, pc = 0;
    if (!find_pivot(m, t, &pr, &pc)) break;
    swap_rows(m, t, pr);
    swap_cols(m, t, pc);
    if (m.at(t, t) < 0) {
      for (std::size_t j = 0; j < m.cols; ++j) m.at(t, j) = -m.at(t, j);
    }

    bool clean = true;
    for (std::size_t i = t + 1; i < m.rows; ++i) {
      if (m.at(i, t) == 0) continue;
      mpz_class q = m.at(i, t) / m.at(t, t);  // truncated division
      if (q != 0) {
        for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) -= q * m.at(t, j);
      }
      if (m.at(i, t) != 0) clean = false;  // remainder became a smaller pivot
    }
    for (std::size_t j = t + 1; j < m.cols; ++j) {
      if (m.at(t, j) == 0) continue;
      mpz_class q = m.at(t, j) / m.at(t, t);
      if (q != 0) {
        for (std::size_t i = 0; i < m.rows; ++i) m.at(i, j) -= q * m.at(i, t);
      }
      if (m.at(t, j) != 0) clean = false;
    }
    if (!clean) continue;  // repick the pivot among the reduced entries

    // divisibility fix-up: the pivot must divide the trailing submatrix
    bool divides = true;
    for (std::size_t i = t + 1; i < m.rows && divides; ++i) {
      for (std::size_t j = t + 1; j < m.cols && divides; ++j) {
        if (m.at(i, j) % m.at(t, t) != 0) {
          for (std::size_t jj = 0; jj < m.cols; ++jj) m.at(t, jj) += m.at(i, jj);
          divides = false;
        }
      }
    }
    if (!divides) continue;

    ++t;
  }

  Fingerprint fp;
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < limit; ++i) {
    if (m.at(i, i) != 0) {
      ++nonzero;
      if (m.at(i, i) >= 2) fp.torsion.push_back(m.at(i, i));
    }
  }
  fp.free_rank = static_cast<std::int64_t>(m.cols - nonzero);
  return fp;
}

Fingerprint fingerprint(std::shared_ptr<const freeprod::BaseGroup> base, const SignedWord& h,
                        const braidrep::BraidWord& beta) {
  return smith_normal_form(abelianized_matrix(gamma_presentation(std::move(base), h, beta)));
}

int cycle_count(const braidrep::BraidWord& beta) {
  std::vector<int> image = braid_permutation(beta);
  std::vector<bool> seen(image.size(), false);
  int cycles = 0;
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = static_cast<std::size_t>(image[j] - 1);
    }
  }
  return cycles;
}

namespace {

MarkovCaseResult run_markov_case(int index, std::uint64_t seed) {
  Rng rng(seed);
  MarkovCaseResult result;
  result.index = index;

  int base_kind = rng.range(0, 2);
  std::shared_ptr<const freeprod::BaseGroup> base =
      base_kind == 0 ? freeprod::make_integers()
                     : freeprod::make_cyclic(base_kind == 1 ? 2 : 3);
  SignedWord h = words::parse_signed_word("a", base->alphabet());

  int n = rng.range(2, 4);
  BraidWord beta;
  beta.strands = n;
  int blen = rng.range(0, 8);
  for (int i = 0; i < blen; ++i) {
    beta.letters.letters.push_back(
        {static_cast<Letter>(rng.below(static_cast<std::uint64_t>(n - 1))), rng.coin() ? +1 : -1});
  }
  BraidWord alpha;
  alpha.strands = n;
  int alen = rng.range(0, 4);
  for (int i = 0; i < alen; ++i) {
    alpha.letters.letters.push_back(
        {static_cast<Letter>(rng.below(static_cast<std::uint64_t>(n - 1))), rng.coin() ? +1 : -1});
  }
  int sign = rng.coin() ? +1 : -1;

  Fingerprint fp = fingerprint(base, h, beta);
  Fingerprint fp_conj = fingerprint(base, h, braidrep::markov_conjugate(beta, alpha));
  Fingerprint fp_stab = fingerprint(base, h, braidrep::markov_stabilize(beta, sign));

  std::ostringstream desc;
  desc << "H=" << base->describe() << " n=" << n << " beta='" << beta.to_string() << "' alpha='"
       << alpha.to_string() << "' sign=" << (sign > 0 ? "+1" : "-1");
  result.description = desc.str();
  result.fingerprint = fp.to_string();
  result.pass = fp == fp_conj && fp == fp_stab;
  if (!result.pass) {
    result.fingerprint += " conj=" + fp_conj.to_string() + " stab=" + fp_stab.to_string();
  }
  return result;
}

}  // namespace

std::vector<MarkovCaseResult> markov_invariance_cases(int cases, std::uint64_t seed, int jobs) {
  std::vector<MarkovCaseResult> results(static_cast<std::size_t>(cases));
  auto worker = [&](int start, int stride) {
    for (int i = start; i < cases; i += stride) {
      results[static_cast<std::size_t>(i)] =
          run_markov_case(i, seed * 0x9e3779b9ULL + static_cast<std::uint64_t>(i) * 1000003ULL);
    }
  };
  if (jobs <= 1) {
    worker(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker, j, jobs);
    for (auto& th : pool) th.join();
  }
  return results;
}

}  // namespace garlink::linkinv
