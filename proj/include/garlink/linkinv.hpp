#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "garlink/braidrep.hpp"
#include "garlink/freeprod.hpp"
#include "garlink/words.hpp"

namespace garlink::linkinv {

using words::Alphabet;
using words::SignedWord;

// Presentation of the quotient group Gamma_{(H,h)}(beta): one copy of the base
// generators per strand, base relators in every copy, plus g = rho(beta)(g)
// for every copy of every base generator.
struct GroupPresentation {
  Alphabet generators;
  std::vector<SignedWord> relators;  // freely reduced
};

struct IntegerMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<mpz_class> data;

  IntegerMatrix() = default;
  IntegerMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

  mpz_class& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const mpz_class& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  static IntegerMatrix identity(std::size_t n);
  IntegerMatrix multiply(const IntegerMatrix& other) const;
  bool is_permutation() const;

  bool operator==(const IntegerMatrix& o) const {
    return rows == o.rows && cols == o.cols && data == o.data;
  }
  std::string to_string() const;
};

// Torsion coefficients d_1 | d_2 | ... (each >= 2) plus the free rank; the
// cokernel of the relator matrix is ⊕ Z/d_i ⊕ Z^rank.
struct Fingerprint {
  std::vector<mpz_class> torsion;
  std::int64_t free_rank = 0;

  bool operator==(const Fingerprint& o) const {
    return torsion == o.torsion && free_rank == o.free_rank;
  }
  bool operator!=(const Fingerprint& o) const { return !(*this == o); }
  std::string to_string() const;  // "rank=<r> torsion=[d1,d2,...]"
};

GroupPresentation gamma_presentation(std::shared_ptr<const freeprod::BaseGroup> base,
                                     const SignedWord& h, const braidrep::BraidWord& beta);

// Exponent-sum matrix: entry (relator, generator).
IntegerMatrix abelianized_matrix(const GroupPresentation& p);

// Deterministic gcd-driven reduction; pivot = smallest nonzero absolute value,
// ties broken in row-major order.
Fingerprint smith_normal_form(const IntegerMatrix& m);

Fingerprint fingerprint(std::shared_ptr<const freeprod::BaseGroup> base, const SignedWord& h,
                        const braidrep::BraidWord& beta);

// Number of cycles of the strand permutation = number of link components.
int cycle_count(const braidrep::BraidWord& beta);

struct MarkovCaseResult {
  int index = 0;
  std::string description;
  bool pass = false;
  std::string fingerprint;
};

// Seeded random (beta, conjugator, stabilization) triples; every case must
// produce identical fingerprints across the three Markov moves. Cases are
// independent and distributed over `jobs` workers with per-case seeds, so the
// output is the same for every worker count.
std::vector<MarkovCaseResult> markov_invariance_cases(int cases, std::uint64_t seed, int jobs = 1);

}  // namespace garlink::linkinv
