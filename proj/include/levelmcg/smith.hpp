#pragma once

#include "levelmcg/common.hpp"

namespace levelmcg {

// Row-major integer matrix.
using Mat = std::vector<std::vector<BigInt>>;

// Cyclic decomposition of a finitely generated abelian group: torsion orders
// d_1 | d_2 | ... (each >= 2) followed by a free rank.
struct InvariantFactors {
  std::vector<BigInt> factors;
  long long free_rank = 0;

  bool operator==(const InvariantFactors&) const = default;
  std::string to_string() const;
  BigInt order() const;  // throws Error when free_rank > 0
};

// Smith normal form diagonal of a (copied) integer matrix: entries are
// non-negative, divisibility-ordered, zero-padded to min(rows, cols).
// Deterministic: pivot = smallest nonzero |entry|, ties broken by row then
// column index; floor-division reductions.
std::vector<BigInt> snf_diagonal(Mat a);

// Same elimination, additionally returning the accumulated left transform U
// with U * input ~ (diagonal after column operations).  U is unimodular.
struct SnfLeft {
  std::vector<BigInt> diag;
  Mat left;
};
SnfLeft snf_with_left(Mat a);

// Invariant factors of Z^cols / (row span of `rows`).
InvariantFactors cokernel(const Mat& rows, std::size_t cols);

// Same quotient, valid only when the row span contains 8 e_i for every i
// (e.g. a presentation that lists all rows 8 e_i).  All elimination happens
// in Z/8, so entries stay bounded where the generic routine suffers severe
// intermediate growth.
InvariantFactors cokernel_mod8(const Mat& rows, std::size_t cols);

// Structure of the subgroup of (Z_8)^n generated by the rows of `gens`.
InvariantFactors subgroup_mod8(const Mat& gens, std::size_t n);

// Whether v lies in the subgroup of (Z_8)^n generated by the rows of `gens`.
bool in_span_mod8(const Mat& gens, std::size_t n, const std::vector<BigInt>& v);

// Whether a * t = v (mod d) has a solution t.
bool solvable_mod(const Mat& a, const std::vector<BigInt>& v, const BigInt& d);

}  // namespace levelmcg
