#pragma once

#include "levelmcg/common.hpp"
#include "levelmcg/smith.hpp"

namespace levelmcg {

using IntVec = std::vector<BigInt>;

// Basis convention: coordinates (A_1..A_g, B_1..B_g); the form matrix J has
// +I in the upper-right block, so A_i . B_i = +1.
Mat form_matrix(int g);

// x^T J y for vectors of equal even length.
BigInt sform(const IntVec& x, const IntVec& y);

// Element of Sp(2g; Z); the constructor verifies M^T J M = J exactly.
struct SympElement {
  int g;
  Mat m;

  SympElement(int genus, Mat entries);
  static SympElement identity(int genus);
  bool operator==(const SympElement&) const = default;
};

// Transvection T_y : x -> x + (y.x) y, as the matrix I + y (y^T J).
SympElement transvection(const IntVec& y);
// T_y^k = I + k y (y^T J), exact for any integer k.
SympElement transvection_power(const IntVec& y, const BigInt& k);

SympElement mul(const SympElement& a, const SympElement& b);
// Inverse without elimination: M^{-1} = J^{-1} M^T J.
SympElement inverse(const SympElement& a);
SympElement power(const SympElement& a, const BigInt& k);

// Blocks of A' = (a - I)/d in the (A|B) basis: [[p, q], [r, s]].
struct BlockDecomposition {
  int g;
  Mat p, q, r, s;
};
BlockDecomposition block_decompose(const SympElement& a, const BigInt& d);

// Membership in the principal congruence subgroup of level d.
bool in_level(const SympElement& a, const BigInt& d);
// Membership in the even-diagonal refinement (level d plus even diagonals of
// the q and r blocks of (a - I)/d); d must be even.
bool in_igusa(const SympElement& a, const BigInt& d);

// Abelianized coordinates of a level-d element: ({p_ij} row-major, {q_ij} i<=j,
// {r_ij} i<=j) mod d; length 2g^2 + g.
std::vector<BigInt> m_map(const SympElement& a, const BigInt& d);
// For a level-d^2 element: ({q_ii}, {r_ii}) mod 2; length 2g.
std::vector<BigInt> m1_map(const SympElement& a, const BigInt& d);
// For a level-(d^2, 2d^2) element: ({p_ij} all, {q_ij} i<j, {r_ij} i<j) mod 2;
// length 2g^2 - g.
std::vector<BigInt> m2_map(const SympElement& a, const BigInt& d);

// Exact check of the transvection product identity for T^d along
// a1 A_1 + b1 B_1 + a2 A_2 (leading exponent (d a1 b1 + 1) a2^2).
bool verify_transvection_product(long long a1, long long b1, long long a2, long long d, int g);

// Exact check of T_{x+y} T_{x-y} = T_x^2 T_y^2 for orthogonal x, y.
bool verify_lantern(const IntVec& x, const IntVec& y);

// For A = I + d A', B = I + d B' (both symplectic), checks
// A B A^{-1} B^{-1} == I + d^2 (A'B' - B'A') mod d^3 entrywise.
bool verify_commutator_congruence(const Mat& aprime, const Mat& bprime, const BigInt& d);

// Closed-form abelianization of the level-d congruence subgroup, g >= 2:
// Z_d^{2g^2+g} for odd d; Z_d^{2g^2-g} + Z_{2d}^{2g} for even d.
InvariantFactors abelianization_formula(int g, const BigInt& d);

// Random product of basis transvections (used as a conjugator).
SympElement random_symplectic(int g, Rng& rng, int len);
// Random element of the level-d subgroup: product of <= 12 conjugated
// transvection d-th powers S T_x^{+-d} S^{-1}.
SympElement sample_level_element(int g, const BigInt& d, Rng& rng);

// e_i basis vector of Z^{2g} (0-based index).
IntVec basis_vector(int g, int i);

}  // namespace levelmcg
