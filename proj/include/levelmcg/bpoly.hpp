#pragma once

#include <set>
#include <utility>

#include "levelmcg/common.hpp"
#include "levelmcg/smith.hpp"
#include "levelmcg/z2space.hpp"

namespace levelmcg {

// Mod-2 polynomial in 2g idempotent variables, truncated to squarefree
// monomials of degree <= 3.  A monomial is a bitmask over the variables; the
// empty mask is the constant 1.  Presence in `support` means coefficient 1.
struct BPoly {
  int g = 0;
  std::set<std::uint32_t> support;

  bool operator==(const BPoly&) const = default;
};

BPoly bp_zero(int g);
BPoly bp_one(int g);
// The degree-1 monomial for variable l (0-based).
BPoly bp_var(int g, int l);
BPoly bp_add(const BPoly& a, const BPoly& b);

// The symbol of an arbitrary class x = sum of basis classes over its support:
// sum of the variables plus the pairwise-intersection constant.
BPoly reduce_symbol(const Z2Class& x);

// Product with idempotent variables (monomials merge by set union); throws
// DegreeOverflow when a product monomial exceeds degree 3.
BPoly mul_truncated(const BPoly& a, const BPoly& b);

// The element sum_i (var A_i)(var B_i) of degree 2.
BPoly alpha_element(int g);

long long b3_dim(int g);  // 1 + 2g + C(2g,2) + C(2g,3)
// Deterministic basis of the degree-<=3 monomials (ascending mask order).
std::vector<std::uint32_t> b3_basis(int g);

// Matrix over Z_2 of x -> x * alpha from the (2g+1)-dimensional degree-<=1
// part (basis: 1, then the variables) into the full degree-<=3 space; rows
// indexed by b3_basis.
Mat alpha_multiplication_map(int g);
long long alpha_map_rank(int g);

// (2^{dim}, 2^{dim-1}): the order of the degree-<=3 space and of its quotient
// by the span of the constant.
std::pair<BigInt, BigInt> b3_orders(int g);

}  // namespace levelmcg
