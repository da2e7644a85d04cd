#pragma once

#include "levelmcg/common.hpp"

namespace levelmcg {

// Mod-2 homology class of a genus-g surface in the (A_1..A_g, B_1..B_g)
// basis; bit i (0-based) is the A_{i+1} coordinate, bit g+i the B_{i+1}.
struct Z2Class {
  int g;
  std::uint32_t bits;

  bool operator==(const Z2Class&) const = default;
};

Z2Class z2_class(int g, std::uint32_t bits);
Z2Class z2_add(const Z2Class& x, const Z2Class& y);
// Mod-2 intersection pairing.
int z2_pairing(const Z2Class& x, const Z2Class& y);
// "a1..ag|b1..bg" bit string.
std::string z2_serialize(const Z2Class& x);
Z2Class z2_parse(const std::string& s);

// Quadratic form q on mod-2 homology with q(x+y) = q(x) + q(y) + x.y,
// stored by its values on the 2g basis classes (bit l = value on X_{l+1},
// X_i = A_i, X_{g+i} = B_i).
struct SpinForm {
  int g;
  std::uint32_t basis_values;

  bool operator==(const SpinForm&) const = default;
};

int q_eval(const SpinForm& s, const Z2Class& x);
// Arf invariant: sum of q(A_i) q(B_i) mod 2.
int arf(const SpinForm& s);
// The translated form with q'(y) = q(y) + x.y.
SpinForm act(const SpinForm& s, const Z2Class& x);

// The 0/1-valued intersection indicator i_x as a table over all 2^{2g}
// classes: i_x(y) = 1 iff x.y = 1 mod 2.
std::vector<std::uint8_t> indicator(const Z2Class& x);

// Some coordinate is a unit mod d.
bool primitive_mod_d(const std::vector<BigInt>& x, const BigInt& d);
// Lexicographically smaller of {x mod d, -x mod d}.
std::vector<BigInt> sd_representative(const std::vector<BigInt>& x, const BigInt& d);

}  // namespace levelmcg
