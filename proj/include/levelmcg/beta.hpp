#pragma once

#include "levelmcg/groupring.hpp"
#include "levelmcg/smith.hpp"
#include "levelmcg/z2space.hpp"

namespace levelmcg {

// Z_8-valued function on the 2^{2g} mod-2 homology classes.
struct Z8Function {
  int g = 0;
  std::vector<std::uint8_t> v;

  bool operator==(const Z8Function&) const = default;
  bool is_zero() const;
};

Z8Function z8f_zero(int g);
Z8Function z8f_add(const Z8Function& a, const Z8Function& b);
Z8Function z8f_scale(long long k, const Z8Function& a);

// The generator value on a nonzero class C: x -> (-1)^{q(C)} i_C(x).
Z8Function beta_generator(const SpinForm& s, const Z2Class& C);

// Z_8-linear extension over the group ring; the class-0 coefficient
// contributes nothing.
Z8Function beta_extend(const SpinForm& s, const GroupRingElt& e);

// Evaluations on basis sums of sizes 1, 2, 3 (strict ascending indices):
// length 2g + C(2g,2) + C(2g,3).
std::vector<std::uint8_t> psi_project(const Z8Function& f, int g);

// Structure of the subgroup of Z_8^N generated by psi(beta([X])) over all
// nonzero classes X; independent of the spin form (pass null for the
// reference form with zero basis values).  g <= 4.
InvariantFactors image_of_psi_beta(int g, const SpinForm* sigma = nullptr);

// Order of the subgroup of Z_8^{2^{2g}} generated by beta([X]), X != 0.
BigInt beta_image_order(int g, const SpinForm& s);

// beta kills every open-surface relation generator, and the sigma-dependent
// scaled forms 4*Delta^2, 2*Delta^3, Delta^{n>=4} on random tuples.
bool kernel_contains_L(const SpinForm& s, int g, Rng& rng, int trials);

// The explicit relation pairs whose differences must lie in the span of
// build_L_open: each pair is (composite expression, reduced expression).
std::vector<std::pair<GroupRingElt, GroupRingElt>> iota_relations(int g);
bool iota_relations_check(int g);

}  // namespace levelmcg
