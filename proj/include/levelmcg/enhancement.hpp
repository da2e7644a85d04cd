#pragma once

#include "levelmcg/common.hpp"
#include "levelmcg/z2space.hpp"

namespace levelmcg {

struct GaussianInt {
  BigInt re, im;

  bool operator==(const GaussianInt&) const = default;
  GaussianInt operator*(const GaussianInt& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  BigInt norm() const { return re * re + im * im; }
};

// Z_4-valued quadratic refinement on a Z_2 vector space, stored by its values
// on a basis and the symmetric bilinear pairing.  The diagonal of the pairing
// is forced by well-definedness: x.x must equal the value parity (otherwise
// q(x+x) = q(0) = 0 fails), so odd basis values come with x.x = 1.
struct Enhancement {
  int n;
  std::vector<std::vector<int>> pairing;  // symmetric over Z_2
  std::vector<int> basis_values;          // Z_4

  Enhancement(std::vector<std::vector<int>> pairing, std::vector<int> values);
  bool operator==(const Enhancement&) const = default;
};

// Value on the sum of the basis classes in `subset` (bitmask):
// sum of values plus twice the pairwise pairings, mod 4.
int qhat_eval(const Enhancement& e, std::uint32_t subset);

// Sum of i^{q(x)} over all 2^n classes, exactly in Z[i].
GaussianInt gauss_sum(const Enhancement& e);

// The eighth-root phase of the Gauss sum: gauss_sum = 2^{n/2} zeta_8^B.
// Throws DegenerateEnhancement when the sum vanishes or carries no phase.
int brown_invariant(const Enhancement& e);

// Whether the full pairing matrix (diagonal included) is invertible mod 2.
bool pairing_nondegenerate(const Enhancement& e);

// The doubled form 2q of a spin form, on the 2g-dimensional space with the
// symplectic pairing.
Enhancement doubled(const SpinForm& s);

Enhancement direct_sum(const Enhancement& a, const Enhancement& b);

}  // namespace levelmcg
