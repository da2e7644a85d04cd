#pragma once

#include "levelmcg/common.hpp"
#include "levelmcg/smith.hpp"

namespace levelmcg {

// Word in the free group on 2g generators x_1..x_{2g}; letter +l is x_l,
// letter -l its inverse (1-based l).  Generator x_i is the i-th handle's a
// curve and x_{g+i} its b curve.
using FreeWord = std::vector<int>;

FreeWord word_reduce(FreeWord w);
FreeWord word_inverse(const FreeWord& w);
FreeWord word_mul(const FreeWord& a, const FreeWord& b);
// Tokens "a3", "B1" (uppercase = inverse), space separated; "" = identity.
FreeWord word_parse(const std::string& s, int g);
std::string word_format(const FreeWord& w, int g);
// Exact exponent sums in Z^{2g}.
std::vector<BigInt> abelianize(const FreeWord& w, int g);

// Degree-<=2 truncation of the tensor-series expansion over Z_d.
struct TruncTensor2 {
  int g = 0;
  long long d = 0;
  long long c0 = 0;
  std::vector<long long> c1;
  std::vector<std::vector<long long>> c2;

  bool operator==(const TruncTensor2&) const = default;
};

TruncTensor2 tt_one(int g, long long d);
TruncTensor2 tt_mul(const TruncTensor2& a, const TruncTensor2& b);
// x_l -> 1 + X_l, x_l^{-1} -> 1 - X_l + X_l (x) X_l, extended multiplicatively.
TruncTensor2 magnus(const FreeWord& w, int g, long long d);

// Degree-2 coefficient matrix of a word whose abelianization vanishes mod d.
std::vector<std::vector<long long>> theta2_on_kernel(const FreeWord& w, int g, long long d);

// Endomorphism of the free group given by generator images, tagged with the
// modulus at which it is expected to act trivially on homology.
struct EndoF {
  int g = 0;
  long long d = 0;
  std::vector<FreeWord> images;

  EndoF(int genus, long long level, std::vector<FreeWord> imgs);
};

// Whether the abelianized image of every generator is the standard basis
// vector mod d.
bool check_ia(const EndoF& e);
FreeWord apply_endo(const EndoF& e, const FreeWord& w);
// (a o b): generator -> a(b(generator)).
EndoF compose(const EndoF& a, const EndoF& b);
EndoF endo_identity(int g, long long d);
EndoF endo_power(const EndoF& e, long long k);  // k >= 0

// One skew matrix over Z_d per generator: row l holds theta_2(x_l^{-1} phi(x_l)).
struct JohnsonValue {
  int g = 0;
  long long d = 0;
  std::vector<std::vector<std::vector<long long>>> m;

  bool operator==(const JohnsonValue&) const = default;
  bool is_zero() const;
};

JohnsonValue jv_add(const JohnsonValue& a, const JohnsonValue& b);
JohnsonValue tau(const EndoF& e);

// Whether the value, converted to H (x) Lambda^2 H by the symplectic duality
// e_l* -> J e_l, lies in the embedded image of Lambda^3 H mod d; d must be odd.
bool in_lambda3(const JohnsonValue& v);

// The wedge-cube image of the basis trivector e_a ^ e_b ^ e_c as a
// JohnsonValue (for containment cross-checks); indices 0-based, a < b < c.
JohnsonValue trivector_value(int g, long long d, int a, int b, int c);

// prod_i [a_i, b_i].
FreeWord boundary_word(int g);
// phi(boundary) conjugate to the boundary (cyclic-reduction rotation match).
bool boundary_preserved(const EndoF& e);

struct RankResult {
  long long exponent = 0;
  bool small_genus = false;  // computed outside the g >= 3 hypothesis
};
// Closed-form mod-d abelianization rank: C(2g,3) + 2g^2 + g with boundary,
// minus 2g for closed surfaces (the wedge-with-alpha embedding of H is
// verified to be injective mod d before subtracting); d must be odd >= 3.
RankResult odd_level_rank_formula(int g, long long d, bool closed);

// Random element of the kernel of F -> Z_d^{2g}: product of conjugated
// commutators and d-th powers.
FreeWord random_kernel_word(int g, long long d, Rng& rng);
FreeWord random_word(int g, Rng& rng, int len);

}  // namespace levelmcg
