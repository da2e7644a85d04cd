#pragma once

#include "levelmcg/common.hpp"
#include "levelmcg/smith.hpp"
#include "levelmcg/z2space.hpp"

namespace levelmcg {

// Element of the mod-8 group ring over the 2^{2g} mod-2 homology classes,
// stored densely (index = class bits).
struct GroupRingElt {
  int g = 0;
  std::vector<std::uint8_t> c;

  bool operator==(const GroupRingElt&) const = default;
  bool is_zero() const;
};

GroupRingElt gr_zero(int g);
// The basis element [x].
GroupRingElt gr_basis(const Z2Class& x);
GroupRingElt gr_add(const GroupRingElt& a, const GroupRingElt& b);
GroupRingElt gr_scale(long long k, const GroupRingElt& a);

// Pairwise intersection sum of a tuple, mod 2.
int sign_I(const std::vector<Z2Class>& xs);

// Sum over nonempty index subsets S of (-1)^{I(S)} [sum of the subset].
GroupRingElt delta0(const std::vector<Z2Class>& xs);
// Same shape with subset signs (-1)^{q_sigma(subset sum)}.
GroupRingElt delta_sigma(const SpinForm& s, const std::vector<Z2Class>& xs);
// Alternating variant with an extra (-1)^{|S|+1}: the form whose image under
// the extended beta map collapses to 2^{n-1} times a product of indicators.
GroupRingElt delta_sigma_alt(const SpinForm& s, const std::vector<Z2Class>& xs);

// Relation lists over the symplectic basis classes.
std::vector<GroupRingElt> build_L_open(int g);
std::vector<GroupRingElt> build_L_closed(int g);

struct PresentationMatrix {
  std::size_t generators = 0;
  Mat rows;
};
InvariantFactors smith_normal_form(const PresentationMatrix& pm);

// Presentation of (group ring)/(span of relations): 8 e_X for every class
// plus the lifted relation rows.
PresentationMatrix quotient_presentation(int g, bool closed);
// Invariant factors of that quotient; g <= 4.
InvariantFactors quotient_structure(int g, bool closed);

// Membership of v in the mod-8 span of gens (invariant factors of the span
// with and without v adjoined must agree).
bool membership_in_span(const std::vector<GroupRingElt>& gens, const GroupRingElt& v);

// |B^3/<1>| * |level-2 abelianization| == 2^{6g + 2 C(2g,2) + C(2g,3)}.
bool counting_identity(int g);

}  // namespace levelmcg
