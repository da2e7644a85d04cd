#pragma once

#include <json.hpp>

#include "levelmcg/enhancement.hpp"
#include "levelmcg/magnus.hpp"

namespace levelmcg {

using ordered_json = nlohmann::ordered_json;

// Right twist along the i-th a curve: b_i -> b_i a_i, everything else fixed
// (1-based handle index).
EndoF twist_a(int g, long long d, int i);
// Matching twist along the i-th b curve: a_i -> a_i b_i^{-1}.
EndoF twist_b(int g, long long d, int i);

// Twist along a simple closed curve crossing both handles of a genus-2
// subsurface (homology class B_1 + B_2), identity on further handles.
EndoF belt_twist(int g, long long d);

// Twist along the partner curve of the first b curve obtained by band-summing
// it around the second handle; commutes with twist_b(1) and is isotopic to it
// in homology but not in the group.
EndoF partner_twist(int g, long long d);

// twist_b(1) composed with the inverse partner twist: a bounding-pair map.
// Acts trivially on integral homology, fixes the boundary word, and has a
// nonzero degree-3 invariant.  Needs g >= 2.
EndoF bounding_pair_map(int g, long long d);

// Separating-curve twist around the first handle, as the sixth power of the
// handle's two basic twists; g >= 2.
EndoF separating_twist(int g, long long d);

// Named d-th-power twists plus the bounding-pair map, all trivial on mod-d
// homology (inputs for the tau checks).
std::vector<std::pair<std::string, EndoF>> fixture_registry(int g, long long d);

ordered_json endo_to_json(const EndoF& e);
EndoF endo_from_json(const ordered_json& j);
ordered_json enhancement_to_json(const Enhancement& e);
Enhancement enhancement_from_json(const ordered_json& j);

// The 3-dimensional enhancement fixture of the reference surface with one
// even and one odd handle value; q_b1 in {0,1} selects the b-curve value.
Enhancement surface_f_enhancement(int q_b1);

}  // namespace levelmcg
