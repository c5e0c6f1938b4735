#pragma once

#include "jumploci/variety.hpp"

namespace jumploci {

// Tangent cone at the identity of V(f) (with {1} adjoined to the variety
// when includes_identity_extra): the affine cone of the initial form of the
// shifted polynomial when f(1) = 0, otherwise {0} or the empty set.
// f = 0 is rejected; the caller owns the full-ambient case.
VarietyDescription tangent_cone_hypersurface(const LaurentPoly& f, bool includes_identity_extra);

// Exponential tangent cone of V(f) (∪ {1} when includes_identity_extra):
// the finite union of rationally defined linear subspaces swept out by
// admissible zero-sum partitions of the support of f.
VarietyDescription exponential_tangent_cone(const LaurentPoly& f, bool includes_identity_extra,
                                            std::size_t support_cap = 12);

// Per-generator cones intersected componentwise.
VarietyDescription exponential_tangent_cone(const Ideal& ideal, bool includes_identity_extra,
                                            std::size_t support_cap = 12);

// The subspaces themselves (no {0} adjunction, no packaging).
std::vector<LinearSubspace> exponential_tangent_cone_subspaces(const LaurentPoly& f,
                                                               std::size_t support_cap = 12);

}  // namespace jumploci
