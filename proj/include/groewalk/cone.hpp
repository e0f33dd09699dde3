#pragma once

#include <string>

#include "groewalk/groebner.hpp"
#include "groewalk/linear.hpp"

namespace groewalk {

// H-description of a restricted Groebner cone: primitive integer normals
// v with v.w >= 0, intersected with the nonnegative orthant. Built from a
// reduced normed basis; a weight vector is interior exactly when it is
// strictly positive on every normal, which is the "initial form of every
// basis element is its leading term" characterization.
struct GroebnerCone {
    std::vector<IntVector> normals;  // sorted, deduplicated
    ContextPtr context;
    std::string source;  // fingerprint of the defining reduced basis
};

GroebnerCone cone_of(const GroebnerBasis& basis);

// w satisfies every normal (>= 0). The orthant constraints hold by the
// WeightVector type.
bool contains(const GroebnerCone& cone, const WeightVector& w);

// Strict on every normal and w != 0; equivalent to "w represents the
// defining order" for nonzero w.
bool interior_contains(const GroebnerCone& cone, const WeightVector& w);

struct SegmentExit {
    Rational t;                     // in [0,1]
    std::vector<IntVector> tight;   // normals attaining the exit; empty if t = 1
};

// Largest t in [0,1] with a + t(b-a) in the cone. Precondition: a in cone.
SegmentExit segment_exit(const GroebnerCone& cone, const WeightVector& a, const WeightVector& b);

enum class BoundaryClass { OriginOnly, MeetsOmegaU, MeetsOtherBoundary };

std::string to_string(BoundaryClass c);

// Classifies the cone's intersection with the orthant boundary:
// MeetsOmegaU if it holds a nonzero point with all X coordinates zero,
// OriginOnly if the only boundary point is the apex.
BoundaryClass boundary_class(const GroebnerCone& cone);

// The stop test of the boundary-based walk variant: the cone holds a point
// (0, w~) with w~ strictly positive on the whole U block.
bool contains_strict_omega_u_point(const GroebnerCone& cone);

// Extreme rays of the cone intersected with the orthant, as primitive
// integer vectors, sorted. Desk-scale enumeration over tight constraint
// subsets.
std::vector<IntVector> extreme_rays(const GroebnerCone& cone);

struct Facet {
    IntVector normal;          // inside >= 0, primitive
    IntVector interior_point;  // relative-interior point (sum of the facet's rays)
    bool exits_orthant;        // stepping just past the facet leaves the orthant
};

std::vector<Facet> facets(const GroebnerCone& cone);

// Sum of the extreme rays: a canonical interior point.
WeightVector interior_point(const GroebnerCone& cone);

// (interior point | lex): a canonical representative order of the cell,
// independent of how the cell was discovered.
MonomialOrder display_order(const GroebnerCone& cone);

// Canonical serialization of a reduced basis under its cone's display
// order; identifies a fan cell (including its leading-term marking).
std::string cell_key(const GroebnerBasis& basis);

// Retags the basis with its cone's display order; polynomials unchanged.
GroebnerBasis with_display_order(const GroebnerBasis& basis, const GroebnerCone& cone);

}  // namespace groewalk
