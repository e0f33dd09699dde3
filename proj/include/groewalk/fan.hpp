#pragma once

#include <set>

#include "groewalk/cone.hpp"

namespace groewalk {

struct FanCell {
    GroebnerBasis gb;   // tagged with the cell's display order
    GroebnerCone cone;
    std::string key;    // canonical serialization under the display order
};

// All Groebner cones of an ideal, cells sorted by key.
struct GroebnerFan {
    ContextPtr context;
    std::vector<FanCell> cells;

    const FanCell* cell_by_key(const std::string& key) const;
};

struct FanOptions {
    std::size_t max_dimension = 4;  // refuse larger rings
    bool parallel = true;           // frontier expansion across facets
};

// Breadth-first facet flipping from the lex cell. The final cell set is
// deterministic regardless of scheduling: discoveries are merged in task
// order, keyed by canonical serialization.
GroebnerFan enumerate_fan(std::span<const Polynomial> generators, const FanOptions& opts = {});

// Independent enumeration oracle: reduced bases at every grid point of the
// standard simplex with the given denominator, collected as cell keys.
std::set<std::string> sample_fan_keys(std::span<const Polynomial> generators,
                                      long grid_denominator, bool parallel = true);

// Cells whose cone contains the given weight vector.
std::vector<const FanCell*> neighbourhood(const GroebnerFan& fan, const WeightVector& nu);

// Cells whose reduced basis certifies an ideal-specific elimination order.
std::vector<const FanCell*> ev_region(const GroebnerFan& fan);

// Is w inside some elimination cell?
bool is_elimination_vector(const GroebnerFan& fan, const WeightVector& w);

struct StarCheckViolation {
    WeightVector sigma;
    WeightVector tau;
    WeightVector omega;
    std::string witness_key;  // a non-elimination cell containing omega
};

struct StarCheckReport {
    std::size_t samples_tested = 0;
    std::vector<StarCheckViolation> violations;
    unsigned long seed = 0;

    bool passed() const { return violations.empty(); }
};

// Samples sigma from elimination cells and tau from the face {w_X = 0},
// then tests that every sampled point of the segment is again inside an
// elimination cell. Deterministic under the seed.
StarCheckReport check_star_shaped(const GroebnerFan& fan, std::size_t n_samples,
                                  unsigned long seed, bool parallel = true);

// True iff sigma and tau are elimination vectors while omega, a point of
// their segment, is not. Throws PreconditionError if omega is not on the
// segment.
bool check_nonconvexity_witness(const GroebnerFan& fan, const WeightVector& sigma,
                                const WeightVector& tau, const WeightVector& omega);

// Cross-section of each cone with the standard simplex, vertices in convex
// traversal order; defined for rings of up to three variables.
struct SectionPolygon {
    std::string cell_key;
    std::vector<QVector> vertices;
};

std::vector<SectionPolygon> fan_simplex_section(const GroebnerFan& fan);

}  // namespace groewalk
