#pragma once

#include "groewalk/fan.hpp"

namespace groewalk {

enum class WalkMode {
    Improved,      // stop as soon as the current reduced basis certifies an
                   // ideal-specific elimination order
    TranBoundary,  // stop only when the current cone holds a strictly
                   // positive point of the face {w_X = 0}
};

enum class StopReason { IeoReached, TauReached };

std::string to_string(WalkMode m);
std::string to_string(StopReason r);

struct WalkStep {
    std::size_t k = 0;
    WeightVector omega;
    MonomialOrder order;
    std::vector<std::string> gb;  // canonical strings under the step order
    std::string cell_key;
    bool is_ieo = false;
    std::vector<IntVector> tight_normals;  // facet normals crossed to get here
    bool nongeneric_crossing = false;      // tight normals span rank > 1
};

struct WalkTrace {
    std::vector<WalkStep> steps;
    StopReason stop_reason = StopReason::IeoReached;
    std::size_t conversions = 0;
};

struct WalkResult {
    std::vector<Polynomial> elimination_basis;
    GroebnerBasis final_gb;
    WalkTrace trace;
};

// Walks the segment sigma -> tau, converting the reduced basis at each cone
// crossing with the composite order (omega_k | target_order), and returns
// the elimination basis once the mode's stopping test holds. The stopping
// test runs before the first step. tau must vanish on the X block and be
// strictly positive on the U block; target_order must refine tau (the
// default overload composes (tau | lex), which always does).
WalkResult eliminate_walk(std::span<const Polynomial> generators, const WeightVector& sigma,
                          const WeightVector& tau, const MonomialOrder& target_order,
                          WalkMode mode);
WalkResult eliminate_walk(std::span<const Polynomial> generators, const WeightVector& sigma,
                          const WeightVector& tau, WalkMode mode);

struct InstrumentationViolation {
    std::size_t step_k = 0;
    std::string phase;  // "buchberger" or "interreduce"
    std::string detail;
};

struct InstrumentationReport {
    std::size_t conversions_total = 0;
    std::size_t conversions_instrumented = 0;  // source cell certifies an elimination order
    std::size_t conversions_skipped = 0;
    std::vector<InstrumentationViolation> violations;
    std::vector<std::size_t> nongeneric_steps;

    bool passed() const { return violations.empty(); }
};

// Walks the full segment sigma -> tau (tau in {w_X = 0}, zero entries
// allowed) and audits every basis conversion whose source cell certifies an
// elimination order: each intermediate state of the completion and of the
// interreduction must keep exactly the source's K[X]-leading elements, with
// unchanged leading terms.
InstrumentationReport walk_instrumentation_check(std::span<const Polynomial> generators,
                                                 const WeightVector& sigma,
                                                 const WeightVector& tau,
                                                 const MonomialOrder& target_order);
InstrumentationReport walk_instrumentation_check(std::span<const Polynomial> generators,
                                                 const WeightVector& sigma,
                                                 const WeightVector& tau);

}  // namespace groewalk
