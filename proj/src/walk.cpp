#include "groewalk/walk.hpp"

#include <sstream>

#include "groewalk/errors.hpp"
#include "groewalk/format.hpp"

namespace groewalk {

std::string to_string(WalkMode m) {
    return m == WalkMode::Improved ? "improved" : "tran";
}

std::string to_string(StopReason r) {
    return r == StopReason::IeoReached ? "IEO_REACHED" : "TAU_REACHED";
}

namespace {

enum class StopPolicy { Improved, TranBoundary, FullSegment };

void validate_tau(const WeightVector& tau, const VariableContext& ctx, bool strict_u) {
    if (tau.size() != ctx.size()) throw DomainError("tau has the wrong length");
    for (std::size_t i = 0; i < ctx.x_count(); ++i)
        if (tau[i] != 0) throw PreconditionError("tau must vanish on the X block");
    if (strict_u) {
        for (std::size_t i = ctx.x_count(); i < ctx.size(); ++i)
            if (tau[i] == 0)
                throw PreconditionError("tau must be strictly positive on the U block");
    }
}

// Audits one basis conversion against the source basis: the K[X]-leading
// subset and its leading terms must survive every intermediate state.
struct ConversionChecker {
    std::vector<Polynomial> ref;            // K[X]-leading elements of the source
    std::vector<Exponents> ref_lead;        // their leading exponents (source order)
    const MonomialOrder* target = nullptr;
    const VariableContext* ctx = nullptr;
    std::size_t step_k = 0;
    std::vector<InstrumentationViolation>* violations = nullptr;

    void operator()(std::span<const Polynomial> state, const char* phase) const {
        std::vector<const Polynomial*> x_lead;
        for (const auto& p : state) {
            if (p.is_zero()) continue;
            if (exponents_pure_x(leading_exponent(p, *target), *ctx)) x_lead.push_back(&p);
        }
        auto report = [&](const std::string& detail) {
            violations->push_back(InstrumentationViolation{step_k, phase, detail});
        };
        if (x_lead.size() != ref.size()) {
            report("K[X]-leading subset changed size: " + std::to_string(x_lead.size()) +
                   " vs " + std::to_string(ref.size()));
            return;
        }
        for (const Polynomial* p : x_lead) {
            bool found = false;
            for (std::size_t i = 0; i < ref.size(); ++i) {
                if (*p == ref[i]) {
                    found = true;
                    if (leading_exponent(*p, *target) != ref_lead[i])
                        report("leading term moved within a K[X]-leading element");
                    break;
                }
            }
            if (!found) report("unexpected K[X]-leading element: " + to_fixed_string(*p));
        }
    }
};

struct WalkOutcome {
    WalkResult result;
    InstrumentationReport instrumentation;
};

WalkOutcome walk_core(std::span<const Polynomial> generators, const WeightVector& sigma,
                      const WeightVector& tau, const MonomialOrder& target_order,
                      StopPolicy policy, bool instrument) {
    if (generators.empty()) throw DomainError("zero ideal basis");
    const ContextPtr& ctx = generators.front().context();
    if (sigma.size() != ctx->size()) throw DomainError("sigma has the wrong length");
    validate_tau(tau, *ctx, policy != StopPolicy::FullSegment);

    WalkOutcome out;
    WalkTrace& trace = out.result.trace;
    InstrumentationReport& report = out.instrumentation;

    MonomialOrder start_order = compose_weight_order(sigma, make_lex(*ctx));
    GroebnerBasis current = reduced_gb(generators, start_order);
    WeightVector omega = sigma;
    std::size_t k = 0;

    auto record_step = [&](std::vector<IntVector> tight) {
        bool nongeneric = false;
        if (tight.size() > 1) {
            QMatrix m;
            for (const auto& v : tight) m.push_back(to_rationals(v));
            nongeneric = rank(m) > 1;
        }
        WalkStep step;
        step.k = k;
        step.omega = omega;
        step.order = current.order;
        step.gb = canonical_strings(current.polys, current.order);
        step.cell_key = cell_key(current);
        step.is_ieo = is_ideal_specific_elim_order(current);
        step.tight_normals = std::move(tight);
        step.nongeneric_crossing = nongeneric;
        if (nongeneric) report.nongeneric_steps.push_back(k);
        trace.steps.push_back(std::move(step));
    };
    record_step({});

    for (;;) {
        const WalkStep& here = trace.steps.back();
        bool stop = false;
        switch (policy) {
            case StopPolicy::Improved: stop = here.is_ieo; break;
            case StopPolicy::TranBoundary:
                stop = contains_strict_omega_u_point(cone_of(current));
                break;
            case StopPolicy::FullSegment: stop = omega == tau; break;
        }
        if (stop) {
            trace.stop_reason = omega == tau ? StopReason::TauReached : StopReason::IeoReached;
            break;
        }
        if (omega == tau) {
            // The boundary criterion holds at tau whenever tau is strictly
            // positive on U, so a valid walk never lands here.
            throw Error("walk consumed the whole segment without meeting its stopping test");
        }

        SegmentExit exit = segment_exit(cone_of(current), omega, tau);
        std::vector<Rational> next(ctx->size());
        for (std::size_t i = 0; i < ctx->size(); ++i)
            next[i] = omega[i] + exit.t * (tau[i] - omega[i]);
        omega = WeightVector(std::move(next));
        ++k;
        MonomialOrder next_order = compose_weight_order(omega, target_order);

        BuchbergerOptions buch_opts;
        StateObserver interreduce_observer;
        ConversionChecker checker;
        bool check_this = instrument && here.is_ieo;
        ++report.conversions_total;
        if (check_this) {
            ++report.conversions_instrumented;
            checker.ref = x_leading_elements(current);
            checker.ref_lead.reserve(checker.ref.size());
            for (const auto& p : checker.ref)
                checker.ref_lead.push_back(leading_exponent(p, current.order));
            checker.target = &next_order;
            checker.ctx = ctx.get();
            checker.step_k = k;
            checker.violations = &report.violations;
            buch_opts.on_state = [&checker](std::span<const Polynomial> state) {
                checker(state, "buchberger");
            };
            interreduce_observer = [&checker](std::span<const Polynomial> state) {
                checker(state, "interreduce");
            };
        } else if (instrument) {
            ++report.conversions_skipped;
        }

        current = reduced_gb(current.polys, next_order, buch_opts, interreduce_observer);
        ++trace.conversions;
        record_step(std::move(exit.tight));
    }

    out.result.final_gb = std::move(current);
    if (policy != StopPolicy::FullSegment ||
        is_ideal_specific_elim_order(out.result.final_gb))
        out.result.elimination_basis = elimination_basis(out.result.final_gb);
    return out;
}

}  // namespace

WalkResult eliminate_walk(std::span<const Polynomial> generators, const WeightVector& sigma,
                          const WeightVector& tau, const MonomialOrder& target_order,
                          WalkMode mode) {
    StopPolicy policy =
        mode == WalkMode::Improved ? StopPolicy::Improved : StopPolicy::TranBoundary;
    return walk_core(generators, sigma, tau, target_order, policy, false).result;
}

WalkResult eliminate_walk(std::span<const Polynomial> generators, const WeightVector& sigma,
                          const WeightVector& tau, WalkMode mode) {
    const ContextPtr& ctx = generators.front().context();
    return eliminate_walk(generators, sigma, tau,
                          compose_weight_order(tau, make_lex(*ctx)), mode);
}

InstrumentationReport walk_instrumentation_check(std::span<const Polynomial> generators,
                                                 const WeightVector& sigma,
                                                 const WeightVector& tau,
                                                 const MonomialOrder& target_order) {
    return walk_core(generators, sigma, tau, target_order, StopPolicy::FullSegment, true)
        .instrumentation;
}

InstrumentationReport walk_instrumentation_check(std::span<const Polynomial> generators,
                                                 const WeightVector& sigma,
                                                 const WeightVector& tau) {
    const ContextPtr& ctx = generators.front().context();
    return walk_instrumentation_check(generators, sigma, tau,
                                      compose_weight_order(tau, make_lex(*ctx)));
}

}  // namespace groewalk
