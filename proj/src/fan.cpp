#include "groewalk/fan.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "groewalk/errors.hpp"
#include "groewalk/format.hpp"

namespace groewalk {

namespace {

FanCell make_cell(const GroebnerBasis& basis) {
    GroebnerCone cone = cone_of(basis);
    GroebnerBasis tagged = with_display_order(basis, cone);
    auto strings = canonical_strings(tagged.polys, tagged.order);
    std::string key = "{";
    for (std::size_t i = 0; i < strings.size(); ++i) {
        if (i) key += "; ";
        key += strings[i];
    }
    key += "}";
    return FanCell{std::move(tagged), std::move(cone), std::move(key)};
}

MonomialOrder flip_order(const Facet& facet, const VariableContext& ctx) {
    std::size_t d = ctx.size();
    std::vector<Rational> first = to_rationals(facet.interior_point);
    std::vector<Rational> second(d);
    for (std::size_t i = 0; i < d; ++i) second[i] = Rational(static_cast<long>(-facet.normal[i]));
    std::vector<std::size_t> perm(d);
    for (std::size_t i = 0; i < d; ++i) perm[i] = i;
    return MonomialOrder::with_signed_rows({std::move(first), std::move(second)}, std::move(perm));
}

void check_generators(std::span<const Polynomial> generators, const FanOptions& opts) {
    if (generators.empty()) throw DomainError("zero ideal basis");
    const ContextPtr& ctx = generators.front().context();
    if (ctx->size() > opts.max_dimension)
        throw DimensionGuardError("ring has " + std::to_string(ctx->size()) +
                                  " variables, guard is " + std::to_string(opts.max_dimension));
}

template <typename Task, typename Result, typename Fn>
std::vector<Result> run_tasks(const std::vector<Task>& tasks, bool parallel, Fn&& fn) {
    std::vector<Result> results(tasks.size());
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long long i = 0; i < static_cast<long long>(tasks.size()); ++i) {
        try {
            results[static_cast<std::size_t>(i)] = fn(tasks[static_cast<std::size_t>(i)]);
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return results;
}

}  // namespace

const FanCell* GroebnerFan::cell_by_key(const std::string& key) const {
    for (const auto& c : cells)
        if (c.key == key) return &c;
    return nullptr;
}

GroebnerFan enumerate_fan(std::span<const Polynomial> generators, const FanOptions& opts) {
    check_generators(generators, opts);
    const ContextPtr& ctx = generators.front().context();

    std::map<std::string, FanCell> cells;
    FanCell start = make_cell(reduced_gb(generators, make_lex(*ctx)));
    std::vector<std::string> frontier{start.key};
    cells.emplace(start.key, std::move(start));

    while (!frontier.empty()) {
        struct FlipTask {
            const FanCell* cell;
            Facet facet;
        };
        std::vector<FlipTask> tasks;
        for (const auto& key : frontier) {
            const FanCell& cell = cells.at(key);
            for (auto& f : facets(cell.cone)) {
                if (f.exits_orthant) continue;
                tasks.push_back(FlipTask{&cell, std::move(f)});
            }
        }
        auto results = run_tasks<FlipTask, FanCell>(tasks, opts.parallel, [&](const FlipTask& t) {
            MonomialOrder order = flip_order(t.facet, *ctx);
            return make_cell(reduced_gb(t.cell->gb.polys, order));
        });
        // Merge in task order so the traversal is deterministic regardless
        // of scheduling.
        frontier.clear();
        for (auto& cell : results) {
            std::string key = cell.key;
            if (cells.emplace(key, std::move(cell)).second) frontier.push_back(std::move(key));
        }
    }

    GroebnerFan fan{ctx, {}};
    fan.cells.reserve(cells.size());
    for (auto& [key, cell] : cells) fan.cells.push_back(std::move(cell));
    return fan;
}

std::set<std::string> sample_fan_keys(std::span<const Polynomial> generators,
                                      long grid_denominator, bool parallel) {
    if (grid_denominator < 1) throw DomainError("grid denominator must be positive");
    if (generators.empty()) throw DomainError("zero ideal basis");
    const ContextPtr& ctx = generators.front().context();
    std::size_t d = ctx->size();

    // Integer compositions of the denominator; the order (w|lex) only
    // depends on the ray of w, so no division by the denominator is needed.
    std::vector<std::vector<long long>> points;
    std::vector<long long> current(d, 0);
    auto emit = [&](auto&& self, std::size_t i, long long remaining) -> void {
        if (i + 1 == d) {
            current[i] = remaining;
            points.push_back(current);
            return;
        }
        for (long long k = 0; k <= remaining; ++k) {
            current[i] = k;
            self(self, i + 1, remaining - k);
        }
    };
    emit(emit, 0, grid_denominator);

    MonomialOrder lex = make_lex(*ctx);
    auto keys = run_tasks<std::vector<long long>, std::string>(
        points, parallel, [&](const std::vector<long long>& p) {
            MonomialOrder order = compose_weight_order(WeightVector::from_longs(p), lex);
            return cell_key(reduced_gb(generators, order));
        });
    return std::set<std::string>(keys.begin(), keys.end());
}

std::vector<const FanCell*> neighbourhood(const GroebnerFan& fan, const WeightVector& nu) {
    std::vector<const FanCell*> out;
    for (const auto& cell : fan.cells)
        if (contains(cell.cone, nu)) out.push_back(&cell);
    return out;
}

std::vector<const FanCell*> ev_region(const GroebnerFan& fan) {
    std::vector<const FanCell*> out;
    for (const auto& cell : fan.cells)
        if (is_ideal_specific_elim_order(cell.gb)) out.push_back(&cell);
    return out;
}

bool is_elimination_vector(const GroebnerFan& fan, const WeightVector& w) {
    for (const FanCell* cell : ev_region(fan))
        if (contains(cell->cone, w)) return true;
    return false;
}

StarCheckReport check_star_shaped(const GroebnerFan& fan, std::size_t n_samples,
                                  unsigned long seed, bool parallel) {
    StarCheckReport report;
    report.seed = seed;
    report.samples_tested = n_samples;
    auto ev_cells = ev_region(fan);
    if (ev_cells.empty())
        throw PreconditionError("fan has no elimination cells to sample from");

    const std::size_t d = fan.context->size();
    const std::size_t n_x = fan.context->x_count();

    struct Sample {
        WeightVector sigma;
        WeightVector tau;
        WeightVector omega;
    };
    // The sampling plan is drawn serially so the report is deterministic
    // under the seed no matter how the checks are scheduled.
    std::mt19937_64 rng(seed);
    std::vector<Sample> samples;
    samples.reserve(n_samples);
    std::vector<std::vector<IntVector>> ev_rays;
    ev_rays.reserve(ev_cells.size());
    for (const FanCell* cell : ev_cells) ev_rays.push_back(extreme_rays(cell->cone));

    for (std::size_t s = 0; s < n_samples; ++s) {
        std::size_t ci = rng() % ev_cells.size();
        const auto& rays = ev_rays[ci];
        std::vector<long long> sigma(d, 0);
        bool nonzero = false;
        for (const auto& r : rays) {
            long long c = static_cast<long long>(rng() % 5);
            if (c != 0) nonzero = true;
            for (std::size_t i = 0; i < d; ++i) sigma[i] += c * r[i];
        }
        if (!nonzero)
            for (std::size_t i = 0; i < d; ++i) sigma[i] = rays.front()[i];
        std::vector<long long> tau(d, 0);
        for (std::size_t i = n_x; i < d; ++i) tau[i] = static_cast<long long>(rng() % 5);
        long long den = 1 + static_cast<long long>(rng() % 8);
        long long num = static_cast<long long>(rng() % static_cast<unsigned long>(den + 1));
        Rational t = make_rational(num, den);
        std::vector<Rational> omega(d);
        for (std::size_t i = 0; i < d; ++i) {
            Rational si(static_cast<long>(sigma[i]));
            Rational ti(static_cast<long>(tau[i]));
            omega[i] = si + t * (ti - si);
        }
        samples.push_back(Sample{WeightVector::from_longs(sigma), WeightVector::from_longs(tau),
                                 WeightVector(std::move(omega))});
    }

    auto witness = run_tasks<Sample, std::string>(samples, parallel, [&](const Sample& s) {
        for (const FanCell* cell : ev_cells)
            if (contains(cell->cone, s.omega)) return std::string();
        for (const auto& cell : fan.cells)
            if (contains(cell.cone, s.omega)) return cell.key;
        return std::string("<no containing cell>");
    });
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (!witness[i].empty())
            report.violations.push_back(StarCheckViolation{samples[i].sigma, samples[i].tau,
                                                           samples[i].omega, witness[i]});
    }
    return report;
}

bool check_nonconvexity_witness(const GroebnerFan& fan, const WeightVector& sigma,
                                const WeightVector& tau, const WeightVector& omega) {
    std::size_t d = fan.context->size();
    if (sigma.size() != d || tau.size() != d || omega.size() != d)
        throw DomainError("weight vector length mismatch");
    // omega must be sigma + t (tau - sigma) for one t in [0,1].
    bool have_t = false;
    Rational t(0);
    for (std::size_t i = 0; i < d; ++i) {
        Rational diff = tau[i] - sigma[i];
        if (diff == 0) {
            if (omega[i] != sigma[i])
                throw PreconditionError("omega does not lie on the segment sigma-tau");
            continue;
        }
        Rational ti = (omega[i] - sigma[i]) / diff;
        if (!have_t) {
            t = ti;
            have_t = true;
        } else if (ti != t) {
            throw PreconditionError("omega does not lie on the segment sigma-tau");
        }
    }
    if (have_t && (t < 0 || t > 1))
        throw PreconditionError("omega lies outside the segment sigma-tau");
    return is_elimination_vector(fan, sigma) && is_elimination_vector(fan, tau) &&
           !is_elimination_vector(fan, omega);
}

std::vector<SectionPolygon> fan_simplex_section(const GroebnerFan& fan) {
    std::size_t d = fan.context->size();
    if (d > 3)
        throw DimensionGuardError("simplex sections are emitted for up to three variables");
    std::vector<SectionPolygon> out;
    for (const auto& cell : fan.cells) {
        SectionPolygon poly{cell.key, {}};
        for (const auto& r : extreme_rays(cell.cone)) {
            long long sum = 0;
            for (long long x : r) sum += x;
            QVector v(d);
            for (std::size_t i = 0; i < d; ++i)
                v[i] = make_rational(r[i], sum);
            poly.vertices.push_back(std::move(v));
        }
        if (d == 3 && poly.vertices.size() > 2) {
            // Convex traversal order in the simplex plane, using the first
            // two coordinates as an affine chart.
            QVector c(2, Rational(0));
            for (const auto& v : poly.vertices) {
                c[0] += v[0];
                c[1] += v[1];
            }
            Rational n(static_cast<long>(poly.vertices.size()));
            c[0] /= n;
            c[1] /= n;
            auto half = [&](const QVector& v) {
                Rational y = v[1] - c[1];
                Rational x = v[0] - c[0];
                return (y > 0 || (y == 0 && x > 0)) ? 0 : 1;
            };
            std::sort(poly.vertices.begin(), poly.vertices.end(),
                      [&](const QVector& a, const QVector& b) {
                          int ha = half(a), hb = half(b);
                          if (ha != hb) return ha < hb;
                          Rational cross = (a[0] - c[0]) * (b[1] - c[1]) -
                                           (a[1] - c[1]) * (b[0] - c[0]);
                          if (cross != 0) return cross > 0;
                          return a < b;
                      });
        } else {
            std::sort(poly.vertices.begin(), poly.vertices.end());
        }
        out.push_back(std::move(poly));
    }
    return out;
}

}  // namespace groewalk
