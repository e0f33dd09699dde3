#include "groewalk/cone.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "groewalk/errors.hpp"
#include "groewalk/format.hpp"

namespace groewalk {

namespace {

QVector to_qvector(const IntVector& v) {
    return to_rationals(v);
}

// Basis normals plus the orthant rows, the full constraint set of the
// restricted cone.
std::vector<IntVector> all_constraints(const GroebnerCone& cone) {
    std::size_t d = cone.context->size();
    std::vector<IntVector> rows = cone.normals;
    for (std::size_t i = 0; i < d; ++i) {
        IntVector e(d, 0);
        e[i] = 1;
        rows.push_back(std::move(e));
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    return rows;
}

bool satisfies_all(const std::vector<IntVector>& rows, const IntVector& r) {
    for (const auto& row : rows) {
        long long acc = 0;
        for (std::size_t i = 0; i < r.size(); ++i) acc += row[i] * r[i];
        if (acc < 0) return false;
    }
    return true;
}

}  // namespace

GroebnerCone cone_of(const GroebnerBasis& basis) {
    if (!basis.reduced || !basis.normed)
        throw PreconditionError("cone_of is defined on reduced normed bases");
    std::set<IntVector> normals;
    std::size_t d = basis.context()->size();
    for (const auto& g : basis.polys) {
        const Exponents& lead = leading_exponent(g, basis.order);
        for (const auto& [e, c] : g.terms()) {
            if (e == lead) continue;
            IntVector diff(d);
            for (std::size_t i = 0; i < d; ++i) diff[i] = lead[i] - e[i];
            normals.insert(primitive(diff));
        }
    }
    return GroebnerCone{std::vector<IntVector>(normals.begin(), normals.end()),
                        basis.context(), fingerprint(basis.polys)};
}

bool contains(const GroebnerCone& cone, const WeightVector& w) {
    if (w.size() != cone.context->size()) throw DomainError("weight vector length mismatch");
    for (const auto& v : cone.normals)
        if (dot(v, w.entries()) < 0) return false;
    return true;
}

bool interior_contains(const GroebnerCone& cone, const WeightVector& w) {
    if (w.size() != cone.context->size()) throw DomainError("weight vector length mismatch");
    bool nonzero = false;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] != 0) nonzero = true;
    if (!nonzero) return false;  // the apex sits on the orthant face
    for (const auto& v : cone.normals)
        if (dot(v, w.entries()) <= 0) return false;
    return true;
}

SegmentExit segment_exit(const GroebnerCone& cone, const WeightVector& a, const WeightVector& b) {
    if (a.size() != b.size() || a.size() != cone.context->size())
        throw DomainError("segment endpoints have mismatched dimensions");
    if (a == b) throw DomainError("segment endpoints coincide");
    if (!contains(cone, a)) throw PreconditionError("segment start lies outside the cone");

    QVector dir(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) dir[i] = b[i] - a[i];

    bool bounded = false;
    Rational t_min(1);
    std::vector<IntVector> tight;
    for (const auto& v : cone.normals) {
        Rational vd = dot(v, dir);
        if (vd >= 0) continue;
        Rational t = -dot(v, a.entries()) / vd;
        if (!bounded || t < t_min) {
            bounded = true;
            t_min = t;
            tight = {v};
        } else if (t == t_min) {
            tight.push_back(v);
        }
    }
    if (!bounded || t_min >= 1) return SegmentExit{Rational(1), {}};
    std::sort(tight.begin(), tight.end());
    return SegmentExit{t_min, std::move(tight)};
}

std::string to_string(BoundaryClass c) {
    switch (c) {
        case BoundaryClass::OriginOnly: return "ORIGIN_ONLY";
        case BoundaryClass::MeetsOmegaU: return "MEETS_OMEGA_U";
        case BoundaryClass::MeetsOtherBoundary: return "MEETS_OTHER_BOUNDARY";
    }
    return "?";
}

namespace {

// Cone constraints as LinearConstraints, plus the orthant.
std::vector<LinearConstraint> cone_system(const GroebnerCone& cone) {
    std::size_t d = cone.context->size();
    std::vector<LinearConstraint> sys;
    for (const auto& v : cone.normals) sys.push_back({to_qvector(v), Rational(0), false});
    for (std::size_t i = 0; i < d; ++i) {
        QVector row(d, Rational(0));
        row[i] = 1;
        sys.push_back({std::move(row), Rational(0), false});
    }
    return sys;
}

// Does the cone meet {w_i = 0 for i in zero_set} in a nonzero point? The
// cone lives in the orthant, so "nonzero" normalizes to coordinate sum 1.
bool meets_face_nonzero(const GroebnerCone& cone, const std::vector<std::size_t>& zero_set) {
    std::size_t d = cone.context->size();
    auto sys = cone_system(cone);
    std::vector<bool> zeroed(d, false);
    for (std::size_t i : zero_set) {
        zeroed[i] = true;
        QVector row(d, Rational(0));
        row[i] = 1;
        sys.push_back({std::move(row), Rational(0), true});
    }
    QVector sum(d, Rational(0));
    for (std::size_t i = 0; i < d; ++i)
        if (!zeroed[i]) sum[i] = 1;
    sys.push_back({std::move(sum), Rational(1), true});
    return feasible(std::move(sys), d);
}

}  // namespace

BoundaryClass boundary_class(const GroebnerCone& cone) {
    const auto& ctx = *cone.context;
    std::vector<std::size_t> x_block(ctx.x_count());
    for (std::size_t i = 0; i < ctx.x_count(); ++i) x_block[i] = i;
    if (meets_face_nonzero(cone, x_block)) return BoundaryClass::MeetsOmegaU;
    for (std::size_t i = 0; i < ctx.size(); ++i) {
        if (meets_face_nonzero(cone, {i})) return BoundaryClass::MeetsOtherBoundary;
    }
    return BoundaryClass::OriginOnly;
}

bool contains_strict_omega_u_point(const GroebnerCone& cone) {
    const auto& ctx = *cone.context;
    std::size_t d = ctx.size();
    auto sys = cone_system(cone);
    for (std::size_t i = 0; i < ctx.x_count(); ++i) {
        QVector row(d, Rational(0));
        row[i] = 1;
        sys.push_back({std::move(row), Rational(0), true});
    }
    // Scale invariance: strictly positive U block iff >= 1 is feasible.
    for (std::size_t i = ctx.x_count(); i < d; ++i) {
        QVector row(d, Rational(0));
        row[i] = 1;
        sys.push_back({std::move(row), Rational(1), false});
    }
    return feasible(std::move(sys), d);
}

std::vector<IntVector> extreme_rays(const GroebnerCone& cone) {
    std::size_t d = cone.context->size();
    std::vector<IntVector> rows = all_constraints(cone);
    std::set<IntVector> rays;

    if (d == 1) {
        // The restricted cone is the nonnegative axis.
        rays.insert(IntVector{1});
    } else {
        // Candidate rays span the kernel of d-1 tight constraints.
        std::vector<std::size_t> idx(d - 1);
        std::vector<std::size_t> stack;
        auto recurse = [&](auto&& self, std::size_t start) -> void {
            if (stack.size() == d - 1) {
                QMatrix m;
                m.reserve(d - 1);
                for (std::size_t i : stack) m.push_back(to_qvector(rows[i]));
                auto kd = kernel_direction(m, d);
                if (!kd) return;
                IntVector r = primitive(*kd);
                if (satisfies_all(rows, r)) {
                    rays.insert(r);
                } else {
                    for (auto& x : r) x = -x;
                    if (satisfies_all(rows, r)) rays.insert(r);
                }
                return;
            }
            for (std::size_t i = start; i < rows.size(); ++i) {
                stack.push_back(i);
                self(self, i + 1);
                stack.pop_back();
            }
        };
        recurse(recurse, 0);
    }
    return std::vector<IntVector>(rays.begin(), rays.end());
}

std::vector<Facet> facets(const GroebnerCone& cone) {
    std::size_t d = cone.context->size();
    auto rays = extreme_rays(cone);
    std::vector<Facet> out;
    std::set<IntVector> seen;
    for (const auto& v : cone.normals) {
        if (!seen.insert(v).second) continue;
        std::vector<IntVector> on;
        for (const auto& r : rays) {
            long long acc = 0;
            for (std::size_t i = 0; i < d; ++i) acc += v[i] * r[i];
            if (acc == 0) on.push_back(r);
        }
        if (on.empty()) continue;
        QMatrix m;
        for (const auto& r : on) m.push_back(to_qvector(r));
        if (rank(m) + 1 != d) continue;
        IntVector p(d, 0);
        for (const auto& r : on)
            for (std::size_t i = 0; i < d; ++i) p[i] += r[i];
        bool exits = false;
        for (std::size_t i = 0; i < d; ++i)
            if (p[i] == 0 && v[i] > 0) exits = true;
        out.push_back(Facet{v, std::move(p), exits});
    }
    return out;
}

WeightVector interior_point(const GroebnerCone& cone) {
    std::size_t d = cone.context->size();
    auto rays = extreme_rays(cone);
    std::vector<long long> sum(d, 0);
    for (const auto& r : rays)
        for (std::size_t i = 0; i < d; ++i) sum[i] += r[i];
    WeightVector w = WeightVector::from_longs(sum);
    assert(interior_contains(cone, w));
    return w;
}

MonomialOrder display_order(const GroebnerCone& cone) {
    return compose_weight_order(interior_point(cone), make_lex(*cone.context));
}

std::string cell_key(const GroebnerBasis& basis) {
    GroebnerCone cone = cone_of(basis);
    auto strings = canonical_strings(basis.polys, display_order(cone));
    std::string out = "{";
    for (std::size_t i = 0; i < strings.size(); ++i) {
        if (i) out += "; ";
        out += strings[i];
    }
    out += "}";
    return out;
}

GroebnerBasis with_display_order(const GroebnerBasis& basis, const GroebnerCone& cone) {
    MonomialOrder order = display_order(cone);
    std::vector<Polynomial> polys = basis.polys;
    std::sort(polys.begin(), polys.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.compare(leading_exponent(a, order), leading_exponent(b, order)) < 0;
    });
    return GroebnerBasis{std::move(polys), std::move(order), basis.reduced, basis.normed};
}

}  // namespace groewalk
