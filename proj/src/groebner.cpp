#include "groewalk/groebner.hpp"

#include <algorithm>
#include <deque>

#include "groewalk/errors.hpp"

namespace groewalk {

GroebnerBasis buchberger(std::span<const Polynomial> generators, const MonomialOrder& order,
                         const BuchbergerOptions& opts) {
    std::vector<Polynomial> basis;
    for (const auto& f : generators) {
        if (!f.is_zero()) basis.push_back(f);
    }
    if (basis.empty()) throw DomainError("zero ideal basis");
    for (const auto& f : basis) {
        if (!same_context(f.context(), basis.front().context()))
            throw ContextMismatchError("generators from different variable contexts");
    }

    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

    if (opts.on_state) opts.on_state(basis);
    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.pop_front();
        if (opts.skip_coprime_pairs &&
            coprime(leading_exponent(basis[i], order), leading_exponent(basis[j], order)))
            continue;
        Polynomial s =
            remainder(s_polynomial(basis[i], basis[j], order), basis, order).remainder;
        if (s.is_zero()) continue;
        basis.push_back(std::move(s));
        for (std::size_t k = 0; k + 1 < basis.size(); ++k) pairs.emplace_back(k, basis.size() - 1);
        if (opts.on_state) opts.on_state(basis);
    }
    return GroebnerBasis{std::move(basis), order, false, false};
}

GroebnerBasis interreduce(const GroebnerBasis& basis, const StateObserver& on_state) {
    std::vector<Polynomial> polys;
    for (const auto& p : basis.polys)
        if (!p.is_zero()) polys.push_back(p);
    if (polys.empty()) throw DomainError("interreduce: empty basis");
    const MonomialOrder& order = basis.order;

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < polys.size();) {
            std::vector<Polynomial> others;
            others.reserve(polys.size() - 1);
            for (std::size_t j = 0; j < polys.size(); ++j)
                if (j != i) others.push_back(polys[j]);
            Polynomial p = remainder(polys[i], others, order).remainder;
            if (!(p == polys[i])) changed = true;
            if (p.is_zero()) {
                polys.erase(polys.begin() + static_cast<std::ptrdiff_t>(i));
            } else {
                polys[i] = std::move(p);
                ++i;
            }
            if (on_state) on_state(polys);
        }
    }
    for (auto& p : polys) {
        auto [lc, le] = leading_term(p, order);
        if (lc != 1) p = scale(p, Rational(1) / lc);
    }
    if (on_state) on_state(polys);
    std::sort(polys.begin(), polys.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.compare(leading_exponent(a, order), leading_exponent(b, order)) < 0;
    });
    return GroebnerBasis{std::move(polys), order, true, true};
}

GroebnerBasis reduced_gb(std::span<const Polynomial> generators, const MonomialOrder& order,
                         const BuchbergerOptions& buch_opts,
                         const StateObserver& on_interreduce_state) {
    return interreduce(buchberger(generators, order, buch_opts), on_interreduce_state);
}

std::vector<Polynomial> x_leading_elements(std::span<const Polynomial> polys,
                                           const MonomialOrder& order,
                                           const VariableContext& ctx) {
    std::vector<Polynomial> out;
    for (const auto& p : polys) {
        if (p.is_zero()) continue;
        if (exponents_pure_x(leading_exponent(p, order), ctx)) out.push_back(p);
    }
    return out;
}

std::vector<Polynomial> x_leading_elements(const GroebnerBasis& basis) {
    return x_leading_elements(basis.polys, basis.order, *basis.context());
}

bool is_ideal_specific_elim_order(const GroebnerBasis& basis) {
    if (!basis.reduced || !basis.normed)
        throw PreconditionError("ideal-specific test is stated on reduced normed bases");
    for (const auto& p : x_leading_elements(basis))
        if (!p.pure_x()) return false;
    return true;
}

std::vector<Polynomial> elimination_basis(const GroebnerBasis& basis) {
    if (!is_ideal_specific_elim_order(basis))
        throw PreconditionError("order is not ideal-specific for this elimination");
    std::vector<Polynomial> out;
    for (const auto& p : basis.polys)
        if (p.pure_x()) out.push_back(p);
    return out;
}

bool satisfies_reduced_gb_invariants(const GroebnerBasis& basis) {
    const MonomialOrder& order = basis.order;
    for (const auto& p : basis.polys) {
        if (p.is_zero()) return false;
        if (leading_term(p, order).first != 1) return false;
    }
    for (const auto& g : basis.polys) {
        const Exponents& lg = leading_exponent(g, order);
        for (const auto& h : basis.polys) {
            if (&g == &h) continue;
            for (const auto& [e, c] : h.terms())
                if (divides(lg, e)) return false;
        }
    }
    for (std::size_t i = 0; i < basis.polys.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.polys.size(); ++j) {
            Polynomial s = s_polynomial(basis.polys[i], basis.polys[j], order);
            if (s.is_zero()) continue;
            if (!remainder(s, basis.polys, order).remainder.is_zero()) return false;
        }
    }
    return true;
}

}  // namespace groewalk
