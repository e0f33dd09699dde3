#pragma once

// Shared helpers for the test suites: quick constructors and seeded random
// generators for polynomials and orders.

#include <random>
#include <string>
#include <vector>

#include "groewalk/errors.hpp"
#include "groewalk/format.hpp"
#include "groewalk/groebner.hpp"
#include "groewalk/parser.hpp"

namespace gwtest {

using namespace groewalk;

inline ContextPtr ctx_xu() {
    static ContextPtr c = make_context({"x"}, {"u"});
    return c;
}

inline ContextPtr ctx_xuv() {
    static ContextPtr c = make_context({"x"}, {"u", "v"});
    return c;
}

inline Polynomial P(const std::string& text, const ContextPtr& ctx) {
    return parse_polynomial(text, ctx);
}

inline WeightVector W(std::vector<long long> entries) {
    return WeightVector::from_longs(entries);
}

inline MonomialOrder weight_order(std::vector<long long> row, const ContextPtr& ctx) {
    return compose_weight_order(W(std::move(row)), make_lex(*ctx));
}

// Random polynomial with at most max_terms terms, exponents in [0, max_exp],
// nonzero coefficients in [-3, 3]. May come out zero through cancellation.
inline Polynomial random_polynomial(std::mt19937_64& rng, const ContextPtr& ctx,
                                    std::size_t max_terms = 4, int max_exp = 3) {
    Polynomial p = Polynomial::zero(ctx);
    std::size_t n_terms = 1 + rng() % max_terms;
    for (std::size_t t = 0; t < n_terms; ++t) {
        Exponents e(ctx->size());
        for (auto& x : e) x = static_cast<int>(rng() % (max_exp + 1));
        long c = static_cast<long>(rng() % 7) - 3;
        if (c == 0) c = 1;
        p.add_term(e, Rational(c));
    }
    return p;
}

inline Polynomial random_nonzero_polynomial(std::mt19937_64& rng, const ContextPtr& ctx,
                                            std::size_t max_terms = 4, int max_exp = 3) {
    for (;;) {
        Polynomial p = random_polynomial(rng, ctx, max_terms, max_exp);
        if (!p.is_zero()) return p;
    }
}

inline Exponents random_exponents(std::mt19937_64& rng, const ContextPtr& ctx, int max_exp = 4) {
    Exponents e(ctx->size());
    for (auto& x : e) x = static_cast<int>(rng() % (max_exp + 1));
    return e;
}

inline MonomialOrder random_order(std::mt19937_64& rng, const ContextPtr& ctx) {
    std::vector<WeightVector> rows;
    std::size_t n_rows = rng() % 3;
    for (std::size_t r = 0; r < n_rows; ++r) {
        std::vector<long long> row(ctx->size());
        for (auto& x : row) x = static_cast<long long>(rng() % 6);
        rows.push_back(WeightVector::from_longs(row));
    }
    std::vector<std::size_t> perm(ctx->size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    return MonomialOrder(std::move(rows), std::move(perm));
}

// Ideals drawn the way the acceptance corpus requires: up to 3 generators,
// up to 4 terms each, coefficients in [-3, 3].
inline std::vector<Polynomial> random_ideal(std::mt19937_64& rng, const ContextPtr& ctx) {
    std::vector<Polynomial> gens;
    std::size_t n = 1 + rng() % 3;
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial p = random_polynomial(rng, ctx, 4, 2);
        if (!p.is_zero()) gens.push_back(p);
    }
    if (gens.empty()) gens.push_back(Polynomial::constant(ctx, Rational(1)));
    return gens;
}

}  // namespace gwtest
