#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace gwtest;

namespace {

// Dense multiplication oracle: convolution over a bounded exponent box,
// independent of the sparse-map implementation path.
Polynomial dense_mul_oracle(const Polynomial& a, const Polynomial& b) {
    const ContextPtr& ctx = a.context();
    std::size_t d = ctx->size();
    Exponents bound(d, 0);
    for (const auto& [e, c] : a.terms())
        for (std::size_t i = 0; i < d; ++i) bound[i] = std::max(bound[i], e[i]);
    Exponents bound_b(d, 0);
    for (const auto& [e, c] : b.terms())
        for (std::size_t i = 0; i < d; ++i) bound_b[i] = std::max(bound_b[i], e[i]);
    for (std::size_t i = 0; i < d; ++i) bound[i] += bound_b[i];

    std::size_t total = 1;
    for (std::size_t i = 0; i < d; ++i) total *= static_cast<std::size_t>(bound[i] + 1);
    std::vector<Rational> grid(total, Rational(0));
    auto flat = [&](const Exponents& e) {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < d; ++i) idx = idx * static_cast<std::size_t>(bound[i] + 1) +
                                                  static_cast<std::size_t>(e[i]);
        return idx;
    };
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) grid[flat(exponent_sum(ea, eb))] += ca * cb;

    Polynomial out = Polynomial::zero(ctx);
    Exponents e(d, 0);
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rest = idx;
        for (std::size_t i = d; i-- > 0;) {
            e[i] = static_cast<int>(rest % static_cast<std::size_t>(bound[i] + 1));
            rest /= static_cast<std::size_t>(bound[i] + 1);
        }
        if (grid[idx] != 0) out.add_term(e, grid[idx]);
    }
    return out;
}

}  // namespace

TEST_CASE("arithmetic on the worked examples") {
    auto ctx = ctx_xu();
    CHECK(P("x^2 - 1", ctx) + P("1", ctx) == P("x^2", ctx));
    CHECK((P("x + u", ctx) * Polynomial::zero(ctx)).is_zero());
    CHECK(P("x + u", ctx) * P("x - u", ctx) == P("x^2 - u^2", ctx));
}

TEST_CASE("context mismatch is a structural error") {
    auto a = P("x + u", ctx_xu());
    auto b = P("x + u", ctx_xuv());
    CHECK_THROWS_AS(a + b, ContextMismatchError);
    CHECK_THROWS_AS(a * b, ContextMismatchError);
}

TEST_CASE("weighted degree") {
    CHECK(weighted_degree(P("x^2 - 1", ctx_xu()), W({1, 1})) == 2);
    CHECK(weighted_degree(P("x + u + v", ctx_xuv()), W({9, 6, 5})) == 9);
    CHECK(weighted_degree(P("7", ctx_xu()), W({5, 3})) == 0);
    CHECK_THROWS_AS(weighted_degree(Polynomial::zero(ctx_xu()), W({1, 1})), DomainError);
}

TEST_CASE("initial form") {
    auto ctx = ctx_xu();
    CHECK(initial_form(P("u^2 - x*u - 1", ctx), W({1, 1})) == P("u^2 - x*u", ctx));
    CHECK(initial_form(P("x^2 - 1", ctx), W({0, 0})) == P("x^2 - 1", ctx));
    CHECK(initial_form(P("x*u^2 - x - u", ctx), W({0, 1})) == P("x*u^2", ctx));
    CHECK_THROWS_AS(initial_form(Polynomial::zero(ctx), W({1, 1})), DomainError);
}

TEST_CASE("initial form is idempotent and degree is additive") {
    std::mt19937_64 rng(1001);
    auto ctx = ctx_xuv();
    for (int i = 0; i < 200; ++i) {
        Polynomial f = random_nonzero_polynomial(rng, ctx);
        Polynomial g = random_nonzero_polynomial(rng, ctx);
        std::vector<long long> wraw(3);
        for (auto& w : wraw) w = static_cast<long long>(rng() % 5);
        WeightVector w = W(wraw);

        Polynomial in_f = initial_form(f, w);
        CHECK(initial_form(in_f, w) == in_f);

        Polynomial prod = f * g;
        if (!prod.is_zero())
            CHECK(weighted_degree(prod, w) == weighted_degree(f, w) + weighted_degree(g, w));
    }
}

TEST_CASE("mul and add agree with the dense oracle") {
    std::mt19937_64 rng(1002);
    auto ctx = ctx_xuv();
    for (int i = 0; i < 150; ++i) {
        Polynomial f = random_polynomial(rng, ctx, 6);
        Polynomial g = random_polynomial(rng, ctx, 6);
        CHECK(f * g == dense_mul_oracle(f, g));
        // add oracle: term-by-term via add_term on a fresh polynomial
        Polynomial expected = Polynomial::zero(ctx);
        for (const auto& [e, c] : f.terms()) expected.add_term(e, c);
        for (const auto& [e, c] : g.terms()) expected.add_term(e, c);
        CHECK(f + g == expected);
    }
}

TEST_CASE("coefficient arithmetic is exact") {
    std::mt19937_64 rng(1003);
    for (int i = 0; i < 300; ++i) {
        long a = static_cast<long>(rng() % 2001) - 1000;
        long b = 1 + static_cast<long>(rng() % 999);
        long c = static_cast<long>(rng() % 2001) - 1000;
        long d = 1 + static_cast<long>(rng() % 999);
        Rational sum = make_rational(a, b) + make_rational(c, d);
        CHECK(sum == make_rational(a * d + c * b, b * d));  // cross-multiplication oracle
        CHECK(sum.get_den() > 0);
        Rational copy = sum;
        copy.canonicalize();
        CHECK(copy == sum);
        CHECK(gcd(Integer(sum.get_num()), Integer(sum.get_den())) == 1);
    }
}

TEST_CASE("no zero coefficients are ever stored") {
    std::mt19937_64 rng(1004);
    auto ctx = ctx_xu();
    for (int i = 0; i < 100; ++i) {
        Polynomial f = random_polynomial(rng, ctx);
        Polynomial g = random_polynomial(rng, ctx);
        Polynomial diff = f - f;
        Polynomial prod = f * g;
        CHECK(diff.is_zero());
        for (const auto& [e, c] : diff.terms()) CHECK(c != 0);
        for (const auto& [e, c] : prod.terms()) CHECK(c != 0);
    }
}

TEST_CASE("weight vectors reject negative entries") {
    CHECK_THROWS_AS(WeightVector({Rational(-1), Rational(0)}), DomainError);
}
