#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace gwtest;

namespace {

// Re-expands the certificate identity f = sum a_i g_i + r.
bool certificate_holds(const Polynomial& f, std::span<const Polynomial> divisors,
                       const DivisionCertificate& cert) {
    Polynomial acc = cert.remainder;
    for (std::size_t i = 0; i < divisors.size(); ++i) acc = acc + cert.quotients[i] * divisors[i];
    return acc == f;
}

bool irreducible_by(const Polynomial& r, std::span<const Polynomial> divisors,
                    const MonomialOrder& order) {
    for (const auto& g : divisors) {
        const Exponents& lg = leading_exponent(g, order);
        for (const auto& [e, c] : r.terms())
            if (divides(lg, e)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("single reduction step") {
    auto ctx = ctx_xu();
    MonomialOrder lex = make_lex(*ctx);

    CHECK(reduce_step(P("x^2", ctx), P("x^2 - 1", ctx), {2, 0}, lex) == P("1", ctx));

    // self-reduction of a normed polynomial kills it entirely
    Polynomial g = P("x^2 - 1", ctx);
    CHECK(reduce_step(g, g, {2, 0}, lex).is_zero());

    // x^2 does not divide x*u^2
    CHECK_THROWS_AS(reduce_step(P("x*u^2 - x - u", ctx), g, {1, 2}, lex), PreconditionError);
    CHECK_THROWS_AS(reduce_step(g, g, {1, 1}, lex), PreconditionError);
}

TEST_CASE("remainder on the worked examples") {
    auto ctx = ctx_xu();
    MonomialOrder lex = make_lex(*ctx);
    std::vector<Polynomial> G{P("x^2 - 1", ctx)};

    SUBCASE("member of the divisor tuple reduces to zero") {
        CHECK(remainder(G[0], G, lex).remainder.is_zero());
    }
    SUBCASE("nothing divisible, remainder is f") {
        Polynomial f = P("x*u^2 - x - u", ctx);
        auto cert = remainder(f, G, lex);
        CHECK(cert.remainder == f);
        CHECK(cert.quotients[0].is_zero());
    }
    SUBCASE("non-leading monomial gets reduced too") {
        auto cert = remainder(P("x^2*u", ctx), G, lex);
        CHECK(cert.remainder == P("u", ctx));
        CHECK(cert.quotients[0] == P("u", ctx));
    }
    SUBCASE("empty divisor tuple") {
        Polynomial f = P("x^2 - 1", ctx);
        auto cert = remainder(f, {}, lex);
        CHECK(cert.remainder == f);
        CHECK(cert.quotients.empty());
    }
}

TEST_CASE("s-polynomials") {
    auto ctx = ctx_xu();

    SUBCASE("S(p,p) = 0") {
        MonomialOrder lex = make_lex(*ctx);
        Polynomial p = P("x^2 + u + 1", ctx);
        CHECK(s_polynomial(p, p, lex).is_zero());
    }
    SUBCASE("cancelling pair reproduces a generator") {
        MonomialOrder o = weight_order({3, 2}, ctx);  // lt(x*u - u^2 + 1) = x*u
        Polynomial s = s_polynomial(P("x^2 - 1", ctx), P("x*u - u^2 + 1", ctx), o);
        CHECK(s == P("x*u^2 - x - u", ctx));
    }
    SUBCASE("coprime leading monomials") {
        MonomialOrder o = weight_order({1, 4}, ctx);  // lt(u^2 - x*u - 1) = u^2
        Polynomial p = P("x^2 - 1", ctx);
        Polynomial q = P("u^2 - x*u - 1", ctx);
        // oracle: S = u^2 * p - x^2 * q, expanded with ring arithmetic
        Polynomial expected = P("u^2", ctx) * p - P("x^2", ctx) * q;
        CHECK(s_polynomial(p, q, o) == expected);
        CHECK(expected == P("x^3*u + x^2 - u^2", ctx));
    }
}

TEST_CASE("certificate identity and irreducibility on random instances") {
    std::mt19937_64 rng(3001);
    auto ctx = ctx_xuv();
    for (int i = 0; i < 200; ++i) {
        MonomialOrder o = random_order(rng, ctx);
        Polynomial f = random_polynomial(rng, ctx, 5);
        std::vector<Polynomial> divisors;
        std::size_t k = 1 + rng() % 3;
        for (std::size_t j = 0; j < k; ++j)
            divisors.push_back(random_nonzero_polynomial(rng, ctx, 3));
        auto cert = remainder(f, divisors, o);
        CHECK(certificate_holds(f, divisors, cert));
        CHECK(irreducible_by(cert.remainder, divisors, o));
    }
}

TEST_CASE("remainder rejects zero divisors") {
    auto ctx = ctx_xu();
    std::vector<Polynomial> G{Polynomial::zero(ctx)};
    CHECK_THROWS_AS(remainder(P("x", ctx), G, make_lex(*ctx)), PreconditionError);
}
