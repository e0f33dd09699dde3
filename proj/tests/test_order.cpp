#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace gwtest;

TEST_CASE("pure lex compares declaration order") {
    auto ctx = ctx_xu();
    MonomialOrder lex = make_lex(*ctx);
    CHECK(lex.compare({1, 0}, {0, 1}) > 0);  // x > u
    CHECK(lex.compare({1, 1}, {1, 1}) == std::strong_ordering::equal);
}

TEST_CASE("single weight row with lex tiebreak") {
    auto ctx = ctx_xuv();
    MonomialOrder o = weight_order({9, 6, 5}, ctx);
    CHECK(o.compare({1, 0, 0}, {0, 1, 1}) < 0);  // 9 < 11
}

TEST_CASE("leading terms on the worked examples") {
    auto ctx = ctx_xu();
    auto [c1, e1] = leading_term(P("u^2 - x*u - 1", ctx), weight_order({1, 4}, ctx));
    CHECK(c1 == 1);
    CHECK(e1 == Exponents{0, 2});

    auto [c2, e2] = leading_term(P("x + 2*u - u^3", ctx), weight_order({4, 1}, ctx));
    CHECK(c2 == 1);
    CHECK(e2 == Exponents{1, 0});

    auto [c3, e3] = leading_term(P("-5", ctx), make_lex(*ctx));
    CHECK(c3 == -5);
    CHECK(e3 == Exponents{0, 0});

    CHECK_THROWS_AS(leading_term(Polynomial::zero(ctx), make_lex(*ctx)), DomainError);
}

TEST_CASE("composite weight order") {
    auto ctx = ctx_xuv();
    MonomialOrder lex = make_lex(*ctx);
    MonomialOrder composed = compose_weight_order(W({9, 6, 5}), lex);
    // deg(u^2) = 12 beats deg(x) = 9
    CHECK(composed.compare({0, 2, 0}, {1, 0, 0}) > 0);

    std::mt19937_64 rng(2001);
    MonomialOrder zero_composed = compose_weight_order(W({0, 0, 0}), lex);
    MonomialOrder twice = compose_weight_order(W({9, 6, 5}), composed);
    for (int i = 0; i < 200; ++i) {
        Exponents a = random_exponents(rng, ctx);
        Exponents b = random_exponents(rng, ctx);
        CHECK(zero_composed.compare(a, b) == lex.compare(a, b));
        CHECK(twice.compare(a, b) == composed.compare(a, b));
    }
}

TEST_CASE("universal elimination order") {
    auto ctx = ctx_xu();
    MonomialOrder block = make_universal_elim_order(*ctx);
    CHECK(leading_exponent(P("x*u^2 - x - u", ctx), block) == Exponents{1, 2});
    CHECK(leading_exponent(P("x + u", ctx), block) == Exponents{0, 1});

    // On pure-X polynomials the order restricts to lex on X.
    auto ctx2 = make_context({"x", "y"}, {"u"});
    MonomialOrder block2 = make_universal_elim_order(*ctx2);
    MonomialOrder lex2 = make_lex(*ctx2);
    std::mt19937_64 rng(2002);
    for (int i = 0; i < 100; ++i) {
        Exponents a = random_exponents(rng, ctx2);
        Exponents b = random_exponents(rng, ctx2);
        a[2] = b[2] = 0;
        CHECK(block2.compare(a, b) == lex2.compare(a, b));
    }
}

TEST_CASE("universal elimination property on random polynomials") {
    auto ctx = ctx_xuv();
    MonomialOrder block = make_universal_elim_order(*ctx);
    std::mt19937_64 rng(2003);
    for (int i = 0; i < 300; ++i) {
        Polynomial f = random_nonzero_polynomial(rng, ctx, 5);
        if (exponents_pure_x(leading_exponent(f, block), *ctx)) CHECK(f.pure_x());
    }
}

TEST_CASE("order axioms on random triples") {
    auto ctx = ctx_xuv();
    std::mt19937_64 rng(2004);
    for (int trial = 0; trial < 40; ++trial) {
        MonomialOrder o = random_order(rng, ctx);
        for (int i = 0; i < 30; ++i) {
            Exponents a = random_exponents(rng, ctx);
            Exponents b = random_exponents(rng, ctx);
            Exponents c = random_exponents(rng, ctx);
            Exponents t = random_exponents(rng, ctx);

            // totality + antisymmetry
            auto ab = o.compare(a, b);
            auto ba = o.compare(b, a);
            CHECK(ab == (ba < 0   ? std::strong_ordering::greater
                         : ba > 0 ? std::strong_ordering::less
                                  : std::strong_ordering::equal));
            CHECK((o.compare(a, b) == std::strong_ordering::equal) == (a == b));

            // transitivity
            if (o.compare(a, b) <= 0 && o.compare(b, c) <= 0) CHECK(o.compare(a, c) <= 0);

            // multiplicativity
            if (o.compare(a, b) < 0)
                CHECK(o.compare(exponent_sum(a, t), exponent_sum(b, t)) < 0);

            // 1 is minimal
            Exponents one(ctx->size(), 0);
            if (a != one) CHECK(o.compare(one, a) < 0);
        }
    }
}

TEST_CASE("order spec round trip") {
    auto ctx = ctx_xuv();
    MonomialOrder o = weight_order({9, 6, 5}, ctx);
    std::string spec = order_spec_string(o, *ctx);
    CHECK(spec == "rows=[[9,6,5]];tiebreak=x>u>v");
    MonomialOrder parsed = parse_order_spec(spec, *ctx);
    std::mt19937_64 rng(2005);
    for (int i = 0; i < 100; ++i) {
        Exponents a = random_exponents(rng, ctx);
        Exponents b = random_exponents(rng, ctx);
        CHECK(parsed.compare(a, b) == o.compare(a, b));
    }
    CHECK_THROWS_AS(parse_order_spec("rows=[[1,2]];tiebreak=x>u>v", *ctx), ParseError);
    CHECK_THROWS_AS(parse_order_spec("rows=[[1,2,3]];tiebreak=x>u", *ctx), ParseError);
    CHECK_THROWS_AS(parse_order_spec("nonsense", *ctx), ParseError);
    // omitted tiebreak defaults to declaration order
    MonomialOrder defaulted = parse_order_spec("rows=[]", *ctx);
    CHECK(defaulted.compare({1, 0, 0}, {0, 1, 0}) > 0);
}
