#pragma once

#include <map>
#include <vector>

#include "groewalk/context.hpp"
#include "groewalk/rational.hpp"

namespace groewalk {

// Exponent tuple over a context's variables; always length n+m, entries >= 0
// inside polynomials.
using Exponents = std::vector<int>;

Exponents exponent_lcm(const Exponents& a, const Exponents& b);
bool divides(const Exponents& a, const Exponents& b);  // a | b componentwise
Exponents exponent_sum(const Exponents& a, const Exponents& b);
Exponents exponent_diff(const Exponents& a, const Exponents& b);  // a - b, requires b | a
bool coprime(const Exponents& a, const Exponents& b);

// Nonnegative rational weights, one per variable.
class WeightVector {
public:
    WeightVector() = default;  // empty until assigned
    explicit WeightVector(std::vector<Rational> w);
    static WeightVector from_longs(const std::vector<long long>& w);

    std::size_t size() const { return w_.size(); }
    const Rational& operator[](std::size_t i) const { return w_[i]; }
    const std::vector<Rational>& entries() const { return w_; }

    bool operator==(const WeightVector& other) const { return w_ == other.w_; }

private:
    std::vector<Rational> w_;
};

Rational weight_of(const WeightVector& w, const Exponents& e);

// Sparse multivariate polynomial over Q: exponent vector -> nonzero
// coefficient. The zero polynomial stores no terms.
class Polynomial {
public:
    using TermMap = std::map<Exponents, Rational>;

    explicit Polynomial(ContextPtr ctx);

    static Polynomial zero(ContextPtr ctx) { return Polynomial(std::move(ctx)); }
    static Polynomial constant(ContextPtr ctx, const Rational& c);
    static Polynomial monomial(ContextPtr ctx, Exponents e, const Rational& c);
    static Polynomial variable(ContextPtr ctx, std::size_t index);

    const ContextPtr& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const Rational* coefficient(const Exponents& e) const;

    // Adds c*y^e, erasing the term if the result cancels to zero.
    Polynomial& add_term(const Exponents& e, const Rational& c);

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    bool operator==(const Polynomial& other) const;

    // True when every term lies in K[X] (all U exponents zero).
    bool pure_x() const;

private:
    ContextPtr ctx_;
    TermMap terms_;
};

Polynomial scale(const Polynomial& f, const Rational& c);

// max over terms of w . alpha; error on the zero polynomial.
Rational weighted_degree(const Polynomial& f, const WeightVector& w);

// Sum of the terms attaining the weighted degree; error on zero.
Polynomial initial_form(const Polynomial& f, const WeightVector& w);

bool exponents_pure_x(const Exponents& e, const VariableContext& ctx);

}  // namespace groewalk
