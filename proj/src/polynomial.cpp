#include "groewalk/polynomial.hpp"

#include <algorithm>
#include <cassert>

#include "groewalk/errors.hpp"

namespace groewalk {

Exponents exponent_lcm(const Exponents& a, const Exponents& b) {
    assert(a.size() == b.size());
    Exponents out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
    return out;
}

bool divides(const Exponents& a, const Exponents& b) {
    assert(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exponents exponent_sum(const Exponents& a, const Exponents& b) {
    assert(a.size() == b.size());
    Exponents out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Exponents exponent_diff(const Exponents& a, const Exponents& b) {
    assert(divides(b, a));
    Exponents out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

bool coprime(const Exponents& a, const Exponents& b) {
    assert(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

WeightVector::WeightVector(std::vector<Rational> w) : w_(std::move(w)) {
    if (w_.empty()) throw DomainError("empty weight vector");
    for (const auto& x : w_)
        if (x < 0) throw DomainError("weight vector entry is negative");
}

WeightVector WeightVector::from_longs(const std::vector<long long>& w) {
    return WeightVector(to_rationals(w));
}

Rational weight_of(const WeightVector& w, const Exponents& e) {
    assert(w.size() == e.size());
    Rational acc(0);
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0) acc += w[i] * e[i];
    return acc;
}

Polynomial::Polynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {
    if (!ctx_) throw DomainError("polynomial without a variable context");
}

Polynomial Polynomial::constant(ContextPtr ctx, const Rational& c) {
    Polynomial p(std::move(ctx));
    p.add_term(Exponents(p.ctx_->size(), 0), c);
    return p;
}

Polynomial Polynomial::monomial(ContextPtr ctx, Exponents e, const Rational& c) {
    Polynomial p(std::move(ctx));
    if (e.size() != p.ctx_->size()) throw DomainError("exponent vector length mismatch");
    for (int x : e)
        if (x < 0) throw DomainError("negative exponent");
    p.add_term(e, c);
    return p;
}

Polynomial Polynomial::variable(ContextPtr ctx, std::size_t index) {
    Polynomial p(std::move(ctx));
    if (index >= p.ctx_->size()) throw DomainError("variable index out of range");
    Exponents e(p.ctx_->size(), 0);
    e[index] = 1;
    p.add_term(e, Rational(1));
    return p;
}

const Rational* Polynomial::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? nullptr : &it->second;
}

Polynomial& Polynomial::add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return *this;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(ctx_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

namespace {
void check_same_context(const Polynomial& a, const Polynomial& b) {
    if (!same_context(a.context(), b.context()))
        throw ContextMismatchError("polynomials from different variable contexts");
}
}  // namespace

Polynomial Polynomial::operator+(const Polynomial& other) const {
    check_same_context(*this, other);
    Polynomial out = *this;
    for (const auto& [e, c] : other.terms_) out.add_term(e, c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    check_same_context(*this, other);
    Polynomial out = *this;
    for (const auto& [e, c] : other.terms_) out.add_term(e, -c);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    check_same_context(*this, other);
    Polynomial out(ctx_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : other.terms_) out.add_term(exponent_sum(ea, eb), ca * cb);
    return out;
}

bool Polynomial::operator==(const Polynomial& other) const {
    return same_context(ctx_, other.ctx_) && terms_ == other.terms_;
}

bool Polynomial::pure_x() const {
    for (const auto& [e, c] : terms_)
        if (!exponents_pure_x(e, *ctx_)) return false;
    return true;
}

Polynomial scale(const Polynomial& f, const Rational& c) {
    Polynomial out(f.context());
    if (c == 0) return out;
    for (const auto& [e, coeff] : f.terms()) out.add_term(e, coeff * c);
    return out;
}

Rational weighted_degree(const Polynomial& f, const WeightVector& w) {
    if (f.is_zero()) throw DomainError("weighted degree of the zero polynomial is undefined");
    if (w.size() != f.context()->size()) throw DomainError("weight vector length mismatch");
    bool first = true;
    Rational best(0);
    for (const auto& [e, c] : f.terms()) {
        Rational d = weight_of(w, e);
        if (first || d > best) {
            best = d;
            first = false;
        }
    }
    return best;
}

Polynomial initial_form(const Polynomial& f, const WeightVector& w) {
    Rational deg = weighted_degree(f, w);
    Polynomial out(f.context());
    for (const auto& [e, c] : f.terms())
        if (weight_of(w, e) == deg) out.add_term(e, c);
    return out;
}

bool exponents_pure_x(const Exponents& e, const VariableContext& ctx) {
    for (std::size_t i = ctx.x_count(); i < ctx.size(); ++i)
        if (e[i] != 0) return false;
    return true;
}

}  // namespace groewalk
