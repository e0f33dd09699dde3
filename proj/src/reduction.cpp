#include "groewalk/reduction.hpp"

#include "groewalk/errors.hpp"

namespace groewalk {

Polynomial reduce_step(const Polynomial& f, const Polynomial& g, const Exponents& target_exp,
                       const MonomialOrder& order) {
    const Rational* coeff = f.coefficient(target_exp);
    if (!coeff) throw PreconditionError("reduce_step: f has no term at the target exponent");
    auto [g_coeff, g_exp] = leading_term(g, order);
    if (!divides(g_exp, target_exp))
        throw PreconditionError("reduce_step: leading monomial of g does not divide the target");
    Polynomial factor =
        Polynomial::monomial(f.context(), exponent_diff(target_exp, g_exp), *coeff / g_coeff);
    return f - factor * g;
}

DivisionCertificate remainder(const Polynomial& f, std::span<const Polynomial> divisors,
                              const MonomialOrder& order) {
    for (const auto& g : divisors) {
        if (g.is_zero()) throw PreconditionError("remainder: zero divisor");
        if (!same_context(g.context(), f.context()))
            throw ContextMismatchError("remainder: divisor context mismatch");
    }
    std::vector<Exponents> lead_exps;
    lead_exps.reserve(divisors.size());
    for (const auto& g : divisors) lead_exps.push_back(leading_exponent(g, order));

    DivisionCertificate cert{std::vector<Polynomial>(divisors.size(), Polynomial::zero(f.context())),
                             f};
    // Each pass reduces the largest reducible monomial; the new monomials it
    // introduces are strictly smaller, so the scan position only descends.
    for (;;) {
        bool reduced = false;
        for (const auto& [e, c] : terms_descending(cert.remainder, order)) {
            for (std::size_t i = 0; i < divisors.size(); ++i) {
                if (!divides(lead_exps[i], e)) continue;
                auto [g_coeff, g_exp] = leading_term(divisors[i], order);
                Polynomial factor =
                    Polynomial::monomial(f.context(), exponent_diff(e, g_exp), c / g_coeff);
                cert.quotients[i] = cert.quotients[i] + factor;
                cert.remainder = cert.remainder - factor * divisors[i];
                reduced = true;
                break;
            }
            if (reduced) break;
        }
        if (!reduced) break;
    }
    return cert;
}

Polynomial s_polynomial(const Polynomial& p, const Polynomial& q, const MonomialOrder& order) {
    if (p.is_zero() || q.is_zero())
        throw DomainError("s_polynomial of the zero polynomial is undefined");
    auto [pc, pe] = leading_term(p, order);
    auto [qc, qe] = leading_term(q, order);
    Exponents l = exponent_lcm(pe, qe);
    Polynomial fp = Polynomial::monomial(p.context(), exponent_diff(l, pe), Rational(1) / pc);
    Polynomial fq = Polynomial::monomial(q.context(), exponent_diff(l, qe), Rational(1) / qc);
    return fp * p - fq * q;
}

}  // namespace groewalk
