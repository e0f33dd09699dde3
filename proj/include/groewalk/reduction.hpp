#pragma once

#include <span>

#include "groewalk/order.hpp"

namespace groewalk {

// Witness of one full division: f = sum_i quotients[i]*divisors[i] + remainder,
// with no monomial of the remainder divisible by any divisor's leading
// monomial.
struct DivisionCertificate {
    std::vector<Polynomial> quotients;
    Polynomial remainder;
};

// One reduction of f by g at f's monomial target_exp: subtracts
// (f_target / lt(g)) * g, cancelling that term. Precondition: the term
// exists and lm(g) divides it.
Polynomial reduce_step(const Polynomial& f, const Polynomial& g, const Exponents& target_exp,
                       const MonomialOrder& order);

// Full division of f by the divisor tuple. Deterministic: always reduces the
// order-largest reducible monomial of the work polynomial, trying divisors
// left to right.
DivisionCertificate remainder(const Polynomial& f, std::span<const Polynomial> divisors,
                              const MonomialOrder& order);

// S(p,q) = (y^g / lt(p)) p - (y^g / lt(q)) q with y^g = lcm(lm(p), lm(q)).
Polynomial s_polynomial(const Polynomial& p, const Polynomial& q, const MonomialOrder& order);

}  // namespace groewalk
