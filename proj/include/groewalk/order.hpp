#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "groewalk/polynomial.hpp"

namespace groewalk {

// Weight-matrix monomial order: exponents are compared by the row-value
// tuples (r1.a, r2.a, ...), ties broken by a lexicographic pass over a
// variable permutation. The trailing lex pass makes the order total, so
// compare() returns equal only for identical exponent vectors.
//
// Rows built from weight vectors are nonnegative, which together with the
// lex tie-break yields a proper monomial order (1 minimal, multiplicative
// well-order). Cone traversal additionally needs orders "just past a facet";
// those carry one signed row after a strictly positive one and are created
// through with_signed_rows.
class MonomialOrder {
public:
    MonomialOrder() = default;  // zero-dimensional until assigned
    MonomialOrder(std::vector<WeightVector> rows, std::vector<std::size_t> tiebreak);

    static MonomialOrder with_signed_rows(std::vector<std::vector<Rational>> rows,
                                          std::vector<std::size_t> tiebreak);

    std::strong_ordering compare(const Exponents& a, const Exponents& b) const;

    const std::vector<std::vector<Rational>>& rows() const { return rows_; }
    const std::vector<std::size_t>& tiebreak() const { return tiebreak_; }
    std::size_t dimension() const { return tiebreak_.size(); }

    bool less(const Exponents& a, const Exponents& b) const { return compare(a, b) < 0; }

private:
    std::vector<std::vector<Rational>> rows_;
    std::vector<std::size_t> tiebreak_;  // variable indices, highest priority first
};

// Pure lexicographic order; default permutation is declaration order
// (x block first, so x1 > ... > xn > u1 > ... > um).
MonomialOrder make_lex(const VariableContext& ctx);
MonomialOrder make_lex(const VariableContext& ctx, std::vector<std::size_t> perm);

// Block order eliminating U: one row with weight 1 on every U variable,
// lex tie-break. Guarantees lt in K[X] implies f in K[X] for every f.
MonomialOrder make_universal_elim_order(const VariableContext& ctx);

// (w | order): compare by w-degree first, fall back to the given order.
MonomialOrder compose_weight_order(const WeightVector& w, const MonomialOrder& order);

// The order-maximal term of f; error on the zero polynomial.
std::pair<Rational, Exponents> leading_term(const Polynomial& f, const MonomialOrder& order);
const Exponents& leading_exponent(const Polynomial& f, const MonomialOrder& order);

// Terms of f sorted strictly descending under the order.
std::vector<std::pair<Exponents, Rational>> terms_descending(const Polynomial& f,
                                                             const MonomialOrder& order);

}  // namespace groewalk
