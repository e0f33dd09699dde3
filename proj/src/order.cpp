#include "groewalk/order.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "groewalk/errors.hpp"

namespace groewalk {

namespace {

void validate_permutation(const std::vector<std::size_t>& perm) {
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t i : perm) {
        if (i >= perm.size() || seen[i]) throw DomainError("tie-break is not a permutation");
        seen[i] = true;
    }
}

}  // namespace

MonomialOrder::MonomialOrder(std::vector<WeightVector> rows, std::vector<std::size_t> tiebreak)
    : tiebreak_(std::move(tiebreak)) {
    if (tiebreak_.empty()) throw DomainError("monomial order needs a tie-break permutation");
    validate_permutation(tiebreak_);
    rows_.reserve(rows.size());
    for (auto& r : rows) {
        if (r.size() != tiebreak_.size()) throw DomainError("order row length mismatch");
        rows_.push_back(r.entries());
    }
}

MonomialOrder MonomialOrder::with_signed_rows(std::vector<std::vector<Rational>> rows,
                                              std::vector<std::size_t> tiebreak) {
    MonomialOrder o;
    o.tiebreak_ = std::move(tiebreak);
    if (o.tiebreak_.empty()) throw DomainError("monomial order needs a tie-break permutation");
    validate_permutation(o.tiebreak_);
    for (const auto& r : rows)
        if (r.size() != o.tiebreak_.size()) throw DomainError("order row length mismatch");
    o.rows_ = std::move(rows);
    return o;
}

std::strong_ordering MonomialOrder::compare(const Exponents& a, const Exponents& b) const {
    assert(a.size() == dimension() && b.size() == dimension());
    for (const auto& row : rows_) {
        Rational da(0), db(0);
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (a[i] != 0) da += row[i] * a[i];
            if (b[i] != 0) db += row[i] * b[i];
        }
        if (da != db) return da < db ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    for (std::size_t i : tiebreak_) {
        if (a[i] != b[i])
            return a[i] < b[i] ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

MonomialOrder make_lex(const VariableContext& ctx) {
    std::vector<std::size_t> perm(ctx.size());
    std::iota(perm.begin(), perm.end(), 0);
    return MonomialOrder({}, std::move(perm));
}

MonomialOrder make_lex(const VariableContext& ctx, std::vector<std::size_t> perm) {
    if (perm.size() != ctx.size()) throw DomainError("tie-break permutation length mismatch");
    return MonomialOrder({}, std::move(perm));
}

MonomialOrder make_universal_elim_order(const VariableContext& ctx) {
    std::vector<Rational> row(ctx.size(), Rational(0));
    for (std::size_t i = ctx.x_count(); i < ctx.size(); ++i) row[i] = 1;
    std::vector<std::size_t> perm(ctx.size());
    std::iota(perm.begin(), perm.end(), 0);
    return MonomialOrder({WeightVector(std::move(row))}, std::move(perm));
}

MonomialOrder compose_weight_order(const WeightVector& w, const MonomialOrder& order) {
    if (w.size() != order.dimension()) throw DomainError("weight vector length mismatch");
    std::vector<std::vector<Rational>> rows;
    rows.reserve(order.rows().size() + 1);
    rows.push_back(w.entries());
    rows.insert(rows.end(), order.rows().begin(), order.rows().end());
    return MonomialOrder::with_signed_rows(std::move(rows), order.tiebreak());
}

std::pair<Rational, Exponents> leading_term(const Polynomial& f, const MonomialOrder& order) {
    if (f.is_zero()) throw DomainError("leading term of the zero polynomial is undefined");
    const auto* best = &*f.terms().begin();
    for (const auto& term : f.terms())
        if (order.compare(term.first, best->first) > 0) best = &term;
    return {best->second, best->first};
}

const Exponents& leading_exponent(const Polynomial& f, const MonomialOrder& order) {
    if (f.is_zero()) throw DomainError("leading term of the zero polynomial is undefined");
    const Exponents* best = &f.terms().begin()->first;
    for (const auto& term : f.terms())
        if (order.compare(term.first, *best) > 0) best = &term.first;
    return *best;
}

std::vector<std::pair<Exponents, Rational>> terms_descending(const Polynomial& f,
                                                             const MonomialOrder& order) {
    std::vector<std::pair<Exponents, Rational>> out(f.terms().begin(), f.terms().end());
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
        return order.compare(a.first, b.first) > 0;
    });
    return out;
}

}  // namespace groewalk
