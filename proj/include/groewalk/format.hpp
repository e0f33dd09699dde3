#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "groewalk/order.hpp"

namespace groewalk {

// Canonical polynomial text: terms strictly descending under the given
// order, `p/q` coefficients, `^` powers, unit coefficients and zero
// exponents elided. Example: 3*x^2*u - 1/2*u + 1. The zero polynomial
// prints as "0".
std::string to_canonical_string(const Polynomial& f, const MonomialOrder& order);

// Same text form but under a fixed order-independent comparator (total
// degree, then declaration lex). Used wherever a serialization must not
// depend on any particular monomial order.
std::string to_fixed_string(const Polynomial& f);

// Order-independent fingerprint of a polynomial set: fixed-form strings,
// sorted, joined. Identifies an ideal basis regardless of how it was found.
std::string fingerprint(std::span<const Polynomial> polys);

// Canonical texts of a basis: each polynomial under the given order, the
// list sorted ascending by leading monomial.
std::vector<std::string> canonical_strings(std::span<const Polynomial> polys,
                                           const MonomialOrder& order);

// `rows=[[9,6,5]];tiebreak=x>u>v` (rows may hold rationals; empty rows print
// as `rows=[]`).
std::string order_spec_string(const MonomialOrder& order, const VariableContext& ctx);

// Parses the spec format above. Omitted tiebreak defaults to declaration
// order. Throws ParseError on malformed input.
MonomialOrder parse_order_spec(std::string_view spec, const VariableContext& ctx);

std::string weight_vector_string(const WeightVector& w);

}  // namespace groewalk
