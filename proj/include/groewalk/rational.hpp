#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace groewalk {

// Exact arbitrary-precision rational. mpq_class keeps values reduced to
// lowest terms with a positive denominator after canonicalization, which is
// exactly the invariant the rest of the library relies on.
using Rational = mpq_class;
using Integer = mpz_class;

// num/den reduced to lowest terms; den must be nonzero.
Rational make_rational(long num, long den = 1);

// Parses "p", "-p" or "p/q". Throws DomainError on malformed input or q = 0.
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

std::vector<Rational> to_rationals(const std::vector<long long>& v);

}  // namespace groewalk
