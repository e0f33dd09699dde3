#include "groewalk/rational.hpp"

#include <cctype>

#include "groewalk/errors.hpp"

namespace groewalk {

Rational make_rational(long num, long den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw DomainError("empty rational literal");
    for (char c : s) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+'))
            throw DomainError("malformed rational literal: " + s);
    }
    try {
        Rational r(s);
        if (r.get_den() == 0) throw DomainError("rational with zero denominator: " + s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw DomainError("malformed rational literal: " + s);
    }
}

std::string to_string(const Rational& r) {
    return r.get_str();
}

std::vector<Rational> to_rationals(const std::vector<long long>& v) {
    std::vector<Rational> out;
    out.reserve(v.size());
    for (long long x : v) out.emplace_back(static_cast<long>(x));
    return out;
}

}  // namespace groewalk
