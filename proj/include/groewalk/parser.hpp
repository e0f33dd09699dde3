#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "groewalk/polynomial.hpp"

namespace groewalk {

// A parsed ideal file:
//   ring x ; eliminate u v     (variables before `eliminate` form X, after U)
//   f1 = x^2 - 1
//   weight sigma = (9, 12, 0)
//   # comment
struct ProblemFile {
    ContextPtr context;
    std::vector<std::pair<std::string, Polynomial>> generators;
    std::map<std::string, WeightVector> weights;

    const Polynomial* generator(std::string_view id) const;
    const WeightVector* weight(std::string_view id) const;
    std::vector<Polynomial> generator_polys() const;
};

ProblemFile parse_problem(std::string_view text);

// Regenerates a problem file in canonical form; parse(serialize(p)) == p.
std::string serialize_problem(const ProblemFile& problem);

// Expression grammar: `3*x^2*u - 1/2*u + 1` (integer or p/q coefficients,
// ^ powers, * products, + and -). Throws ParseError with position info.
Polynomial parse_polynomial(std::string_view text, const ContextPtr& ctx, int line = 1);

}  // namespace groewalk
