#pragma once

#include <optional>
#include <vector>

#include "groewalk/rational.hpp"

// Small exact linear-algebra helpers used by the cone geometry. Everything
// here is desk-scale: dimensions up to ~6 and a few dozen constraints.
namespace groewalk {

using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>;
using IntVector = std::vector<long long>;

std::size_t rank(QMatrix m);

// If the kernel of m (rows = constraints) is one-dimensional, returns a
// spanning vector; otherwise nullopt.
std::optional<QVector> kernel_direction(const QMatrix& m, std::size_t dim);

// Scales v to the unique primitive integer vector with the same orientation
// (integer entries, gcd 1). v must be nonzero.
IntVector primitive(const QVector& v);
IntVector primitive(const IntVector& v);

// One linear constraint sum_i coeffs[i]*x_i >= rhs (or == rhs).
struct LinearConstraint {
    QVector coeffs;
    Rational rhs;
    bool equality = false;
};

// Exact feasibility of a finite system of linear constraints via
// Fourier-Motzkin elimination. Exponential in the worst case; fine at the
// problem sizes this library guards to.
bool feasible(std::vector<LinearConstraint> constraints, std::size_t dim);

Rational dot(const QVector& a, const QVector& b);
Rational dot(const IntVector& a, const QVector& b);
long long dot(const IntVector& a, const std::vector<int>& b);

}  // namespace groewalk
