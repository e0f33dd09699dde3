#include "groewalk/linear.hpp"

#include <algorithm>
#include <cassert>

#include "groewalk/errors.hpp"

namespace groewalk {

namespace {

// Row echelon form in place; returns the pivot column of each processed row.
std::size_t echelon(QMatrix& m) {
    std::size_t rows = m.size();
    if (rows == 0) return 0;
    std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (m[i][c] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational factor = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
        }
        ++r;
    }
    return r;
}

}  // namespace

std::size_t rank(QMatrix m) {
    return echelon(m);
}

std::optional<QVector> kernel_direction(const QMatrix& m, std::size_t dim) {
    QMatrix e = m;
    for (auto& row : e) assert(row.size() == dim);
    std::size_t r = echelon(e);
    if (r + 1 != dim) return std::nullopt;
    // Identify pivot columns, back-substitute with the single free column = 1.
    std::vector<long long> pivot_col(r, -1);
    std::vector<bool> is_pivot(dim, false);
    std::size_t row = 0;
    for (std::size_t c = 0; c < dim && row < r; ++c) {
        if (e[row][c] != 0) {
            pivot_col[row] = static_cast<long long>(c);
            is_pivot[c] = true;
            ++row;
        }
    }
    std::size_t free_col = dim;
    for (std::size_t c = 0; c < dim; ++c) {
        if (!is_pivot[c]) {
            free_col = c;
            break;
        }
    }
    if (free_col == dim) return std::nullopt;
    QVector v(dim, Rational(0));
    v[free_col] = 1;
    for (std::size_t i = r; i-- > 0;) {
        std::size_t pc = static_cast<std::size_t>(pivot_col[i]);
        Rational acc(0);
        for (std::size_t j = pc + 1; j < dim; ++j) acc += e[i][j] * v[j];
        v[pc] = -acc / e[i][pc];
    }
    return v;
}

IntVector primitive(const QVector& v) {
    Integer den_lcm(1);
    for (const auto& x : v) {
        Integer d = x.get_den();
        Integer g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        den_lcm = den_lcm / g * d;
    }
    std::vector<Integer> ints;
    ints.reserve(v.size());
    Integer num_gcd(0);
    for (const auto& x : v) {
        Integer scaled = x.get_num() * (den_lcm / x.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
        ints.push_back(scaled);
    }
    if (num_gcd == 0) throw DomainError("primitive() on the zero vector");
    IntVector out;
    out.reserve(v.size());
    for (const auto& x : ints) {
        Integer q = x / num_gcd;
        if (!q.fits_slong_p()) throw DomainError("primitive vector entry out of range");
        out.push_back(q.get_si());
    }
    return out;
}

IntVector primitive(const IntVector& v) {
    QVector q;
    q.reserve(v.size());
    for (long long x : v) q.emplace_back(static_cast<long>(x));
    return primitive(q);
}

bool feasible(std::vector<LinearConstraint> constraints, std::size_t dim) {
    // Equalities become two opposing inequalities; everything below is
    // a*x >= b rows stored as (coeffs, rhs).
    std::vector<std::pair<QVector, Rational>> rows;
    for (auto& c : constraints) {
        assert(c.coeffs.size() == dim);
        rows.emplace_back(c.coeffs, c.rhs);
        if (c.equality) {
            QVector neg = c.coeffs;
            for (auto& x : neg) x = -x;
            rows.emplace_back(std::move(neg), -c.rhs);
        }
    }
    for (std::size_t var = dim; var-- > 0;) {
        std::vector<std::pair<QVector, Rational>> pos, neg, zero;
        for (auto& r : rows) {
            int s = sgn(r.first[var]);
            if (s > 0)
                pos.push_back(std::move(r));
            else if (s < 0)
                neg.push_back(std::move(r));
            else
                zero.push_back(std::move(r));
        }
        rows = std::move(zero);
        // a*x_var + p(x') >= b with a>0 gives x_var >= (b - p)/a; combine each
        // lower bound with each upper bound.
        for (const auto& lo : pos) {
            for (const auto& hi : neg) {
                Rational a = lo.first[var];
                Rational b = -hi.first[var];
                QVector combined(dim, Rational(0));
                for (std::size_t j = 0; j < dim; ++j)
                    combined[j] = lo.first[j] * b + hi.first[j] * a;
                combined[var] = 0;
                rows.emplace_back(std::move(combined), lo.second * b + hi.second * a);
            }
        }
    }
    for (const auto& r : rows) {
        if (r.second > 0) return false;  // 0 >= positive
    }
    return true;
}

Rational dot(const QVector& a, const QVector& b) {
    assert(a.size() == b.size());
    Rational acc(0);
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

Rational dot(const IntVector& a, const QVector& b) {
    assert(a.size() == b.size());
    Rational acc(0);
    for (std::size_t i = 0; i < a.size(); ++i) acc += Rational(static_cast<long>(a[i])) * b[i];
    return acc;
}

long long dot(const IntVector& a, const std::vector<int>& b) {
    assert(a.size() == b.size());
    long long acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * static_cast<long long>(b[i]);
    return acc;
}

}  // namespace groewalk
