// Small exact linear algebra over Rational, plus integer lattice vectors.
// Sized for desk scale (dimension <= 4, a handful of rows); everything is
// plain Gaussian elimination with exact pivots.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coneopp/rational.hpp"

namespace coneopp {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;
using LatticePoint = std::vector<std::int64_t>;

inline Rational dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// <n, y> for an integer normal against an integer point, overflow-guarded.
inline std::int64_t dot_lattice(const LatticePoint& n, const LatticePoint& y) {
    if (n.size() != y.size()) throw std::invalid_argument("dot_lattice: dimension mismatch");
    detail::int128 s = 0;
    for (std::size_t i = 0; i < n.size(); ++i) s += detail::int128(n[i]) * y[i];
    return detail::checked_narrow(s, "lattice dot product");
}

inline Rational dot_mixed(const LatticePoint& n, const RatVec& x) {
    if (n.size() != x.size()) throw std::invalid_argument("dot_mixed: dimension mismatch");
    Rational s;
    for (std::size_t i = 0; i < n.size(); ++i) s += Rational(n[i]) * x[i];
    return s;
}

inline LatticePoint add(const LatticePoint& a, const LatticePoint& b) {
    if (a.size() != b.size()) throw std::invalid_argument("add: dimension mismatch");
    LatticePoint r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline LatticePoint sub(const LatticePoint& a, const LatticePoint& b) {
    if (a.size() != b.size()) throw std::invalid_argument("sub: dimension mismatch");
    LatticePoint r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline LatticePoint negate(const LatticePoint& a) {
    LatticePoint r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline LatticePoint scale(std::int64_t k, const LatticePoint& a) {
    LatticePoint r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = detail::checked_narrow(detail::int128(k) * a[i], "lattice scale");
    return r;
}

inline bool is_zero(const LatticePoint& a) {
    for (auto v : a)
        if (v != 0) return false;
    return true;
}

inline RatVec to_ratvec(const LatticePoint& a) {
    RatVec r;
    r.reserve(a.size());
    for (auto v : a) r.emplace_back(v);
    return r;
}

// Shortest integer vector on the same ray: clear denominators, divide by gcd.
// The direction (sign) is preserved.
inline LatticePoint primitive(const RatVec& v) {
    std::int64_t lcm = 1;
    for (const auto& r : v) {
        std::int64_t g = std::gcd(lcm, r.den());
        lcm = detail::checked_narrow(detail::int128(lcm) / g * r.den(), "primitive lcm");
    }
    LatticePoint w(v.size());
    std::int64_t g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        w[i] = detail::checked_narrow(detail::int128(v[i].num()) * (lcm / v[i].den()),
                                      "primitive scaling");
        g = std::gcd(g, w[i] < 0 ? -w[i] : w[i]);
    }
    if (g > 1)
        for (auto& x : w) x /= g;
    return w;
}

// Row-reduce a copy, returning the rank.
inline std::size_t rank(RatMat m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Rational f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

inline std::size_t rank_lattice(const std::vector<LatticePoint>& rows) {
    RatMat m;
    m.reserve(rows.size());
    for (const auto& r : rows) m.push_back(to_ratvec(r));
    return rank(std::move(m));
}

// Solve the square system A x = b exactly. Throws if A is singular.
inline RatVec solve_square(RatMat a, RatVec b) {
    const std::size_t n = a.size();
    if (n == 0 || a[0].size() != n || b.size() != n)
        throw std::invalid_argument("solve_square: shape mismatch");
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c].is_zero()) ++piv;
        if (piv == n) throw std::domain_error("solve_square: singular matrix");
        std::swap(a[c], a[piv]);
        std::swap(b[c], b[piv]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c].is_zero()) continue;
            Rational f = a[i][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
            b[i] -= f * b[c];
        }
    }
    RatVec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

// One nonzero kernel vector of the row system, or nullopt if the kernel is
// trivial. Used with (d-1)-row systems where the kernel is a line.
inline std::optional<RatVec> kernel_direction(RatMat m, std::size_t cols) {
    const std::size_t rows = m.size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Rational f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    if (r == cols) return std::nullopt;
    // First free column; back-substitute with free value 1.
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    std::size_t free_col = 0;
    while (free_col < cols && is_pivot[free_col]) ++free_col;
    RatVec x(cols, Rational(0));
    x[free_col] = Rational(1);
    for (std::size_t k = pivot_col.size(); k-- > 0;) {
        std::size_t c = pivot_col[k];
        Rational s;
        for (std::size_t j = c + 1; j < cols; ++j) s += m[k][j] * x[j];
        x[c] = -s / m[k][c];
    }
    return x;
}

inline std::string point_str(const LatticePoint& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s + ")";
}

} // namespace coneopp
