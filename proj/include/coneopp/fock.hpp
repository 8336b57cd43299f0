// Symbolic exponential-vector calculus over the sparse Hilbert space.
//
// A combo is a finite sum of coefficients times exponential vectors e(xi);
// no Fock truncation ever happens because all inner products reduce to
// exp of finite sums. Weyl operators, second quantization, the commutation
// relation, and the flow's covariance identity are all realized on combos,
// and combo equality is judged by the Gram norm of the difference so that
// nearly parallel generators cannot produce false negatives.
#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coneopp/check_report.hpp"
#include "coneopp/shift_rep.hpp"
#include "coneopp/sparse_vector.hpp"

namespace coneopp {

// exp(<xi,xi>) must stay inside double range.
constexpr double kNormSquareGuard = 700.0;

// Total order on sparse vectors (entrywise, then amplitude bits) so combos
// can merge exactly-equal generators and iterate deterministically.
struct SparseVectorOrder {
    bool operator()(const SparseVector& f, const SparseVector& g) const {
        auto i = f.entries.begin();
        auto j = g.entries.begin();
        for (; i != f.entries.end() && j != g.entries.end(); ++i, ++j) {
            if (i->first != j->first) return i->first < j->first;
            if (i->second.real() != j->second.real())
                return i->second.real() < j->second.real();
            if (i->second.imag() != j->second.imag())
                return i->second.imag() < j->second.imag();
        }
        return j != g.entries.end();
    }
};

struct ExpCombo {
    std::map<SparseVector, Complex, SparseVectorOrder> terms; // generator -> coefficient
};

namespace detail {

inline void guard_generator(const SparseVector& xi) {
    double n2 = 0.0;
    for (const auto& [y, c] : xi.entries) n2 += std::norm(c);
    if (n2 > kNormSquareGuard)
        throw std::domain_error(
            "exponential-vector generator exceeds the norm guard (|xi|^2 <= 700)");
}

// Same support, amplitudes within a relative 1e-12. Such generators arise
// when two evaluation orders of the same sum disagree by an ulp; kept as
// distinct Gram rows they cancel catastrophically, so combos fold them.
inline bool nearly_equal_generator(const SparseVector& f, const SparseVector& g) {
    if (f.entries.size() != g.entries.size()) return false;
    auto i = f.entries.begin();
    auto j = g.entries.begin();
    for (; i != f.entries.end(); ++i, ++j) {
        if (i->first != j->first) return false;
        const double scale = std::max({1.0, std::abs(i->second), std::abs(j->second)});
        if (std::abs(i->second - j->second) > 1e-12 * scale) return false;
    }
    return true;
}

} // namespace detail

inline ExpCombo exp_combo(const std::vector<std::pair<Complex, SparseVector>>& terms) {
    ExpCombo c;
    for (const auto& [coef, gen] : terms) {
        detail::guard_generator(gen);
        c.terms[gen] += coef;
    }
    // Nearly identical generators sort next to each other; fold each run onto
    // its first member so differences cancel in the coefficients.
    for (auto it = c.terms.begin(); it != c.terms.end();) {
        auto next = std::next(it);
        if (next != c.terms.end() &&
            detail::nearly_equal_generator(it->first, next->first)) {
            it->second += next->second;
            c.terms.erase(next);
        } else {
            it = next;
        }
    }
    for (auto it = c.terms.begin(); it != c.terms.end();)
        it = std::abs(it->second) < kAmplitudeFloor ? c.terms.erase(it) : std::next(it);
    return c;
}

inline ExpCombo exp_vector(const SparseVector& xi) {
    return exp_combo({{Complex(1.0, 0.0), xi}});
}

inline ExpCombo exp_vacuum() { return exp_vector(SparseVector{}); }

inline ExpCombo combo_scale(Complex c, const ExpCombo& x) {
    std::vector<std::pair<Complex, SparseVector>> terms;
    for (const auto& [gen, coef] : x.terms) terms.emplace_back(c * coef, gen);
    return exp_combo(terms);
}

inline ExpCombo combo_add(const ExpCombo& x, const ExpCombo& y) {
    std::vector<std::pair<Complex, SparseVector>> terms;
    for (const auto& [gen, coef] : x.terms) terms.emplace_back(coef, gen);
    for (const auto& [gen, coef] : y.terms) terms.emplace_back(coef, gen);
    return exp_combo(terms);
}

inline ExpCombo combo_sub(const ExpCombo& x, const ExpCombo& y) {
    return combo_add(x, combo_scale(Complex(-1.0, 0.0), y));
}

// <sum a_i e(xi_i), sum b_j e(eta_j)> = sum conj(a_i) b_j exp(<xi_i, eta_j>).
inline Complex exp_inner(const ExpCombo& x, const ExpCombo& y) {
    Complex s(0.0, 0.0);
    for (const auto& [xi, a] : x.terms)
        for (const auto& [eta, b] : y.terms)
            s += std::conj(a) * b * std::exp(inner(xi, eta));
    return s;
}

inline double combo_norm(const ExpCombo& x) {
    double n2 = exp_inner(x, x).real();
    return n2 > 0.0 ? std::sqrt(n2) : 0.0;
}

// Gram-norm distance relative to the larger of the two sides (floored at 1).
inline double combo_distance(const ExpCombo& x, const ExpCombo& y) {
    double scale = std::max({1.0, combo_norm(x), combo_norm(y)});
    return combo_norm(combo_sub(x, y)) / scale;
}

// ---------------------------------------------------------------------------
// Weyl operators and second quantization

// W(xi) e(eta) = exp(-|xi|^2/2 - <xi,eta>) e(xi + eta); extended termwise.
// With this action the commutation phase below closes the algebra.
inline ExpCombo weyl_apply(const SparseVector& xi, const ExpCombo& x) {
    detail::guard_generator(xi);
    const double half_norm2 = inner(xi, xi).real() / 2.0;
    std::vector<std::pair<Complex, SparseVector>> terms;
    for (const auto& [eta, coef] : x.terms) {
        Complex factor = std::exp(Complex(-half_norm2, 0.0) - inner(xi, eta));
        terms.emplace_back(coef * factor, sv_add(xi, eta));
    }
    return exp_combo(terms);
}

// e(eta) -> e(V_x eta): the isometry carried through the exponentials.
inline ExpCombo gamma_apply(const RepContext& ctx, const LatticePoint& x,
                            const ExpCombo& c) {
    std::vector<std::pair<Complex, SparseVector>> terms;
    for (const auto& [eta, coef] : c.terms)
        terms.emplace_back(coef, v_shift(ctx, x, eta));
    return exp_combo(terms);
}

// The scalar in W(xi) W(eta) = phase * W(xi + eta).
inline Complex ccr_phase(const SparseVector& xi, const SparseVector& eta) {
    return std::exp(Complex(0.0, -inner(xi, eta).imag()));
}

// ---------------------------------------------------------------------------
// Verification suites

inline CheckReport check_weyl_relation(const SparseVector& xi, const SparseVector& eta,
                                       const std::vector<ExpCombo>& probes, double tol) {
    CheckReport rep;
    const Complex phase = ccr_phase(xi, eta);
    for (std::size_t i = 0; i < probes.size(); ++i) {
        ExpCombo lhs = weyl_apply(xi, weyl_apply(eta, probes[i]));
        ExpCombo rhs = combo_scale(phase, weyl_apply(sv_add(xi, eta), probes[i]));
        rep.record(combo_distance(lhs, rhs), tol,
                   "commutation relation on probe " + std::to_string(i));
    }
    return rep;
}

inline CheckReport check_covariance(const RepContext& ctx, const LatticePoint& x,
                                    const SparseVector& xi,
                                    const std::vector<ExpCombo>& probes, double tol) {
    if (!supported_in_module(ctx, xi))
        throw std::invalid_argument("check_covariance: argument has support outside the module");
    CheckReport rep;
    const SparseVector moved = v_shift(ctx, x, xi);
    for (std::size_t i = 0; i < probes.size(); ++i) {
        ExpCombo lhs = weyl_apply(moved, gamma_apply(ctx, x, probes[i]));
        ExpCombo rhs = gamma_apply(ctx, x, weyl_apply(xi, probes[i]));
        rep.record(combo_distance(lhs, rhs), tol,
                   "covariance identity on probe " + std::to_string(i));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Positive semidefiniteness of exponential Gram matrices, via a Jacobi
// eigensolver on the real symmetric embedding of the Hermitian matrix.

namespace detail {

inline double min_eigenvalue_symmetric(std::vector<std::vector<double>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 0.0;
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += m[p][q] * m[p][q];
        if (off < 1e-30) break;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(m[p][q]) < 1e-300) continue;
                const double theta = (m[q][q] - m[p][p]) / (2.0 * m[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double mkp = m[k][p], mkq = m[k][q];
                    m[k][p] = c * mkp - s * mkq;
                    m[k][q] = s * mkp + c * mkq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double mpk = m[p][k], mqk = m[q][k];
                    m[p][k] = c * mpk - s * mqk;
                    m[q][k] = s * mpk + c * mqk;
                }
            }
    }
    double lo = m[0][0];
    for (std::size_t i = 1; i < n; ++i) lo = std::min(lo, m[i][i]);
    return lo;
}

} // namespace detail

// Minimum eigenvalue of the Hermitian Gram matrix G_ij = <f_i, f_j>, using
// the doubling [[Re G, -Im G], [Im G, Re G]], whose spectrum is that of G
// with doubled multiplicities. Also reports the largest entry magnitude so
// callers can judge the eigenvalue against the matrix scale.
inline std::pair<double, double> gram_min_eigenvalue(const std::vector<ExpCombo>& family) {
    const std::size_t n = family.size();
    std::vector<std::vector<double>> big(2 * n, std::vector<double>(2 * n, 0.0));
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Complex g = exp_inner(family[i], family[j]);
            scale = std::max(scale, std::abs(g));
            big[i][j] = g.real();
            big[i][j + n] = -g.imag();
            big[i + n][j] = g.imag();
            big[i + n][j + n] = g.real();
        }
    return {detail::min_eigenvalue_symmetric(std::move(big)), scale};
}

inline CheckReport check_gram_psd(const std::vector<ExpCombo>& family, double tol) {
    CheckReport rep;
    const auto [lo, scale] = gram_min_eigenvalue(family);
    const double rel = (lo < 0.0 ? -lo : 0.0) / std::max(1.0, scale);
    rep.record(rel, tol, "gram matrix minimum eigenvalue (relative to entry scale)");
    return rep;
}

} // namespace coneopp
