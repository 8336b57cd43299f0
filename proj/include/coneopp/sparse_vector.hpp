// Finitely supported complex vectors on the integer lattice.
//
// Supports and shifts are exact integer bookkeeping; only the complex
// amplitudes are floating point. Near-zero amplitudes are dropped when
// vectors are combined so supports stay honest.
#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <vector>

#include "coneopp/linalg.hpp"

namespace coneopp {

using Complex = std::complex<double>;

// Amplitudes below this magnitude are treated as structural zeros.
constexpr double kAmplitudeFloor = 1e-15;

struct SparseVector {
    std::map<LatticePoint, Complex> entries; // sorted keys: deterministic iteration
};

inline SparseVector basis_vector(const LatticePoint& y) {
    SparseVector v;
    v.entries[y] = Complex(1.0, 0.0);
    return v;
}

inline SparseVector sparse_from_terms(
    const std::vector<std::pair<LatticePoint, Complex>>& terms) {
    SparseVector v;
    for (const auto& [y, c] : terms) v.entries[y] += c;
    for (auto it = v.entries.begin(); it != v.entries.end();)
        it = std::abs(it->second) < kAmplitudeFloor ? v.entries.erase(it) : std::next(it);
    return v;
}

inline bool sv_is_zero(const SparseVector& v) { return v.entries.empty(); }

inline SparseVector sv_add(const SparseVector& f, const SparseVector& g) {
    SparseVector r = f;
    for (const auto& [y, c] : g.entries) r.entries[y] += c;
    for (auto it = r.entries.begin(); it != r.entries.end();)
        it = std::abs(it->second) < kAmplitudeFloor ? r.entries.erase(it) : std::next(it);
    return r;
}

inline SparseVector sv_scale(Complex c, const SparseVector& f) {
    SparseVector r;
    if (std::abs(c) < kAmplitudeFloor) return r;
    for (const auto& [y, a] : f.entries) r.entries[y] = c * a;
    return r;
}

inline SparseVector sv_sub(const SparseVector& f, const SparseVector& g) {
    return sv_add(f, sv_scale(Complex(-1.0, 0.0), g));
}

// Conjugate-linear in the first argument, linear in the second.
inline Complex inner(const SparseVector& f, const SparseVector& g) {
    const bool f_smaller = f.entries.size() <= g.entries.size();
    const auto& small = f_smaller ? f.entries : g.entries;
    const auto& large = f_smaller ? g.entries : f.entries;
    Complex s(0.0, 0.0);
    for (const auto& [y, c] : small) {
        auto it = large.find(y);
        if (it == large.end()) continue;
        s += f_smaller ? std::conj(c) * it->second : std::conj(it->second) * c;
    }
    return s;
}

inline double norm(const SparseVector& f) {
    double s = 0.0;
    for (const auto& [y, c] : f.entries) s += std::norm(c);
    return std::sqrt(s);
}

// Move every support point by x. Amplitudes are copied bit-for-bit, so any
// identity built from shifts alone holds exactly.
inline SparseVector translate_support(const SparseVector& f, const LatticePoint& x) {
    SparseVector r;
    for (const auto& [y, c] : f.entries) r.entries[add(y, x)] = c;
    return r;
}

// Largest amplitude difference over the union of the two supports.
inline double max_entry_diff(const SparseVector& f, const SparseVector& g) {
    double m = 0.0;
    for (const auto& [y, c] : f.entries) {
        auto it = g.entries.find(y);
        m = std::max(m, std::abs(c - (it == g.entries.end() ? Complex(0.0) : it->second)));
    }
    for (const auto& [y, c] : g.entries)
        if (!f.entries.count(y)) m = std::max(m, std::abs(c));
    return m;
}

inline std::vector<LatticePoint> support(const SparseVector& f) {
    std::vector<LatticePoint> s;
    s.reserve(f.entries.size());
    for (const auto& [y, c] : f.entries) s.push_back(y);
    return s;
}

} // namespace coneopp
