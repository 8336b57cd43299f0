// The isometric shift representation V on l2(A), its adjoint and wandering
// projections, the bilateral lattice shift U that dilates it, the compressed
// semigroup W on the complement, and exact escape indices witnessing purity.
//
// Every operator here moves amplitudes between lattice points without
// arithmetic on them, so operator identities hold exactly; tolerances only
// ever enter through inner products of the amplitudes themselves.
#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "coneopp/lattice_module.hpp"
#include "coneopp/sparse_vector.hpp"

namespace coneopp {

struct RepContext {
    ModuleExpr module; // the A in l2(A); the cone rides along inside
};

inline RepContext make_context(ModuleExpr m) { return RepContext{std::move(m)}; }

inline bool supported_in_module(const RepContext& ctx, const SparseVector& f) {
    for (const auto& [y, c] : f.entries)
        if (!member(ctx.module, y)) return false;
    return true;
}

inline bool supported_in_complement(const RepContext& ctx, const SparseVector& f) {
    for (const auto& [y, c] : f.entries)
        if (member(ctx.module, y)) return false;
    return true;
}

namespace detail {

inline void require_step(const RepContext& ctx, const LatticePoint& x, const char* who) {
    if (!in_monoid(ctx.module.cone, x))
        throw std::invalid_argument(std::string(who) + ": index is not in the cone monoid");
}

inline void require_module_support(const RepContext& ctx, const SparseVector& f,
                                   const char* who) {
    if (!supported_in_module(ctx, f))
        throw std::invalid_argument(std::string(who) + ": vector has support outside the module");
}

} // namespace detail

// ---------------------------------------------------------------------------
// V, V*, and the wandering projection

// (V_x f)(y) = f(y - x) when y - x is in A, else 0. On module-supported f
// this is exactly a support shift by +x.
inline SparseVector v_shift(const RepContext& ctx, const LatticePoint& x,
                            const SparseVector& f) {
    detail::require_step(ctx, x, "v_shift");
    detail::require_module_support(ctx, f, "v_shift");
    return translate_support(f, x);
}

// (V_x^* f)(y) = f(y + x) for y in A: shift back and keep what lands in A.
inline SparseVector v_adjoint(const RepContext& ctx, const LatticePoint& x,
                              const SparseVector& f) {
    detail::require_step(ctx, x, "v_adjoint");
    detail::require_module_support(ctx, f, "v_adjoint");
    SparseVector r;
    for (const auto& [y, c] : f.entries) {
        LatticePoint back = sub(y, x);
        if (member(ctx.module, back)) r.entries[std::move(back)] = c;
    }
    return r;
}

// Multiply by the indicator of A \ (A + x): the wandering space of V_x.
inline SparseVector kernel_project(const RepContext& ctx, const LatticePoint& x,
                                   const SparseVector& f) {
    detail::require_step(ctx, x, "kernel_project");
    SparseVector r;
    for (const auto& [y, c] : f.entries)
        if (member(ctx.module, y) && !member(ctx.module, sub(y, x))) r.entries[y] = c;
    return r;
}

inline bool in_kernel_of_adjoint(const RepContext& ctx, const LatticePoint& x,
                                 const SparseVector& f) {
    for (const auto& [y, c] : f.entries)
        if (!member(ctx.module, y) || member(ctx.module, sub(y, x))) return false;
    return true;
}

// Points of A \ (A + x) inside the window: an orthonormal basis of the
// wandering space as far as the window can see.
inline std::vector<LatticePoint> kernel_basis_in_window(const RepContext& ctx,
                                                        const LatticePoint& x,
                                                        const Window& w) {
    validate_window(w);
    std::vector<LatticePoint> basis;
    for_each_window_point(ctx.module.cone.dim, w.radius, [&](const LatticePoint& y) {
        if (member(ctx.module, y) && !member(ctx.module, sub(y, x))) basis.push_back(y);
    });
    return basis;
}

// ---------------------------------------------------------------------------
// The minimal unitary dilation: the bilateral shift on the full lattice.

inline SparseVector dilation_shift(const LatticePoint& x, const SparseVector& f) {
    return translate_support(f, x);
}

// W_a on l2(A^c): the restriction of the backwards dilation shift. The
// module law keeps the complement invariant under -a.
inline SparseVector w_shift(const RepContext& ctx, const LatticePoint& a,
                            const SparseVector& f) {
    detail::require_step(ctx, a, "w_shift");
    if (!supported_in_complement(ctx, f))
        throw std::invalid_argument("w_shift: vector has support inside the module");
    return translate_support(f, negate(a));
}

inline bool in_kernel_of_w_adjoint(const RepContext& ctx, const LatticePoint& a,
                                   const SparseVector& f) {
    // Ker(W_a^*) = l2(A^c \ (A^c - a)): complement points y with y + a in A.
    for (const auto& [y, c] : f.entries)
        if (member(ctx.module, y) || !member(ctx.module, add(y, a))) return false;
    return true;
}

// Complement points whose a-step lands in the module: the wandering set of
// the compressed semigroup, as far as the window can see.
inline std::vector<LatticePoint> w_kernel_basis_in_window(const RepContext& ctx,
                                                          const LatticePoint& a,
                                                          const Window& w) {
    validate_window(w);
    std::vector<LatticePoint> basis;
    for_each_window_point(ctx.module.cone.dim, w.radius, [&](const LatticePoint& y) {
        if (!member(ctx.module, y) && member(ctx.module, add(y, a))) basis.push_back(y);
    });
    return basis;
}

// ---------------------------------------------------------------------------
// Escape indices. For an interior direction a, membership of y +- n*a
// stabilizes; these bounds say from which n on, exactly, by rational
// comparison against every facet.

namespace detail {

inline std::int64_t rat_ceil(const Rational& r) { return -((-r).floor()); }

// Least bound N such that member(m, y + n*a) holds for all n >= N.
inline std::int64_t entry_bound(const ModuleExpr& m, const LatticePoint& y,
                                const LatticePoint& a) {
    const auto& hs = m.cone.halfspaces;
    std::int64_t best = 0;
    bool first = true;
    if (!m.opposed) {
        // y + n*a enters f + S once n clears every facet ratio for that f;
        // the best offset gives the least bound.
        for (const auto& f : m.offsets) {
            std::int64_t need = 1;
            for (const auto& n : hs) {
                Rational num(dot_lattice(n, sub(f, y)));
                Rational den(dot_lattice(n, a));
                need = std::max(need, rat_ceil(num / den));
            }
            if (first || need < best) best = need, first = false;
        }
    } else {
        // y + n*a is in Opp(F + S) once -(y + n*a) has left every f + S,
        // which happens as soon as one facet goes strictly negative.
        for (const auto& f : m.offsets) {
            std::int64_t need = std::numeric_limits<std::int64_t>::max();
            for (const auto& n : hs) {
                Rational num(dot_lattice(n, negate(add(y, f))));
                Rational den(dot_lattice(n, a));
                need = std::min(need, (num / den).floor() + 1);
            }
            if (first || need > best) best = need, first = false;
        }
    }
    return std::max<std::int64_t>(best, 1);
}

} // namespace detail

// From this n on, y - n*a is provably outside the module.
inline std::int64_t purity_escape_bound(const RepContext& ctx, const LatticePoint& y,
                                        const LatticePoint& a) {
    if (!in_monoid_interior(ctx.module.cone, a))
        throw std::invalid_argument("escape bounds require an interior direction");
    // not-member(A, y - n*a) == member(Opp(A), -y + n*a)
    return detail::entry_bound(opposite(ctx.module), negate(y), a);
}

// From this n on, y + n*a is provably inside the module.
inline std::int64_t w_escape_bound(const RepContext& ctx, const LatticePoint& y,
                                   const LatticePoint& a) {
    if (!in_monoid_interior(ctx.module.cone, a))
        throw std::invalid_argument("escape bounds require an interior direction");
    return detail::entry_bound(ctx.module, y, a);
}

// Least n >= 1 with y - n*a outside A: the step at which e_y leaves the
// range of V_{n*a}.
inline std::int64_t purity_escape(const RepContext& ctx, const LatticePoint& y,
                                  const LatticePoint& a) {
    if (!member(ctx.module, y))
        throw std::invalid_argument("purity_escape: point is not in the module");
    const std::int64_t bound = purity_escape_bound(ctx, y, a);
    LatticePoint probe = y;
    for (std::int64_t n = 1; n <= bound; ++n) {
        probe = sub(probe, a);
        if (!member(ctx.module, probe)) return n;
    }
    throw std::logic_error("purity_escape: escape index exceeded its bound");
}

// Least n >= 1 with y + n*a inside A: the step at which e_y leaves the
// range of W_{n*a} on the complement.
inline std::int64_t w_escape(const RepContext& ctx, const LatticePoint& y,
                             const LatticePoint& a) {
    if (member(ctx.module, y))
        throw std::invalid_argument("w_escape: point is not in the complement");
    const std::int64_t bound = w_escape_bound(ctx, y, a);
    LatticePoint probe = y;
    for (std::int64_t n = 1; n <= bound; ++n) {
        probe = add(probe, a);
        if (member(ctx.module, probe)) return n;
    }
    throw std::logic_error("w_escape: escape index exceeded its bound");
}

// ---------------------------------------------------------------------------
// Dilation minimality: every window point is reachable, i.e. lies in A - a
// for some monoid element a (taken along the canonical interior direction).

struct DilationCoverage {
    bool all_covered = false;
    // (y, a) with y + a in the module; a = n * interior direction, least n.
    std::vector<std::pair<LatticePoint, LatticePoint>> assignments;
};

inline DilationCoverage check_dilation_minimality(const RepContext& ctx, const Window& w) {
    validate_window(w);
    const LatticePoint a0 = interior_lattice_point(ctx.module.cone);
    DilationCoverage report;
    report.all_covered = true;
    for_each_window_point(ctx.module.cone.dim, w.radius, [&](const LatticePoint& y) {
        if (member(ctx.module, y)) {
            report.assignments.emplace_back(y, LatticePoint(y.size(), 0));
            return;
        }
        const std::int64_t bound = w_escape_bound(ctx, y, a0);
        LatticePoint a(y.size(), 0);
        for (std::int64_t n = 1; n <= bound; ++n) {
            a = add(a, a0);
            if (member(ctx.module, add(y, a))) {
                report.assignments.emplace_back(y, a);
                return;
            }
        }
        report.all_covered = false; // unreachable for interior directions
    });
    return report;
}

} // namespace coneopp
