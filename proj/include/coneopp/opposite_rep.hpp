// The abstract opposite representation: equivalence classes [(xi, a)] with
// xi in the wandering space of V_a and a strictly interior, together with
// the two unitaries that identify it with the compressed semigroup W on the
// complement and with the shift representation of the opposite module.
//
// Each class caches its canonical form: xi pulled back by a. Two classes
// are equal exactly when the canonical forms agree entrywise, and every
// operation below moves amplitudes without arithmetic, so the algebraic
// identities of the representation hold bit-for-bit.
#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "coneopp/check_report.hpp"
#include "coneopp/shift_rep.hpp"

namespace coneopp {

struct OppositeClass {
    SparseVector xi;     // representative, supported in A \ (A + a)
    LatticePoint a;      // strictly interior lattice index
    SparseVector normal; // canonical form: xi shifted by -a, supported off A
};

namespace detail {

inline void require_interior_index(const RepContext& ctx, const LatticePoint& a,
                                   const char* who) {
    if (!in_monoid_interior(ctx.module.cone, a))
        throw std::invalid_argument(std::string(who) +
                                    ": class index must be strictly interior");
}

} // namespace detail

inline OppositeClass class_make(const RepContext& ctx, const SparseVector& xi,
                                const LatticePoint& a) {
    detail::require_interior_index(ctx, a, "class_make");
    if (!in_kernel_of_adjoint(ctx, a, xi))
        throw std::invalid_argument(
            "class_make: representative is not in the adjoint kernel for this index");
    OppositeClass c;
    c.xi = xi;
    c.a = a;
    c.normal = translate_support(xi, negate(a));
    return c;
}

inline bool class_equal(const OppositeClass& c1, const OppositeClass& c2,
                        double tol = 0.0) {
    return max_entry_diff(c1.normal, c2.normal) <= tol;
}

// [(xi,a)] + [(eta,b)] = [(V_b xi + V_a eta, a+b)].
inline OppositeClass class_add(const RepContext& ctx, const OppositeClass& c1,
                               const OppositeClass& c2) {
    SparseVector moved = sv_add(translate_support(c1.xi, c2.a),
                                translate_support(c2.xi, c1.a));
    return class_make(ctx, moved, add(c1.a, c2.a));
}

inline OppositeClass class_scale(const RepContext& ctx, Complex lambda,
                                 const OppositeClass& c) {
    OppositeClass r;
    r.xi = sv_scale(lambda, c.xi);
    r.a = c.a;
    r.normal = sv_scale(lambda, c.normal);
    (void)ctx;
    return r;
}

// <[(xi,a)] | [(eta,b)]> = <V_b xi | V_a eta>.
inline Complex class_inner(const OppositeClass& c1, const OppositeClass& c2) {
    return inner(translate_support(c1.xi, c2.a), translate_support(c2.xi, c1.a));
}

// The action: [(xi,b)] goes to [(xi,a+b)]. The canonical form shifts by -a.
inline OppositeClass v_op_apply(const RepContext& ctx, const LatticePoint& a,
                                const OppositeClass& c) {
    detail::require_interior_index(ctx, a, "v_op_apply");
    OppositeClass r;
    r.xi = c.xi;
    r.a = add(a, c.a);
    r.normal = translate_support(c.normal, negate(a));
    return r;
}

// ---------------------------------------------------------------------------
// From the complement into the classes: f in Ker(W_a^*) goes to the class
// of (f shifted into the module by a, a). On canonical forms this map is
// the identity, which is what makes it loss-free.

inline OppositeClass intertwiner_T(const RepContext& ctx, const LatticePoint& a,
                                   const SparseVector& f) {
    detail::require_interior_index(ctx, a, "intertwiner_T");
    if (!in_kernel_of_w_adjoint(ctx, a, f))
        throw std::invalid_argument(
            "intertwiner_T: vector is not in the compressed-shift adjoint kernel");
    return class_make(ctx, translate_support(f, a), a);
}

// Any complement-supported vector admits an index a pushing its whole
// support into the module; once a point has entered it stays (module law),
// so the maximum of the per-point entry steps works for all of them.
inline LatticePoint admissible_index(const RepContext& ctx, const SparseVector& f) {
    const LatticePoint a0 = interior_lattice_point(ctx.module.cone);
    std::int64_t n = 1;
    for (const auto& [y, c] : f.entries) {
        if (member(ctx.module, y))
            throw std::invalid_argument("admissible_index: vector has support inside the module");
        n = std::max(n, w_escape(ctx, y, a0));
    }
    LatticePoint a(static_cast<std::size_t>(ctx.module.cone.dim), 0);
    for (std::int64_t k = 0; k < n; ++k) a = add(a, a0);
    return a;
}

// T extended to all finitely supported complement vectors. The class does
// not depend on the chosen index: the canonical form is f itself.
inline OppositeClass class_from_complement(const RepContext& ctx, const SparseVector& f) {
    return intertwiner_T(ctx, admissible_index(ctx, f), f);
}

// ---------------------------------------------------------------------------
// Inversion onto the opposite module's space: (inv f)(y) = f(-y). It maps
// the complement of A exactly onto the opposite module B.

inline SparseVector inversion_map(const SparseVector& f) {
    SparseVector r;
    for (const auto& [y, c] : f.entries) r.entries[negate(y)] = c;
    return r;
}

// ---------------------------------------------------------------------------
// Deterministic equivalence verification on caller-supplied probes: the
// inversion intertwines the compressed semigroup with the shift semigroup
// of the opposite module, and composing with T carries the same probes to
// identical classes. Probes must be supported in the complement of A.

inline CheckReport inversion_to_VB(const RepContext& ctx, const LatticePoint& a,
                                   const std::vector<SparseVector>& probes, double tol) {
    detail::require_interior_index(ctx, a, "inversion_to_VB");
    RepContext opp_ctx = make_context(opposite(ctx.module));
    CheckReport rep;

    for (std::size_t i = 0; i < probes.size(); ++i) {
        const SparseVector& f = probes[i];
        if (!supported_in_complement(ctx, f))
            throw std::invalid_argument("inversion_to_VB: probe has support inside the module");
        const std::string tag = "probe " + std::to_string(i);

        // Inversion lands in l2(B).
        SparseVector inv_f = inversion_map(f);
        rep.record(supported_in_module(opp_ctx, inv_f) ? 0.0 : 1.0, tol,
                   tag + " image support");

        // inv(W_a f) = V^B_a(inv f).
        SparseVector lhs = inversion_map(w_shift(ctx, a, f));
        SparseVector rhs = v_shift(opp_ctx, a, inv_f);
        rep.record(max_entry_diff(lhs, rhs), tol, tag + " intertwining");

        // Inner products survive both unitaries against every earlier probe.
        for (std::size_t j = 0; j <= i; ++j) {
            Complex base = inner(probes[j], f);
            rep.record(std::abs(inner(inversion_map(probes[j]), inv_f) - base), tol,
                       tag + " inversion gram vs probe " + std::to_string(j));
            rep.record(std::abs(class_inner(class_from_complement(ctx, probes[j]),
                                            class_from_complement(ctx, f)) -
                                base),
                       tol, tag + " class gram vs probe " + std::to_string(j));
        }
    }
    return rep;
}

} // namespace coneopp
