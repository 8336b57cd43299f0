// Rational polyhedral cones: construction by double description, exact
// membership, Archimedean bounds, and the outside-both-cones witness.
//
// A cone is stored with both descriptions so that every later membership
// test is a handful of integer dot products. Halfspace normals are the
// extreme rays of the dual cone, scaled to primitive integer vectors and
// lexicographically sorted, which makes the H-form canonical.
#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "coneopp/linalg.hpp"

namespace coneopp {

struct Cone {
    int dim = 0;
    std::vector<RatVec> generators;          // V-form as given
    std::vector<LatticePoint> gens_primitive; // primitive integer directions, deduped
    std::vector<LatticePoint> halfspaces;     // primitive normals n, meaning <n,x> >= 0
    bool pointed = false;
    bool spanning = false;
};

namespace detail {

constexpr int kMaxDim = 4;
constexpr std::size_t kMaxGenerators = 16;

// Extreme rays of {x : <r,x> >= 0 for all r in rows}, valid when that cone
// is pointed (rank(rows) == dim). Each extreme ray has a tight set of rank
// dim-1, so enumerating (dim-1)-subsets of rows finds them all.
inline std::vector<LatticePoint> dual_extreme_rays(const std::vector<LatticePoint>& rows,
                                                   int dim) {
    std::set<LatticePoint> found;
    std::vector<std::size_t> idx(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) idx[i] = i;

    std::vector<std::size_t> subset;
    auto consider = [&](const std::vector<std::size_t>& pick) {
        RatMat m;
        for (auto i : pick) m.push_back(to_ratvec(rows[i]));
        if (!m.empty() && rank(m) != m.size()) return; // need rank dim-1
        auto dir = kernel_direction(std::move(m), dim);
        if (!dir) return;
        LatticePoint v = primitive(*dir);
        for (int sgn = 0; sgn < 2; ++sgn) {
            bool ok = true;
            for (const auto& r : rows)
                if (dot_lattice(r, v) < 0) {
                    ok = false;
                    break;
                }
            if (ok) {
                found.insert(v);
                break;
            }
            v = negate(v);
        }
    };

    // All subsets of size dim-1.
    const std::size_t k = static_cast<std::size_t>(dim - 1);
    if (k > rows.size()) return {};
    std::vector<std::size_t> pick(k);
    // Odometer over combinations.
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
        consider(pick);
        if (k == 0) break;
        std::size_t i = k;
        while (i-- > 0) {
            if (pick[i] + (k - i) < rows.size()) {
                ++pick[i];
                for (std::size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
                break;
            }
            if (i == 0) return {found.begin(), found.end()};
        }
        if (k == 0) break;
    }
    return {found.begin(), found.end()};
}

} // namespace detail

// ---------------------------------------------------------------------------
// Construction

inline Cone cone_from_generators(int dim, const std::vector<RatVec>& generators) {
    if (dim < 1) throw std::invalid_argument("cone dimension must be >= 1");
    if (dim > detail::kMaxDim)
        throw std::invalid_argument("cone dimension exceeds desk scale (max 4)");
    if (generators.empty()) throw std::invalid_argument("cone needs at least one generator");
    if (generators.size() > detail::kMaxGenerators)
        throw std::invalid_argument("too many generators for desk scale (max 16)");

    Cone c;
    c.dim = dim;
    c.generators = generators;

    std::set<LatticePoint> prim;
    for (const auto& g : generators) {
        if (static_cast<int>(g.size()) != dim)
            throw std::invalid_argument("generator dimension mismatch");
        bool zero = true;
        for (const auto& x : g)
            if (!x.is_zero()) zero = false;
        if (zero) throw std::invalid_argument("zero vector is not a valid generator");
        prim.insert(primitive(g));
    }
    c.gens_primitive.assign(prim.begin(), prim.end());

    // Antipodal generator pairs span a line; the cone would not be pointed.
    for (const auto& g : c.gens_primitive)
        if (prim.count(negate(g)))
            throw std::invalid_argument("generator set contains a line (g and -g both present)");

    c.spanning = rank_lattice(c.gens_primitive) == static_cast<std::size_t>(dim);
    if (!c.spanning)
        throw std::invalid_argument(
            "generators do not span the ambient space; the double description "
            "has no faithful halfspace form for a non-full cone");

    c.halfspaces = detail::dual_extreme_rays(c.gens_primitive, dim);
    if (c.halfspaces.empty())
        throw std::invalid_argument(
            "double description produced an empty halfspace set (cone is all of space)");

    for (const auto& n : c.halfspaces)
        for (const auto& g : c.gens_primitive)
            if (dot_lattice(n, g) < 0)
                throw std::logic_error("double description inconsistency: generator violates halfspace");

    c.pointed = rank_lattice(c.halfspaces) == static_cast<std::size_t>(dim);

    if (c.pointed) {
        // Double-dual closure: re-deriving normals from the H-form's extreme
        // rays must reproduce the same normal set.
        auto rays = detail::dual_extreme_rays(c.halfspaces, dim);
        auto normals_again = detail::dual_extreme_rays(rays, dim);
        if (normals_again != c.halfspaces)
            throw std::logic_error("double description inconsistency: V-form and H-form disagree");
    }
    return c;
}

inline Cone cone_from_lattice_generators(int dim, const std::vector<LatticePoint>& gens) {
    std::vector<RatVec> rv;
    rv.reserve(gens.size());
    for (const auto& g : gens) rv.push_back(to_ratvec(g));
    return cone_from_generators(dim, rv);
}

// Canonical identity: two Cone values describe the same set iff their sorted
// primitive halfspace normals coincide.
inline bool same_cone(const Cone& a, const Cone& b) {
    return a.dim == b.dim && a.halfspaces == b.halfspaces;
}

// ---------------------------------------------------------------------------
// Membership

inline bool contains(const Cone& c, const RatVec& x) {
    if (static_cast<int>(x.size()) != c.dim)
        throw std::invalid_argument("contains: dimension mismatch");
    for (const auto& n : c.halfspaces)
        if (dot_mixed(n, x).sign() < 0) return false;
    return true;
}

inline bool contains_interior(const Cone& c, const RatVec& x) {
    if (static_cast<int>(x.size()) != c.dim)
        throw std::invalid_argument("contains_interior: dimension mismatch");
    for (const auto& n : c.halfspaces)
        if (dot_mixed(n, x).sign() <= 0) return false;
    return true;
}

// Lattice monoid S = P `intersect` Z^d.
inline bool in_monoid(const Cone& c, const LatticePoint& y) {
    if (static_cast<int>(y.size()) != c.dim)
        throw std::invalid_argument("in_monoid: dimension mismatch");
    for (const auto& n : c.halfspaces)
        if (dot_lattice(n, y) < 0) return false;
    return true;
}

inline bool in_monoid_interior(const Cone& c, const LatticePoint& y) {
    if (static_cast<int>(y.size()) != c.dim)
        throw std::invalid_argument("in_monoid_interior: dimension mismatch");
    for (const auto& n : c.halfspaces)
        if (dot_lattice(n, y) <= 0) return false;
    return true;
}

// A strictly interior lattice point: the sum of the primitive generators.
// Every halfspace is positive on it because no facet contains all generators.
inline LatticePoint interior_lattice_point(const Cone& c) {
    LatticePoint a(static_cast<std::size_t>(c.dim), 0);
    for (const auto& g : c.gens_primitive) a = add(a, g);
    if (!in_monoid_interior(c, a))
        throw std::logic_error("sum of primitive generators is not interior");
    return a;
}

// ---------------------------------------------------------------------------
// Archimedean bound: least n >= 1 with n*a - x in the interior.

inline std::int64_t archimedean_bound(const Cone& c, const RatVec& a, const RatVec& x) {
    if (!contains_interior(c, a))
        throw std::invalid_argument("Archimedean bound requires a in the interior");
    if (static_cast<int>(x.size()) != c.dim)
        throw std::invalid_argument("archimedean_bound: dimension mismatch");
    std::int64_t n = 1;
    for (const auto& nrm : c.halfspaces) {
        Rational num = dot_mixed(nrm, x);
        Rational den = dot_mixed(nrm, a); // > 0 since a is interior
        std::int64_t cand = (num / den).floor() + 1;
        n = std::max(n, cand);
    }
    return n;
}

inline std::int64_t archimedean_bound(const Cone& c, const LatticePoint& a,
                                      const LatticePoint& x) {
    return archimedean_bound(c, to_ratvec(a), to_ratvec(x));
}

// ---------------------------------------------------------------------------
// Witness outside P and -P. Solves <n1,x> = 1, <n2,x> = -1 extended to a
// full-rank system; then <n2,x> < 0 rules out x and <n1,-x> < 0 rules out -x.

inline RatVec outside_witness(const Cone& c) {
    if (c.dim == 1) throw std::invalid_argument("no witness exists in dimension 1");

    // Greedily build a full-rank list of rows, the first two being the
    // independent normals that carry the sign constraints.
    std::vector<LatticePoint> rows;
    for (const auto& n : c.halfspaces) {
        rows.push_back(n);
        if (rank_lattice(rows) != rows.size()) rows.pop_back();
        if (rows.size() == static_cast<std::size_t>(c.dim)) break;
    }
    if (rows.size() < 2)
        throw std::invalid_argument(
            "fewer than two independent halfspace normals (cone is not pointed-spanning)");
    for (int i = 0; rows.size() < static_cast<std::size_t>(c.dim) && i < c.dim; ++i) {
        LatticePoint e(static_cast<std::size_t>(c.dim), 0);
        e[static_cast<std::size_t>(i)] = 1;
        rows.push_back(e);
        if (rank_lattice(rows) != rows.size()) rows.pop_back();
    }

    RatMat m;
    RatVec rhs;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        m.push_back(to_ratvec(rows[i]));
        rhs.push_back(i == 0 ? Rational(1) : (i == 1 ? Rational(-1) : Rational(0)));
    }
    RatVec x = solve_square(std::move(m), std::move(rhs));

    RatVec neg(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) neg[i] = -x[i];
    if (contains(c, x) || contains(c, neg))
        throw std::logic_error("outside_witness: constructed point failed the sign checks");
    return x;
}

} // namespace coneopp
