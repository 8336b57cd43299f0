#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>
#include <vector>

#include "coneopp/cone.hpp"
#include "coneopp/rng.hpp"
#include "support/lp_oracle.hpp"

using namespace coneopp;

namespace {

Cone quadrant() { return cone_from_lattice_generators(2, {{1, 0}, {0, 1}}); }
Cone wedge() { return cone_from_lattice_generators(2, {{1, 0}, {1, 1}}); }
Cone octant() {
    return cone_from_lattice_generators(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
}
// Upper halfspace {z >= 0} in d=3: the xy-plane is positively spanned by
// three generators, so no antipodal pair appears. (In d=2 a halfplane would
// need g and -g as generators, which construction rejects; every cone this
// library builds in d=2 is therefore pointed.)
Cone halfplane() {
    return cone_from_lattice_generators(
        3, {{1, 0, 0}, {-1, 1, 0}, {-1, -1, 0}, {0, 0, 1}});
}
Cone halfline() { return cone_from_lattice_generators(1, {{1}}); }

// Scan oracle: least n >= 1 with n*a - x strictly inside every halfspace.
std::int64_t archimedean_by_scan(const Cone& c, const LatticePoint& a, const RatVec& x) {
    for (std::int64_t n = 1;; ++n) {
        bool inside = true;
        for (const auto& h : c.halfspaces) {
            Rational lhs = Rational(dot_lattice(h, a) * n) - dot_mixed(h, x);
            if (!(Rational(0) < lhs)) inside = false;
        }
        if (inside) return n;
        REQUIRE(n < 100000); // oracle guard
    }
}

} // namespace

TEST_CASE("the quadrant is self-dual, pointed, and spanning") {
    const Cone c = quadrant();
    CHECK(c.halfspaces == std::vector<LatticePoint>{{0, 1}, {1, 0}});
    CHECK(c.pointed);
    CHECK(c.spanning);
}

TEST_CASE("the wedge has the expected halfspaces") {
    const Cone c = wedge();
    CHECK(c.halfspaces == std::vector<LatticePoint>{{0, 1}, {1, -1}});
    CHECK(c.pointed);
    CHECK(c.spanning);
}

TEST_CASE("the half-line in d=1 is described by its generator") {
    const Cone c = halfline();
    CHECK(c.halfspaces == std::vector<LatticePoint>{{1}});
    CHECK(c.pointed);
}

TEST_CASE("the octant halfspaces are the coordinate functionals") {
    const Cone c = octant();
    CHECK(c.halfspaces == std::vector<LatticePoint>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
    CHECK(c.pointed);
}

TEST_CASE("redundant generators do not change the cone") {
    const Cone c = cone_from_lattice_generators(2, {{1, 0}, {0, 1}, {1, 1}, {2, 3}});
    CHECK(same_cone(c, quadrant()));
}

TEST_CASE("a halfplane is spanning but not pointed") {
    const Cone c = halfplane();
    CHECK(c.spanning);
    CHECK_FALSE(c.pointed);
    CHECK(c.halfspaces == std::vector<LatticePoint>{{0, 0, 1}});
}

TEST_CASE("degenerate inputs are rejected with diagnostics") {
    // Not spanning: a single ray in d=2.
    CHECK_THROWS_AS(cone_from_lattice_generators(2, {{1, 0}}), std::invalid_argument);
    // Contains a line: antipodal generators on the same ray.
    CHECK_THROWS_AS(cone_from_lattice_generators(2, {{1, 1}, {-1, -1}, {0, 1}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(cone_from_lattice_generators(2, {{2, 2}, {-1, -1}, {0, 1}}),
                    std::invalid_argument);
    // All of space.
    CHECK_THROWS_AS(cone_from_lattice_generators(2, {{1, 0}, {0, 1}, {-1, -1}}),
                    std::invalid_argument);
    // Zero generator.
    CHECK_THROWS_AS(cone_from_lattice_generators(2, {{0, 0}, {1, 0}, {0, 1}}),
                    std::invalid_argument);
    // Desk-scale limits.
    CHECK_THROWS_AS(cone_from_lattice_generators(5, {{1, 0, 0, 0, 0}}),
                    std::invalid_argument);
}

TEST_CASE("membership signs on the quadrant") {
    const Cone c = quadrant();
    CHECK(contains(c, {Rational(2), Rational(3)}));
    CHECK(contains_interior(c, {Rational(2), Rational(3)}));
    CHECK(contains(c, {Rational(0), Rational(5)}));
    CHECK_FALSE(contains_interior(c, {Rational(0), Rational(5)}));
    CHECK_FALSE(contains(c, {Rational(1), Rational(-1)}));
}

TEST_CASE("halfspace membership agrees with the nonnegative-span LP on random points") {
    Rng rng(2024);
    for (const Cone& c : {quadrant(), wedge(), octant(), halfplane()}) {
        std::vector<RatVec> cols;
        for (const auto& g : c.generators) cols.push_back(g);
        for (int i = 0; i < 250; ++i) {
            RatVec x;
            for (int k = 0; k < c.dim; ++k)
                x.push_back(Rational(rng.range(-20, 20), rng.range(1, 4)));
            CHECK(contains(c, x) == test::in_nonneg_span(cols, x));
        }
    }
}

TEST_CASE("lattice membership agrees with the LP oracle too") {
    Rng rng(7);
    for (const Cone& c : {quadrant(), wedge(), octant()}) {
        for (int i = 0; i < 200; ++i) {
            const LatticePoint y = rng.window_point(c.dim, 15);
            CHECK(in_monoid(c, y) == test::in_nonneg_span_lattice(c.gens_primitive, y));
        }
    }
}

TEST_CASE("the canonical interior point is strictly interior") {
    for (const Cone& c : {quadrant(), wedge(), octant(), halfplane(), halfline()})
        CHECK(in_monoid_interior(c, interior_lattice_point(c)));
}

TEST_CASE("growth bound on the quadrant: pinned values") {
    const Cone c = quadrant();
    CHECK(archimedean_bound(c, LatticePoint{1, 1}, LatticePoint{5, 3}) == 6);
    CHECK(archimedean_bound(c, LatticePoint{1, 1}, LatticePoint{-4, -4}) == 1);
    CHECK(archimedean_bound(c, LatticePoint{2, 1}, LatticePoint{5, 3}) == 4);
}

TEST_CASE("growth bound equals the scan oracle and is minimal") {
    Rng rng(99);
    for (const Cone& c : {quadrant(), wedge(), octant(), halfplane()}) {
        const LatticePoint a = interior_lattice_point(c);
        for (int i = 0; i < 100; ++i) {
            RatVec x;
            for (int k = 0; k < c.dim; ++k)
                x.push_back(Rational(rng.range(-12, 12), rng.range(1, 3)));
            const std::int64_t n = archimedean_bound(c, to_ratvec(a), x);
            CHECK(n == archimedean_by_scan(c, a, x));
        }
    }
}

TEST_CASE("growth bound rejects non-interior directions") {
    CHECK_THROWS_AS(archimedean_bound(quadrant(), LatticePoint{1, 0}, LatticePoint{0, 0}),
                    std::invalid_argument);
}

TEST_CASE("outside witness fails both membership tests") {
    for (const Cone& c : {quadrant(), wedge(), octant()}) {
        const RatVec x = outside_witness(c);
        RatVec neg(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) neg[i] = -x[i];
        CHECK_FALSE(contains(c, x));
        CHECK_FALSE(contains(c, neg));
    }
}

TEST_CASE("no outside witness exists on the line") {
    CHECK_THROWS_AS(outside_witness(halfline()), std::invalid_argument);
}
