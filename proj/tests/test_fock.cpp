#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "coneopp/fock.hpp"
#include "coneopp/rng.hpp"

using namespace coneopp;

namespace {

RepContext quad_ctx() {
    return make_context(module_from_offsets(
        cone_from_lattice_generators(2, {{1, 0}, {0, 1}}), {{0, 0}}));
}

SparseVector random_module_supported(Rng& rng, const RepContext& ctx, int radius,
                                     int terms, double amp) {
    std::vector<std::pair<LatticePoint, Complex>> v;
    while (static_cast<int>(v.size()) < terms) {
        const LatticePoint y = rng.window_point(2, radius);
        if (member(ctx.module, y)) v.emplace_back(y, rng.amplitude(amp));
    }
    return sparse_from_terms(v);
}

SparseVector random_small(Rng& rng, int radius, int terms, double amp) {
    std::vector<std::pair<LatticePoint, Complex>> v;
    for (int i = 0; i < terms; ++i)
        v.emplace_back(rng.window_point(2, radius), rng.amplitude(amp));
    return sparse_from_terms(v);
}

ExpCombo random_combo(Rng& rng, const std::vector<SparseVector>& generators,
                      int max_terms) {
    std::vector<std::pair<Complex, SparseVector>> terms;
    const int n = static_cast<int>(rng.range(1, max_terms));
    for (int i = 0; i < n; ++i) {
        const auto& g = generators[static_cast<std::size_t>(
            rng.range(0, static_cast<std::int64_t>(generators.size()) - 1))];
        terms.emplace_back(rng.amplitude(), g);
    }
    return exp_combo(terms);
}

// Truncated power series for exp(z); 30 terms is far past double precision
// for the |z| <= 4 arguments used below.
Complex exp_series(Complex z) {
    Complex sum(0.0, 0.0);
    Complex term(1.0, 0.0);
    for (int n = 0; n <= 30; ++n) {
        sum += term;
        term *= z / static_cast<double>(n + 1);
    }
    return sum;
}

} // namespace

TEST_CASE("exponential inner products reduce to exp of the base pairing") {
    const ExpCombo vac = exp_vacuum();
    const ExpCombo e00 = exp_vector(basis_vector({0, 0}));
    CHECK(exp_inner(vac, vac) == Complex(1.0, 0.0));
    CHECK(exp_inner(vac, e00) == Complex(1.0, 0.0));

    // <e(f), e(f)> with |f| = 1 is Euler's number; compare against the series.
    const double euler = exp_series(Complex(1.0, 0.0)).real();
    CHECK(std::abs(exp_inner(e00, e00).real() - euler) <= 1e-12);
    CHECK(exp_inner(e00, e00).imag() == 0.0);

    Rng rng(11);
    for (int i = 0; i < 50; ++i) {
        const SparseVector f = random_small(rng, 3, 3, 0.8);
        const SparseVector g = random_small(rng, 3, 3, 0.8);
        const Complex direct = exp_inner(exp_vector(f), exp_vector(g));
        const Complex series = exp_series(inner(f, g));
        CHECK(std::abs(direct - series) <= 1e-12 * std::max(1.0, std::abs(series)));
    }
}

TEST_CASE("combo arithmetic merges equal generators and drops zeros") {
    const SparseVector f = basis_vector({1, 2});
    const ExpCombo twice = exp_combo({{Complex(1.0, 0.0), f}, {Complex(2.0, 0.0), f}});
    REQUIRE(twice.terms.size() == 1);
    CHECK(twice.terms.begin()->second == Complex(3.0, 0.0));

    const ExpCombo cancel = combo_sub(exp_vector(f), exp_vector(f));
    CHECK(cancel.terms.empty());
    CHECK(combo_norm(cancel) == 0.0);
    CHECK(combo_distance(exp_vector(f), exp_vector(f)) == 0.0);
}

TEST_CASE("weyl operators preserve the vacuum norm and fix the vacuum at zero") {
    Rng rng(12);
    for (int i = 0; i < 50; ++i) {
        const SparseVector xi = random_small(rng, 3, 3, 1.0);
        CHECK(std::abs(combo_norm(weyl_apply(xi, exp_vacuum())) - 1.0) <= 1e-12);
    }

    // The zero-argument operator is the identity, term for term.
    const ExpCombo c = exp_combo({{Complex(2.0, 1.0), basis_vector({0, 0})},
                                  {Complex(0.0, -1.0), basis_vector({1, 3})}});
    CHECK(combo_distance(weyl_apply(SparseVector{}, c), c) == 0.0);
}

TEST_CASE("weyl operators are unitary: inner products survive the action") {
    Rng rng(13);
    std::vector<SparseVector> gens;
    for (int i = 0; i < 6; ++i) gens.push_back(random_small(rng, 2, 2, 0.7));
    for (int i = 0; i < 50; ++i) {
        const SparseVector xi = random_small(rng, 2, 2, 0.7);
        const ExpCombo x = random_combo(rng, gens, 3);
        const ExpCombo y = random_combo(rng, gens, 3);
        const Complex before = exp_inner(x, y);
        const Complex after = exp_inner(weyl_apply(xi, x), weyl_apply(xi, y));
        CHECK(std::abs(before - after) <= 1e-12 * std::max(1.0, std::abs(before)));
    }
}

TEST_CASE("the commutation phase is exp(-i Im<xi,eta>)") {
    // Real vectors pair to a real number, so the phase degenerates to 1.
    const SparseVector re1 = sparse_from_terms({{{0, 0}, Complex(0.5, 0.0)}});
    const SparseVector re2 = sparse_from_terms({{{0, 0}, Complex(0.25, 0.0)},
                                                {{2, 1}, Complex(1.0, 0.0)}});
    CHECK(ccr_phase(re1, re2) == Complex(1.0, 0.0));

    // <i e00, e00> = conj(i) = -i, so the phase is exp(i) = cos 1 + i sin 1.
    const SparseVector xi = sparse_from_terms({{{0, 0}, Complex(0.0, 1.0)}});
    const SparseVector eta = basis_vector({0, 0});
    const Complex phase = ccr_phase(xi, eta);
    CHECK(std::abs(phase - Complex(std::cos(1.0), std::sin(1.0))) <= 1e-15);

    Rng rng(14);
    std::vector<SparseVector> gens;
    for (int i = 0; i < 5; ++i) gens.push_back(random_small(rng, 2, 2, 0.6));
    for (int i = 0; i < 25; ++i) {
        const SparseVector a = random_small(rng, 2, 2, 0.6);
        const SparseVector b = random_small(rng, 2, 2, 0.6);
        std::vector<ExpCombo> probes{exp_vacuum(), random_combo(rng, gens, 3)};
        const CheckReport rep = check_weyl_relation(a, b, probes, 1e-12);
        INFO((rep.failures.empty() ? std::string("ok") : rep.failures.front()));
        CHECK(rep.pass);
        CHECK(rep.checks == 2);
    }
}

TEST_CASE("the flow covariance identity holds bit for bit") {
    const RepContext ctx = quad_ctx();
    Rng rng(15);
    std::vector<SparseVector> gens;
    for (int i = 0; i < 5; ++i) gens.push_back(random_module_supported(rng, ctx, 4, 2, 0.7));

    // Zero step: both routes are literally the same computation.
    {
        const SparseVector xi = random_module_supported(rng, ctx, 4, 3, 0.7);
        std::vector<ExpCombo> probes{exp_vacuum(), exp_vector(gens[0])};
        const CheckReport rep = check_covariance(ctx, {0, 0}, xi, probes, 0.0);
        CHECK(rep.pass);
        CHECK(rep.max_error == 0.0);
    }

    for (int i = 0; i < 30; ++i) {
        const SparseVector xi = random_module_supported(rng, ctx, 4, 3, 0.7);
        const LatticePoint x{rng.range(0, 3), rng.range(0, 3)};
        std::vector<ExpCombo> probes{exp_vacuum(), random_combo(rng, gens, 2)};
        const CheckReport rep = check_covariance(ctx, x, xi, probes, 0.0);
        INFO((rep.failures.empty() ? std::string("ok") : rep.failures.front()));
        CHECK(rep.pass);
    }

    CHECK_THROWS_AS(
        check_covariance(ctx, {1, 0}, basis_vector({-1, -1}), {exp_vacuum()}, 1e-9),
        std::invalid_argument);
}

TEST_CASE("second quantization is functorial for the shift semigroup") {
    const RepContext ctx = quad_ctx();
    Rng rng(16);
    for (int i = 0; i < 30; ++i) {
        const SparseVector f = random_module_supported(rng, ctx, 4, 3, 0.8);
        const ExpCombo c = exp_combo({{rng.amplitude(), f}, {rng.amplitude(), SparseVector{}}});
        const LatticePoint x{rng.range(0, 3), rng.range(0, 3)};
        const LatticePoint y{rng.range(0, 3), rng.range(0, 3)};
        const ExpCombo two_steps = gamma_apply(ctx, x, gamma_apply(ctx, y, c));
        const ExpCombo one_step = gamma_apply(ctx, add(x, y), c);
        CHECK(combo_distance(two_steps, one_step) == 0.0);
    }
}

TEST_CASE("exponential gram matrices are positive semidefinite") {
    Rng rng(17);
    for (int size = 2; size <= 6; ++size) {
        std::vector<ExpCombo> family;
        for (int i = 0; i < size; ++i)
            family.push_back(exp_vector(random_small(rng, 2, 2, 0.8)));
        const CheckReport rep = check_gram_psd(family, 1e-9);
        INFO((rep.failures.empty() ? std::string("ok") : rep.failures.front()));
        CHECK(rep.pass);
    }

    // A repeated vector makes the matrix singular; semidefiniteness survives.
    const ExpCombo dup = exp_vector(basis_vector({1, 1}));
    const std::vector<ExpCombo> singular{dup, dup, exp_vacuum()};
    CHECK(check_gram_psd(singular, 1e-9).pass);

    // Single-vector pin: the matrix is [[1]].
    const auto [lo, scale] = gram_min_eigenvalue({exp_vacuum()});
    CHECK(std::abs(lo - 1.0) <= 1e-12);
    CHECK(scale == 1.0);
}

TEST_CASE("the symmetric eigensolver is exact on diagonal and small matrices") {
    CHECK(detail::min_eigenvalue_symmetric({{2.0, 0.0}, {0.0, 5.0}}) == 2.0);

    // Real embedding of the Hermitian matrix [[2, i], [-i, 2]] (spectrum 1, 3).
    const std::vector<std::vector<double>> big{
        {2.0, 0.0, 0.0, -1.0},
        {0.0, 2.0, 1.0, 0.0},
        {0.0, 1.0, 2.0, 0.0},
        {-1.0, 0.0, 0.0, 2.0},
    };
    CHECK(std::abs(detail::min_eigenvalue_symmetric(big) - 1.0) <= 1e-9);
}

TEST_CASE("generators beyond the norm guard are rejected") {
    // |27|^2 = 729 exceeds the guard of 700.
    const SparseVector big = sparse_from_terms({{{0, 0}, Complex(27.0, 0.0)}});
    CHECK_THROWS_AS(exp_vector(big), std::domain_error);
    CHECK_THROWS_AS(weyl_apply(big, exp_vacuum()), std::domain_error);
    // |26|^2 = 676 stays inside.
    const SparseVector ok = sparse_from_terms({{{0, 0}, Complex(26.0, 0.0)}});
    CHECK_NOTHROW(exp_vector(ok));
}
