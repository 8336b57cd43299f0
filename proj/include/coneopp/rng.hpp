// Seeded deterministic randomness. The raw mt19937_64 stream is mapped to
// ranges by hand so the same seed yields the same draws on every platform
// and standard library.
#pragma once

#include <cstdint>
#include <random>

#include "coneopp/linalg.hpp"
#include "coneopp/sparse_vector.hpp"

namespace coneopp {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform in [lo, hi], inclusive. Modulo bias is irrelevant here; what
    // matters is that the mapping never depends on library internals.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next() % span);
    }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double symmetric(double amp) { return (2.0 * unit() - 1.0) * amp; }

    Complex amplitude(double amp = 1.0) {
        const double re = symmetric(amp);
        return Complex(re, symmetric(amp));
    }

    LatticePoint window_point(int dim, int radius) {
        LatticePoint y(static_cast<std::size_t>(dim));
        for (auto& c : y) c = range(-radius, radius);
        return y;
    }

  private:
    std::mt19937_64 eng_;
};

} // namespace coneopp
