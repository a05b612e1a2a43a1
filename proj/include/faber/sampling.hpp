#pragma once

// Seeded samplers shared by the randomized verification suites. Uniform
// variates are built directly from the mt19937_64 bit stream, which the
// standard pins down, so runs are reproducible across standard libraries.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

#include "faber/faber.hpp"
#include "faber/maps.hpp"

namespace faber {

class SampleRng {
public:
    explicit SampleRng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    int integer(int lo, int hi) { return lo + static_cast<int>(uniform() * (hi - lo + 1)); }

    /// Uniform on the closed disk of the given radius.
    Complex in_disk(double radius) {
        const double r = radius * std::sqrt(uniform());
        return std::polar(r, 2.0 * std::numbers::pi * uniform());
    }

    /// Uniform on the annulus r_lo <= |z| <= r_hi.
    Complex in_annulus(double r_lo, double r_hi) {
        const double r = std::sqrt(uniform(r_lo * r_lo, r_hi * r_hi));
        return std::polar(r, 2.0 * std::numbers::pi * uniform());
    }

private:
    std::mt19937_64 engine_;
};

/// a_k uniform in the disk |a_k| <= 1/(k+1), k = 0..truncation.
inline ExteriorMap random_exterior_map(SampleRng& rng, int truncation) {
    ExteriorMap map;
    map.alpha0 = rng.in_disk(1.0);
    for (int k = 1; k <= truncation; ++k) map.tail.push_back(rng.in_disk(1.0 / (k + 1)));
    return map;
}

/// Gap map with n in [1, max_n], tail a_n .. a_{2n}, |a_j| <= 2/(j+1) and |a_n| bounded away from 0.
inline GapMap random_gap_map(SampleRng& rng, int max_n = 5) {
    const int n = rng.integer(1, max_n);
    const Complex z0 = rng.in_disk(1.0);
    std::vector<Complex> tail;
    const double bound_n = 2.0 / (n + 1);
    tail.push_back(std::polar(bound_n * rng.uniform(0.1, 1.0), 2.0 * std::numbers::pi * rng.uniform()));
    for (int j = n + 1; j <= 2 * n; ++j) tail.push_back(rng.in_disk(2.0 / (j + 1)));
    return GapMap(z0, n, std::move(tail));
}

/// Two-gap map with n in [m+2, 2m+1], the range where F_j(z0) vanishes for j <= n, j != m+1.
inline TwoGapMap random_twogap_map(SampleRng& rng, int max_m = 4) {
    const int m = rng.integer(1, max_m);
    const int n = rng.integer(m + 2, 2 * m + 1);
    const Complex z0 = rng.in_disk(1.0);
    const Complex alpha_m = std::polar(rng.uniform(0.1, 1.0) / m, 2.0 * std::numbers::pi * rng.uniform());
    std::vector<Complex> tail;
    tail.push_back(std::polar(rng.uniform(0.1, 1.0) / n, 2.0 * std::numbers::pi * rng.uniform()));
    for (int j = n + 1; j <= n + 4; ++j) tail.push_back(rng.in_disk(1.0 / (j + 1)));
    return TwoGapMap(z0, m, alpha_m, n, std::move(tail));
}

}  // namespace faber
