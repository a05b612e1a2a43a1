#include "doctest.h"

#include <cmath>
#include <numbers>

#include "faber/lambert.hpp"
#include "faber/maps.hpp"
#include "faber/sampling.hpp"

using namespace faber;

namespace {

// Principal-branch values from mpmath.lambertw at 30 digits.
struct Reference {
    Complex t;
    Complex w;
};

const Reference kReference[] = {
    {{1.0, 0.0}, {0.567143290409783873, 0.0}},
    {{-0.25, 0.0}, {-0.35740295618138890307, 0.0}},
    {{2.0, 3.0}, {1.0900765344857908463, 0.53013972077483880143}},
    {{-3.0, 0.5}, {0.53120248217537168925, 1.7072908951138112938}},
    {{-0.3678, 0.001}, {-0.94593226293936312595, 0.04834465535677240252}},
    {{0.0, 10.0}, {1.643649599167290869, 1.0167969610306681028}},
    {{-2.0, -0.001}, {0.17301644755450395059, -1.6733268872280914461}},
    {{1e6, 0.0}, {11.383358086140052622, 0.0}},
};

}  // namespace

TEST_CASE("special values") {
    CHECK(lambert_w0(0.0).value == Complex{});
    CHECK(std::abs(lambert_w0(std::numbers::e).value - 1.0) <= 1e-15);
    CHECK(lambert_w0(-1.0 / std::numbers::e).value == Complex{-1.0});
}

TEST_CASE("reference values") {
    for (const auto& [t, w] : kReference) {
        const LambertResult r = lambert_w0(t);
        CHECK(r.converged);
        CHECK(std::abs(r.value - w) <= 1e-13 * (1.0 + std::abs(w)));
        CHECK(r.residual <= lambert_tolerance(t));
    }
}

TEST_CASE("branch cut") {
    CHECK_THROWS_AS(lambert_w0(-1.0), BranchCutError);
    CHECK_THROWS_AS(lambert_w0(-100.0), BranchCutError);
    // Just off the cut from either side gives conjugate values.
    const Complex above = lambert_w0(Complex(-1.0, 1e-12)).value;
    const Complex below = lambert_w0(Complex(-1.0, -1e-12)).value;
    CHECK(std::abs(above - std::conj(below)) <= 1e-12);
    CHECK(above.imag() > 1.0);
}

TEST_CASE("defining identity near the branch point") {
    const Complex bp = -1.0 / std::numbers::e;
    for (int k = 0; k < 16; ++k) {
        const Complex t = bp + std::polar(1e-4, 2.0 * std::numbers::pi * (k + 0.5) / 16);
        const LambertResult r = lambert_w0(t);
        CHECK(r.converged);
        CHECK(std::abs(r.value * std::exp(r.value) - t) <= lambert_tolerance(t));
    }
}

TEST_CASE("inverse map") {
    CHECK(phi_inverse(Complex(3.0, 1.0), Complex(0.5, 0.0), 0.0) == Complex(2.5, 1.0));
    CHECK_THROWS_AS(phi_inverse(1.0, 1.0, 0.5), std::domain_error);

    SampleRng rng(2);
    for (const Complex lambda : {Complex(1.0), Complex(0.5, 0.5), Complex(0.0, -0.9)}) {
        for (int i = 0; i < 30; ++i) {
            const Complex w = std::polar(rng.uniform(1.05, 8.0), 2.0 * std::numbers::pi * rng.uniform());
            const Complex eta(0.3, -0.2);
            const Complex z = psi_eval(MapFamily{ExpMap(eta, lambda)}, w);
            CHECK(std::abs(phi_inverse(z, eta, lambda) - w) <= 1e-11 * std::abs(w));
        }
    }
}

TEST_CASE("power series of W0") {
    const PowerSeries w = w0_power_series(1, 6);
    CHECK(w[0] == Complex{});
    CHECK(w[1] == Complex{1.0});
    CHECK(w[2] == Complex{-1.0});
    CHECK(std::abs(w[3] - 1.5) <= 1e-15);
    CHECK(std::abs(w[4] + 8.0 / 3.0) <= 1e-15);
    CHECK(w0_power_series(0, 4)[0] == Complex{1.0});
    CHECK_THROWS(w0_power_series(-1, 5));
    CHECK_THROWS(w0_power_series(3, 2));

    const PowerSeries w20 = w0_power_series(1, 20);
    for (int k = 0; k < 8; ++k) {
        const Complex t = std::polar(0.1, 2.0 * std::numbers::pi * k / 8);
        CHECK(std::abs(w20.sum_at(t) - lambert_w0(t).value) <= 1e-10);
    }
}

TEST_CASE("normalized powers (W0 / t)^j") {
    const PowerSeries w = w0_power_series(1, 21);
    const PowerSeries base(std::vector<Complex>(w.coeffs().begin() + 1, w.coeffs().end()), 20);
    for (const int j : {-5, -1, 0, 1, 3}) {
        const PowerSeries closed = w0_normalized_power_series(j, 20);
        const PowerSeries direct = pow_int(base, j);
        for (int m = 0; m <= 20; ++m)
            CHECK(std::abs(closed[m] - direct[m]) <= 1e-9 * (1.0 + std::abs(direct[m])));
    }
}
