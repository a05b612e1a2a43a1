// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "faber/cli.hpp"
#include "faber/faber.hpp"
#include "faber/lambert.hpp"
#include "faber/maps.hpp"
#include "faber/sampling.hpp"
#include "faber/verify.hpp"

using namespace faber;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Verdict {
    bool pass;
    std::string detail;
};

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, a, b, c);
    return buf;
}

// 1 + sum |c_k| |z|^k: the size of the terms Horner adds up at z.
double eval_scale(const ComplexPolynomial& p, Complex z) {
    double acc = 0.0;
    const auto c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * std::abs(z) + std::abs(*it);
    return 1.0 + acc;
}

Verdict c1_oracle() {
    SampleRng rng(1);
    double worst = 0.0;
    for (int m = 0; m < 50; ++m) {
        const ExteriorMap map = random_exterior_map(rng, 30);
        const FaberSystem F = generate_recurrence(map, 30);
        for (int s = 0; s < 20; ++s) {
            const Complex z = rng.in_disk(2.0);
            const auto v = faber_values_oracle(map, z, 30);
            for (int j = 1; j <= 30; ++j)
                worst = std::max(worst, std::abs(v[static_cast<std::size_t>(j) - 1] - eval(F[j], z)) / eval_scale(F[j], z));
        }
    }
    return {worst <= 1e-9, fmt("50 maps x 20 points, j <= 30: max relative deviation %.2e", worst)};
}

Verdict c2_closed_forms() {
    const double tol = 1e-9;
    bool ok = true;
    int compared = 0;

    for (int m = 1; m <= 4; ++m) {
        const FaberSystem F = generate_recurrence(to_exterior_map(Hypocycloid(m), 24), 24);
        for (int j = 1; j <= 24; ++j, ++compared) ok = ok && equal_within(hypocycloid_faber_closed(m, j), F[j], tol);
    }

    for (const Complex eta : {Complex(0.0), Complex(0.3, -0.2)}) {
        for (const double r : {0.0, 0.3, 0.7, 1.0}) {
            for (int p = 0; p < 8; ++p) {
                const Complex lambda = std::polar(r, kTwoPi * p / 8);
                const FaberSystem F = generate_recurrence(to_exterior_map(ExpMap(eta, lambda), 20), 20);
                for (int j = 1; j <= 20; ++j, ++compared)
                    ok = ok && equal_within(expmap_faber_closed(eta, lambda, j), F[j], tol);
            }
        }
    }

    SampleRng rng(2);
    for (int i = 0; i < 20; ++i) {
        const GapMap g = random_gap_map(rng);
        const FaberSystem F = generate_recurrence(to_exterior_map(g, g.max_index()), g.n() + 1);
        for (int j = 0; j <= g.n() + 1; ++j, ++compared) ok = ok && equal_within(gap_faber_closed(g, j), F[j], tol);
    }
    for (int i = 0; i < 20; ++i) {
        const TwoGapMap g = random_twogap_map(rng);
        const FaberSystem closed = twogap_faber(g, 24);
        const FaberSystem F = generate_recurrence(to_exterior_map(g, std::max(24, g.max_index())), 24);
        for (int j = 0; j <= 24; ++j, ++compared) ok = ok && equal_within(closed[j], F[j], tol);
    }
    return {ok, fmt("%.0f closed-form polynomials compared to the recurrence at 1e-9", compared)};
}

Verdict c3_chebyshev() {
    double worst = 0.0;
    bool ok = true;
    for (int j = 1; j <= 24; ++j) {
        const ComplexPolynomial a = hypocycloid_faber_closed(1, j);
        const ComplexPolynomial b = chebyshev_scaled(j);
        ok = ok && equal_within(a, b, 1e-12);
        worst = std::max(worst, max_coeff_deviation(a, b));
    }
    return {ok, fmt("j = 1..24: max coefficient deviation %.2e", worst)};
}

Verdict c4_exp_pattern() {
    const Complex etas[] = {Complex(0.0), Complex(0.25, 0.1), Complex(-0.5, 0.3)};
    const Complex lambdas[] = {Complex(0.5), Complex(1.0), Complex(0.3, 0.4), Complex(0.0, -0.8), Complex(-0.2, 0.05)};
    double worst_zero = 0.0;
    double worst_f1 = 0.0;
    double weakest_break = HUGE_VAL;
    for (const Complex eta : etas) {
        for (const Complex lambda : lambdas) {
            const ExteriorMap map = to_exterior_map(ExpMap(eta, lambda), 20);
            const FaberSystem F = generate_recurrence(map, 20);
            worst_f1 = std::max(worst_f1, std::abs(std::abs(eval(F[1], eta)) - std::abs(lambda)));
            for (int j = 2; j <= 20; ++j) worst_zero = std::max(worst_zero, std::abs(eval(F[j], eta)));
            // a_20 cannot reach F_1..F_20, so the perturbations cover a_1..a_19.
            for (int k = 1; k <= 19; ++k) {
                ExteriorMap perturbed = map;
                perturbed.tail[static_cast<std::size_t>(k) - 1] += 1e-3;
                const FaberSystem G = generate_recurrence(perturbed, 20);
                double largest = 0.0;
                for (int j = 2; j <= 20; ++j) largest = std::max(largest, std::abs(eval(G[j], eta)));
                weakest_break = std::min(weakest_break, largest);
            }
        }
    }
    const bool ok = worst_f1 <= 1e-12 && worst_zero <= 1e-10 && weakest_break > 1e-4;
    return {ok, fmt("||F1(eta)| - |lambda|| %.1e, max |F_j(eta)| %.1e, weakest perturbation %.1e", worst_f1, worst_zero,
                    weakest_break)};
}

Verdict c5_identities() {
    SampleRng rng(5);
    double worst13 = 0.0;
    double worst16 = 0.0;
    for (int i = 0; i < 30; ++i) {
        const ExteriorMap map = random_exterior_map(rng, 30);
        const Complex z = rng.in_disk(2.0);
        const FaberSystem F = generate_recurrence(map, 30);
        const auto g13 = gf13_coeffs(map, z, 30);
        const auto g16 = gf16_coeffs(map, z, 30);
        for (int j = 0; j <= 30; ++j) {
            worst13 = std::max(worst13, std::abs(g13[static_cast<std::size_t>(j)] - eval(F[j], z)) / eval_scale(F[j], z));
            if (j == 0) continue;
            const ComplexPolynomial d = derivative(F[j]) * Complex(1.0 / j);
            worst16 = std::max(worst16, std::abs(g16[static_cast<std::size_t>(j)] - eval(d, z)) / eval_scale(d, z));
        }
    }
    double worst14 = 0.0;
    for (const Complex lambda : {Complex(0.7), Complex(1.0), Complex(0.3, -0.6), Complex(0.0)})
        worst14 = std::max(worst14, verify_derivative_identity(lambda, 20, 1e-9).max_residual);
    const bool ok = worst13 <= 1e-9 && worst14 <= 1e-9 && worst16 <= 1e-9;
    return {ok, fmt("gf13 %.1e, derivative identity %.1e, gf16 %.1e", worst13, worst14, worst16)};
}

Verdict c6_kernel() {
    double worst_coeff = 0.0;
    double worst_sum = 0.0;
    double worst_poly = 0.0;
    double closed_gap = 0.0;
    for (const Complex lambda : {Complex(0.5), Complex(1.0), Complex(0.4, 0.6)}) {
        const auto P = kernel_polys(lambda, 15);
        const FaberSystem F = generate_recurrence(to_exterior_map(ExpMap(0.0, lambda), 15), 15);
        for (int j = 0; j <= 15; ++j) {
            ComplexPolynomial sum;
            for (int k = 0; k <= j; ++k) sum += F[k] * std::pow(lambda, j - k);
            worst_poly = std::max(worst_poly, max_coeff_deviation(P[static_cast<std::size_t>(j)], sum) /
                                                  (1.0 + sum.max_abs_coeff()));
        }
        for (int i = 0; i < 20; ++i) {
            const double theta = kTwoPi * i / 20;
            const Complex z = 0.5 * gamma_boundary(lambda, theta);
            const Complex t = std::polar(0.5, theta + 0.7);
            const auto K = kernel_series_coeffs(lambda, z, 15);
            Complex series_sum{};
            Complex poly_sum{};
            Complex tk = 1.0;
            for (int j = 0; j <= 15; ++j, tk *= t) {
                const Complex pj = eval(P[static_cast<std::size_t>(j)], z);
                worst_coeff = std::max(worst_coeff, std::abs(K[static_cast<std::size_t>(j)] - pj));
                series_sum += K[static_cast<std::size_t>(j)] * tk;
                poly_sum += pj * tk;
            }
            worst_sum = std::max(worst_sum, std::abs(series_sum - poly_sum));
            closed_gap = std::max(closed_gap, std::abs(1.0 / (1.0 - z * t * std::exp(-lambda * t)) - poly_sum));
        }
    }
    const bool ok = worst_coeff <= 1e-8 && worst_sum <= 1e-8 && worst_poly <= 1e-12;
    std::string detail = fmt("coefficients %.1e, truncated sums %.1e, P_j vs sum %.1e", worst_coeff, worst_sum, worst_poly);
    detail += fmt(" (closed-form K minus 16-term sum %.1e, truncation only)", closed_gap);
    return {ok, detail};
}

Verdict c7_lambert() {
    double grid = 0.0;
    int unconverged = 0;
    for (int a = 0; a < 40; ++a) {
        for (int b = 0; b < 25; ++b) {
            const Complex t(-5.0 + 10.0 * a / 39.0, -5.0 + 10.0 * b / 24.0 + 0.013);
            const LambertResult r = lambert_w0(t);
            if (!r.converged) ++unconverged;
            grid = std::max(grid, std::abs(r.value * std::exp(r.value) - t) / (1.0 + std::abs(t)));
        }
    }

    SampleRng rng(7);
    double roundtrip = 0.0;
    for (int i = 0; i < 100; ++i) {
        const Complex lambda = rng.in_disk(1.0);
        const Complex eta = rng.in_disk(1.0);
        double r = 0.0;
        while (!(r > 1.1)) r = rng.uniform(1.1, 10.0);
        const Complex w = std::polar(r, kTwoPi * rng.uniform());
        const Complex z = psi_eval(MapFamily{ExpMap(eta, lambda)}, w);
        roundtrip = std::max(roundtrip, std::abs(phi_inverse(z, eta, lambda) - w));
    }

    const PowerSeries w0 = w0_power_series(1, 20);
    double series = 0.0;
    for (int k = 0; k < 32; ++k) {
        const Complex t = std::polar(0.1, kTwoPi * k / 32);
        series = std::max(series, std::abs(w0.sum_at(t) - lambert_w0(t).value));
    }
    const bool ok = grid <= 1e-12 && unconverged == 0 && roundtrip <= 1e-10 && series <= 1e-10;
    return {ok, fmt("grid residual %.1e, round trip %.1e, series %.1e", grid, roundtrip, series)};
}

Verdict c8_gap_coefficients() {
    SampleRng rng(8);
    double worst = 0.0;
    bool ok = true;
    for (int i = 0; i < 20; ++i) {
        const GapMap g = random_gap_map(rng);
        const GapCoefficientReport r = remark1_check(g, 2 * g.n() + 1, 1e-10);
        ok = ok && r.pass && r.bound_holds && r.last_index == 2 * g.n();
        worst = std::max(worst, r.max_residual);
    }
    return {ok, fmt("20 gap maps, j in [n, 2n]: max residual %.1e", worst)};
}

Verdict c9_functionals() {
    const BGrid grid;
    const double step = kTwoPi / grid.angular_points;
    double worst = 0.0;
    bool ok = true;
    for (const double l : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        const double b = b_functional_grid(0.0, l, grid);
        const double exact = b_functional(0.0, l);
        ok = ok && b >= exact - 1e-6 && b - exact <= 1e-6 + step;
        worst = std::max(worst, std::abs(b - exact));
    }
    const auto r_grid = a_functional_default_grid();
    double weakest = HUGE_VAL;
    for (const double l : {1.05, 1.1, 1.5, 2.0, 5.0}) {
        for (int p = 0; p < 4; ++p) {
            const double a = a_functional_lower_bound(0.0, std::polar(l, kTwoPi * p / 4), r_grid);
            weakest = std::min(weakest, a);
        }
    }
    ok = ok && weakest > 6.0;
    return {ok, fmt("B grid gap %.1e (allowed %.1e), smallest A bound for |lambda| >= 1.05: %.1f", worst, 1e-6 + step,
                    weakest)};
}

Verdict c10_rays() {
    double worst_angle = 0.0;
    double worst_residual = 0.0;
    bool converged = true;
    for (int m = 1; m <= 4; ++m) {
        for (int j = 1; j <= 24; ++j) {
            const RootResult r = roots(hypocycloid_faber_closed(m, j));
            converged = converged && r.converged;
            worst_residual = std::max(worst_residual, r.max_residual);
            for (const Complex z : r.roots) {
                // The origin lies on every ray.
                if (std::abs(z) <= 1e-8) continue;
                double best = HUGE_VAL;
                for (int k = 0; k <= m; ++k)
                    best = std::min(best, std::abs(std::remainder(std::arg(z) - kTwoPi * k / (m + 1), kTwoPi)));
                worst_angle = std::max(worst_angle, best);
            }
        }
    }
    const bool ok = converged && worst_angle <= 1e-6 && worst_residual <= 1e-8;
    return {ok, fmt("max angle %.1e, max residual %.1e", worst_angle, worst_residual)};
}

Verdict c11_determinism() {
    cli::JobSpec job;
    job.command = "verify";
    job.suite = "all";
    job.seed = 0;
    std::ostringstream a, b, err;
    const int ca = cli::run(job, a, err);
    const int cb = cli::run(job, b, err);
    const bool ok = ca == cb && !a.str().empty() && a.str() == b.str();
    return {ok, fmt("two full verify runs, %.0f bytes each, exit %.0f", static_cast<double>(a.str().size()), ca)};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
        {"C1 oracle equivalence", c1_oracle},
        {"C2 closed-form equivalence", c2_closed_forms},
        {"C3 Chebyshev identity", c3_chebyshev},
        {"C4 exponential-map root pattern", c4_exp_pattern},
        {"C5 generating-function identities", c5_identities},
        {"C6 kernel expansion", c6_kernel},
        {"C7 Lambert W", c7_lambert},
        {"C8 gap-map coefficient identity", c8_gap_coefficients},
        {"C9 starlikeness and non-univalence functionals", c9_functionals},
        {"C10 hypocycloid roots on rays", c10_rays},
        {"C11 determinism", c11_determinism},
    };
    int failures = 0;
    for (const auto& [name, check] : criteria) {
        Verdict v{false, ""};
        try {
            v = check();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s %s: %s\n", v.pass ? "PASS" : "FAIL", name, v.detail.c_str());
        if (!v.pass) ++failures;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
