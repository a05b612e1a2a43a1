#include "faber/lambert.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace faber {

namespace {

constexpr double kInvE = 0.36787944117144233;  // 1/e

// Range of W0: |Im w| < pi and Re w > -Im w cot(Im w) (Re w >= -1 on the real line).
bool in_principal_range(Complex w) {
    const double y = w.imag();
    if (std::abs(y) >= std::numbers::pi) return false;
    if (std::abs(y) < 1e-300) return w.real() >= -1.0 - 1e-9;
    return w.real() > -y / std::tan(y) - 1e-9 * (1.0 + std::abs(w));
}

Complex branch_point_seed(Complex t) {
    const Complex p = std::sqrt(2.0 * (std::numbers::e * t + 1.0));
    return -1.0 + p - p * p / 3.0 + (11.0 / 72.0) * p * p * p;
}

Complex asymptotic_seed(Complex t) {
    const Complex l1 = std::log(t);
    return l1 - std::log(l1);
}

LambertResult halley(Complex t, Complex w, int max_iterations) {
    LambertResult r;
    for (int it = 1; it <= max_iterations; ++it) {
        r.iterations = it;
        const Complex ew = std::exp(w);
        const Complex f = w * ew - t;
        if (f == Complex{}) break;
        const Complex wp1 = w + 1.0;
        const Complex denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
        if (denom == Complex{} || !std::isfinite(denom.real()) || !std::isfinite(denom.imag())) break;
        const Complex step = f / denom;
        w -= step;
        if (std::abs(step) <= 1e-15 * (1.0 + std::abs(w))) break;
    }
    r.value = w;
    r.residual = std::abs(w * std::exp(w) - t);
    r.converged = std::isfinite(r.residual) && r.residual <= lambert_tolerance(t);
    return r;
}

}  // namespace

LambertResult lambert_w0(Complex t, int max_iterations) {
    if (t.imag() == 0.0 && t.real() < -kInvE) throw BranchCutError("lambert_w0: argument on the branch cut");
    if (t == Complex{}) return {Complex{}, true, 0, 0.0};
    if (t.imag() == 0.0 && t.real() == -kInvE) return {Complex{-1.0}, true, 0, 0.0};

    Complex seeds[3];
    int count = 0;
    const double r = std::abs(t);
    if (std::abs(t + kInvE) < 0.3) {
        seeds[count++] = branch_point_seed(t);
    } else if (r < 0.3) {
        seeds[count++] = t * (1.0 - t);
    } else if (r > 3.0) {
        seeds[count++] = asymptotic_seed(t);
    } else {
        seeds[count++] = t.real() < 0.0 ? branch_point_seed(t) : std::log(1.0 + t);
    }
    // Fallbacks in case the primary seed drifts to a neighbouring branch.
    seeds[count++] = asymptotic_seed(t);
    seeds[count++] = branch_point_seed(t);

    LambertResult best;
    best.residual = HUGE_VAL;
    for (int i = 0; i < count; ++i) {
        LambertResult res = halley(t, seeds[i], max_iterations);
        const bool principal = in_principal_range(res.value);
        if (res.converged && principal) return res;
        if (principal && res.residual < best.residual) best = res;
    }
    if (best.residual == HUGE_VAL) best = halley(t, seeds[0], max_iterations);
    best.converged = false;
    return best;
}

Complex phi_inverse(Complex z, Complex eta, Complex lambda) {
    if (lambda == Complex{}) return z - eta;
    if (z == eta) throw std::domain_error("phi_inverse: z equals eta");
    const LambertResult w = lambert_w0(-lambda / (z - eta));
    if (!w.converged) throw std::runtime_error("phi_inverse: Lambert iteration did not converge");
    return -lambda / w.value;
}

PowerSeries w0_normalized_power_series(int j, int N) {
    if (N < 0) throw std::invalid_argument("w0_normalized_power_series: N must be non-negative");
    PowerSeries s(N);
    s[0] = 1.0;
    if (j == 0) return s;
    for (int m = 1; m <= N; ++m) {
        const int base = m + j;  // coefficient: -j (-base)^{m-1} / m!
        if (base == 0) {
            s[m] = m == 1 ? Complex(-static_cast<double>(j)) : Complex{};
            continue;
        }
        const double log_mag = std::log(std::abs(static_cast<double>(j))) +
                               (m - 1) * std::log(std::abs(static_cast<double>(base))) - std::lgamma(m + 1.0);
        // (-base)^{m-1} is negative only for odd m-1 with base > 0.
        double sign = j > 0 ? -1.0 : 1.0;
        if ((m - 1) % 2 == 1 && base > 0) sign = -sign;
        s[m] = sign * std::exp(log_mag);
    }
    return s;
}

PowerSeries w0_power_series(int j, int N) {
    if (j < 0) throw std::invalid_argument("w0_power_series: negative powers are not power series; use the normalised form");
    if (N < std::max(j, 1)) throw std::invalid_argument("w0_power_series: N must be >= max(j, 1)");
    const PowerSeries body = w0_normalized_power_series(j, N - j);
    return shift_up(PowerSeries(std::vector<Complex>(body.coeffs().begin(), body.coeffs().end()), N), j);
}

}  // namespace faber
