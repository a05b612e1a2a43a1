#include "faber/faber.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "faber/lambert.hpp"
#include "faber/maps.hpp"

namespace faber {

Complex ExteriorMap::alpha(int k) const {
    if (k < 0) throw std::out_of_range("ExteriorMap::alpha: negative index");
    if (k == 0) return alpha0;
    if (k > truncation()) return {};
    return tail[static_cast<std::size_t>(k) - 1];
}

Complex psi_eval(const ExteriorMap& map, Complex w) {
    if (w == Complex{}) throw std::domain_error("psi_eval: w = 0");
    const Complex t = 1.0 / w;
    Complex acc{};
    for (int k = map.truncation(); k >= 1; --k) acc = (acc + map.alpha(k)) * t;
    return w + map.alpha0 + acc;
}

std::string_view to_string(FaberMethod method) {
    switch (method) {
        case FaberMethod::Recurrence: return "recurrence";
        case FaberMethod::ClosedForm: return "closed-form";
        case FaberMethod::OracleInterpolated: return "oracle-interpolated";
    }
    return "unknown";
}

FaberSystem generate_recurrence(const ExteriorMap& map, int N) {
    if (N < 0) throw std::invalid_argument("generate_recurrence: N must be non-negative");
    FaberSystem system{map, {}, FaberMethod::Recurrence};
    auto& F = system.polys;
    F.reserve(static_cast<std::size_t>(N) + 1);
    F.push_back(ComplexPolynomial::constant(1.0));
    if (N == 0) return system;

    const ComplexPolynomial linear({-map.alpha0, 1.0});  // z - a0
    F.push_back(linear);
    for (int j = 1; j < N; ++j) {
        ComplexPolynomial next = linear * F[static_cast<std::size_t>(j)];
        for (int k = 1; k <= std::min(j, map.truncation()); ++k)
            next -= map.alpha(k) * F[static_cast<std::size_t>(j - k)];
        next -= ComplexPolynomial::constant(static_cast<double>(j) * map.alpha(j));
        F.push_back(std::move(next));
    }
    return system;
}

PowerSeries normalized_difference_series(const ExteriorMap& map, Complex z, int order) {
    PowerSeries d(order);
    d[0] = 1.0;
    if (order >= 1) d[1] = map.alpha0 - z;
    for (int k = 1; k + 1 <= order && k <= map.truncation(); ++k) d[k + 1] = map.alpha(k);
    return d;
}

namespace {

int resolve_order(int N, int order) {
    const int resolved = order < 0 ? default_oracle_order(N) : order;
    if (resolved < N) throw std::invalid_argument("series order must be at least N");
    return resolved;
}

}  // namespace

std::vector<Complex> faber_values_oracle(const ExteriorMap& map, Complex z, int N, int order) {
    if (N < 1) throw std::invalid_argument("faber_values_oracle: N must be >= 1");
    const int n = resolve_order(N, order);
    const PowerSeries log_series = log1(normalized_difference_series(map, z, n));
    std::vector<Complex> values(static_cast<std::size_t>(N));
    for (int j = 1; j <= N; ++j) values[static_cast<std::size_t>(j) - 1] = -static_cast<double>(j) * log_series[j];
    return values;
}

std::vector<Complex> gf13_coeffs(const ExteriorMap& map, Complex z, int N, int order) {
    if (N < 0) throw std::invalid_argument("gf13_coeffs: N must be non-negative");
    const int n = resolve_order(N, order);
    // Psi'(w) w = w - sum_k k a_k w^{-k}; divided by w this is 1 - sum_k k a_k t^{k+1}.
    PowerSeries numerator = PowerSeries::one(n);
    for (int k = 1; k + 1 <= n && k <= map.truncation(); ++k) numerator[k + 1] = -static_cast<double>(k) * map.alpha(k);
    const PowerSeries ratio = mul(numerator, reciprocal(normalized_difference_series(map, z, n)));
    return {ratio.coeffs().begin(), ratio.coeffs().begin() + N + 1};
}

std::vector<Complex> gf16_coeffs(const ExteriorMap& map, Complex z, int N, int order) {
    if (N < 1) throw std::invalid_argument("gf16_coeffs: N must be >= 1");
    const int n = resolve_order(N, order);
    // 1/(Psi(w) - z) = t / ((Psi(w) - z)/w)
    const PowerSeries series = shift_up(reciprocal(normalized_difference_series(map, z, n)), 1);
    return {series.coeffs().begin(), series.coeffs().begin() + N + 1};
}

std::vector<ComplexPolynomial> kernel_polys(Complex lambda, int N) {
    if (N < 0) throw std::invalid_argument("kernel_polys: N must be non-negative");
    if (std::abs(lambda) > 1.0 + 1e-12) throw std::invalid_argument("kernel_polys: |lambda| must be <= 1");
    const FaberSystem F = generate_recurrence(to_exterior_map(ExpMap(0.0, lambda), std::max(N, 1)), N);
    std::vector<ComplexPolynomial> P;
    P.reserve(static_cast<std::size_t>(N) + 1);
    // P_j = lambda P_{j-1} + F_j
    ComplexPolynomial acc;
    for (int j = 0; j <= N; ++j) {
        acc = lambda * acc + F[j];
        P.push_back(acc);
    }
    return P;
}

std::vector<Complex> kernel_series_coeffs(Complex lambda, Complex z, int N) {
    if (N < 0) throw std::invalid_argument("kernel_series_coeffs: N must be non-negative");
    PowerSeries minus_lambda_t(N);
    if (N >= 1) minus_lambda_t[1] = -lambda;
    const PowerSeries g = shift_up(exp(minus_lambda_t), 1);  // t exp(-lambda t)
    const PowerSeries K = reciprocal(PowerSeries::one(N) - z * g);
    return {K.coeffs().begin(), K.coeffs().end()};
}

IdentityReport verify_derivative_identity(Complex lambda, int N, double tol) {
    const FaberSystem F = generate_recurrence(to_exterior_map(ExpMap(0.0, lambda), std::max(N, 1)), N);
    const auto P = kernel_polys(lambda, N);
    const ComplexPolynomial z({0.0, 1.0});
    IdentityReport report;
    report.tolerance = tol;
    for (int j = 0; j <= N; ++j) {
        const ComplexPolynomial lhs = z * derivative(F[j]);
        const ComplexPolynomial rhs = static_cast<double>(j) * P[static_cast<std::size_t>(j)];
        const double scale = 1.0 + std::max(lhs.max_abs_coeff(), rhs.max_abs_coeff());
        const double r = max_coeff_deviation(lhs, rhs) / scale;
        report.residuals.push_back(r);
        report.max_residual = std::max(report.max_residual, r);
    }
    report.pass = report.max_residual <= tol;
    return report;
}

namespace {

using ComplexL = std::complex<long double>;

// Phi(z)^j - F_j(z) cancels about |z|^j in magnitude, so both terms are formed in
// extended precision: Phi is polished by Newton on eta + w exp(lambda / w) = z and
// F_j(z) is run through the scalar recurrence.
ComplexL polish_phi(Complex z, Complex eta, Complex lambda, Complex w0) {
    const ComplexL zl(z), etal(eta), laml(lambda);
    ComplexL w(w0);
    for (int it = 0; it < 4; ++it) {
        const ComplexL e = std::exp(laml / w);
        const ComplexL f = etal + w * e - zl;
        const ComplexL df = e * (1.0L - laml / w);
        w -= f / df;
    }
    return w;
}

ComplexL expmap_faber_value(Complex z, Complex eta, Complex lambda, int j) {
    const ComplexL laml(lambda);
    std::vector<ComplexL> alpha(static_cast<std::size_t>(j) + 1);
    ComplexL term = laml;
    for (int k = 1; k <= j; ++k) {
        term *= laml / static_cast<long double>(k + 1);
        alpha[static_cast<std::size_t>(k)] = term;
    }
    const ComplexL shift = ComplexL(z) - ComplexL(eta) - laml;
    std::vector<ComplexL> f{1.0L};
    for (int i = 0; i < j; ++i) {
        ComplexL next = shift * f[static_cast<std::size_t>(i)] - static_cast<long double>(i) * alpha[static_cast<std::size_t>(i)];
        for (int k = 1; k <= i; ++k) next -= alpha[static_cast<std::size_t>(k)] * f[static_cast<std::size_t>(i - k)];
        f.push_back(next);
    }
    return f.back();
}

}  // namespace

DecayReport verify_eq9(Complex eta, Complex lambda, std::span<const Complex> z_samples, int j) {
    if (j < 0) throw std::invalid_argument("verify_eq9: j must be non-negative");
    DecayReport report;
    for (const Complex z : z_samples) {
        const Complex phi = phi_inverse(z, eta, lambda);
        if (!(std::abs(phi) > 1.0)) throw std::domain_error("verify_eq9: sample lies outside the image domain");
        report.radii.push_back(std::abs(z - eta));
        const ComplexL w = polish_phi(z, eta, lambda, phi);
        report.deviations.push_back(static_cast<double>(std::abs(std::pow(w, j) - expmap_faber_value(z, eta, lambda, j))));
    }
    report.pass = true;
    for (std::size_t i = 0; i + 1 < report.deviations.size(); ++i) {
        const double d0 = report.deviations[i];
        const double d1 = report.deviations[i + 1];
        if (d0 == 0.0 && d1 == 0.0) {
            report.ratios.push_back(0.0);
            continue;
        }
        const double ratio = d0 == 0.0 ? HUGE_VAL : d1 / d0;
        report.ratios.push_back(ratio);
        const double rho = report.radii[i] / report.radii[i + 1];
        if (!(ratio >= 0.5 * rho && ratio <= 2.0 * rho)) report.pass = false;
    }
    return report;
}

}  // namespace faber
