#pragma once

/**
 * @file faber.hpp
 * @brief Faber systems of exterior maps Psi(w) = w + a0 + sum_{k>=1} a_k w^{-k}.
 *
 * Three routes to the same polynomials live here:
 *  - generate_recurrence: the linear recurrence on whole polynomials,
 *  - faber_values_oracle: pointwise values from the logarithmic generating
 *    series log((Psi(w) - z) / w) in t = 1/w,
 *  - gf13_coeffs / gf16_coeffs: pointwise values of F_j(z) and F_j'(z)/j from
 *    the derivative generating series.
 * The oracle routes are series computations at a fixed z and share no code
 * with the recurrence.
 */

#include <complex>
#include <span>
#include <string_view>
#include <vector>

#include "faber/poly.hpp"
#include "faber/series.hpp"

namespace faber {

/// Psi(w) = w + alpha0 + sum_{k=1}^{M} tail[k-1] w^{-k}; coefficients past M are zero.
struct ExteriorMap {
    Complex alpha0{};
    std::vector<Complex> tail;

    [[nodiscard]] int truncation() const { return static_cast<int>(tail.size()); }
    /// alpha_k for k >= 0, zero past the truncation.
    [[nodiscard]] Complex alpha(int k) const;

    friend bool operator==(const ExteriorMap&, const ExteriorMap&) = default;
};

/// Psi evaluated from the truncated Laurent expansion.
Complex psi_eval(const ExteriorMap& map, Complex w);

enum class FaberMethod { Recurrence, ClosedForm, OracleInterpolated };

std::string_view to_string(FaberMethod method);

struct FaberSystem {
    ExteriorMap map;
    std::vector<ComplexPolynomial> polys;  // F_0 ... F_N
    FaberMethod method = FaberMethod::Recurrence;

    [[nodiscard]] int max_index() const { return static_cast<int>(polys.size()) - 1; }
    [[nodiscard]] const ComplexPolynomial& operator[](int j) const { return polys.at(static_cast<std::size_t>(j)); }
};

/// F_0 ... F_N from F_{j+1} = (z - a0) F_j - sum_{k=1}^{j} a_k F_{j-k} - j a_j.
FaberSystem generate_recurrence(const ExteriorMap& map, int N);

/// Series order used by the pointwise oracles when none is given.
constexpr int default_oracle_order(int N) { return 2 * N + 4; }

/// (Psi(w) - z) / w as a series in t = 1/w: 1 + (a0 - z) t + sum_k a_k t^{k+1}.
PowerSeries normalized_difference_series(const ExteriorMap& map, Complex z, int order);

/// (F_1(z), ..., F_N(z)) with F_j(z) = -j [t^j] log((Psi(w) - z) / w).
std::vector<Complex> faber_values_oracle(const ExteriorMap& map, Complex z, int N, int order = -1);

/// Coefficients 0..N of Psi'(w) w / (Psi(w) - z) in t = 1/w; entry j equals F_j(z).
std::vector<Complex> gf13_coeffs(const ExteriorMap& map, Complex z, int N, int order = -1);

/// Coefficients of 1 / (Psi(w) - z) in t = 1/w; entry j (1 <= j <= N) equals F_j'(z) / j.
/// Entry 0 is always zero and kept only so that indices match.
std::vector<Complex> gf16_coeffs(const ExteriorMap& map, Complex z, int N, int order = -1);

/// Per-index residuals of an identity check.
struct IdentityReport {
    std::vector<double> residuals;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// P_0 ... P_N with P_j = sum_{k=0}^{j} lambda^{j-k} F_k for Psi(w) = w exp(lambda / w).
std::vector<ComplexPolynomial> kernel_polys(Complex lambda, int N);

/// Coefficients 0..N of K(z, t) = 1 / (1 - z t exp(-lambda t)) computed as a series in t.
std::vector<Complex> kernel_series_coeffs(Complex lambda, Complex z, int N);

/// z F_j' against j P_j for the map w exp(lambda / w), j = 0..N.
/// Residual j is the coefficient deviation relative to 1 + max coefficient magnitude.
IdentityReport verify_derivative_identity(Complex lambda, int N, double tol);

struct DecayReport {
    std::vector<double> radii;
    std::vector<double> deviations;  // |Phi(z)^j - F_j(z)|
    std::vector<double> ratios;      // deviations[i+1] / deviations[i]
    bool pass = false;
};

/**
 * Polynomial-part check for the exponential map eta + w exp(lambda / w).
 *
 * Samples are visited in the given order; each consecutive pair must show
 * the O(1/|z|) decay of Phi(z)^j - F_j(z): the deviation ratio has to lie in
 * [0.5 rho, 2 rho] where rho = |z_i - eta| / |z_{i+1} - eta|. A sample whose
 * inverse value does not satisfy |Phi(z)| > 1 is rejected with
 * std::domain_error; branch-cut failures propagate from the Lambert solver.
 *
 * Both terms are evaluated in long double. The difference is only resolved
 * while |z - eta|^j * 1e-19 stays well below it, e.g. j = 5 up to |z| ~ 100.
 */
DecayReport verify_eq9(Complex eta, Complex lambda, std::span<const Complex> z_samples, int j);

}  // namespace faber
