#pragma once

// Principal branch of the Lambert W function, the inverse of the
// exponential map built from it, and the power series of W0(t)^j.

#include <complex>
#include <stdexcept>

#include "faber/series.hpp"

namespace faber {

using Complex = std::complex<double>;

class BranchCutError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct LambertResult {
    Complex value;
    bool converged = false;
    int iterations = 0;
    double residual = 0.0;  // |W e^W - t|
};

/// Residual bound met by every converged LambertResult.
inline double lambert_tolerance(Complex t) { return 1e-12 * (1.0 + std::abs(t)); }

/**
 * W0(t) by Halley iteration.
 *
 * Throws BranchCutError when t lies on the open cut (-inf, -1/e) of the real
 * axis. W0(-1/e) = -1 is returned exactly.
 */
LambertResult lambert_w0(Complex t, int max_iterations = 60);

/// Phi(z) = -lambda / W0(-lambda / (z - eta)), the inverse of eta + w exp(lambda / w).
/// Throws BranchCutError, std::domain_error for z == eta, or std::runtime_error on non-convergence.
Complex phi_inverse(Complex z, Complex eta, Complex lambda);

/// W0(t)^j to order N for j >= 0; coefficient of t^k is -j (-k)^{k-j-1} / (k-j)! for k >= j.
/// Negative j has a pole at t = 0 and is served by w0_normalized_power_series instead.
PowerSeries w0_power_series(int j, int N);

/// (W0(t) / t)^j to order N, valid for every integer j. Coefficient of t^m is
/// -j (-(m+j))^{m-1} / m! with the constant term equal to 1.
PowerSeries w0_normalized_power_series(int j, int N);

}  // namespace faber
