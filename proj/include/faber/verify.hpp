#pragma once

// Common-root checkers for Faber systems. Every "vanishes" decision uses a
// tolerance relative to the coefficient scale of the polynomial involved,
// and every statement about an infinite tail is checked only up to the
// generated horizon, which the reports carry explicitly.

#include <optional>
#include <vector>

#include "faber/faber.hpp"
#include "faber/maps.hpp"

namespace faber {

struct CommonRootProfile {
    Complex z0;
    int horizon = 0;                        // N: last index inspected
    std::optional<int> first_nonvanishing;  // empty: none up to the horizon
    std::vector<double> values;             // |F_j(z0)|, j = 1..N
};

/// Scale used for zero tests on F_j(z0): 1 + max coefficient magnitude of F_j.
double vanishing_scale(const ComplexPolynomial& p);

CommonRootProfile leading_common_root_order(const FaberSystem& system, Complex z0, double tol);

struct GapCoefficientReport {
    int first_index = 0;  // n
    int last_index = 0;   // min(2n, N - 1)
    std::vector<double> residuals;  // |a_j + F_{j+1}(z0) / (j+1)|
    double max_residual = 0.0;
    bool bound_holds = false;  // |a_j| <= 2 / (j+1) on the checked range
    bool pass = false;
};

/// a_j = -F_{j+1}(z0) / (j+1) for j = n..min(2n, N-1), on the recurrence system.
GapCoefficientReport remark1_check(const GapMap& f, int N, double tol);

struct ExpPatternReport {
    Complex lambda;                 // a0 - z0
    bool distinct_point = false;    // z0 != a0
    bool pattern = false;           // F_1(z0) != 0, F_j(z0) = 0 for 2 <= j <= N
    bool tail_matches = false;      // a_j = lambda^{j+1} / (j+1)!
    double max_tail_deviation = 0.0;
    CommonRootProfile profile;
    [[nodiscard]] bool holds() const { return distinct_point && pattern && tail_matches; }
};

/// Both sides of the exponential-map characterisation at the point z0.
ExpPatternReport exp_pattern_report(const ExteriorMap& map, Complex z0, int N, double tol);

inline bool theorem3_characterization(const ExteriorMap& map, Complex z0, int N, double tol) {
    return exp_pattern_report(map, z0, N, tol).holds();
}

struct TwoGapProfile {
    std::vector<double> values;  // |F_j(z0)|, j = 1..n+1
    double max_vanishing = 0.0;  // largest relative |F_j(z0)| over j <= n, j != m+1
    double m1_deviation = 0.0;   // ||F_{m+1}(z0)| - (m+1)|a_m||
    bool n1_nonzero = false;     // |F_{n+1}(z0)| > 0; reported, not part of the verdict
    bool pass = false;
};

/// Root profile of a two-gap map: F_j(z0) vanishes for j <= n except j = m + 1.
/// The pattern requires n <= 2m + 1; beyond that F_{2m+2}(z0) = (m+1) a_m^2.
TwoGapProfile twogap_root_profile(const TwoGapMap& f, double tol);

}  // namespace faber
