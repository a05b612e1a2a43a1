#include "faber/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace faber {

double vanishing_scale(const ComplexPolynomial& p) { return 1.0 + p.max_abs_coeff(); }

CommonRootProfile leading_common_root_order(const FaberSystem& system, Complex z0, double tol) {
    const int N = system.max_index();
    if (N < 2) throw std::invalid_argument("leading_common_root_order: need F_0 ... F_N with N >= 2");
    CommonRootProfile profile;
    profile.z0 = z0;
    profile.horizon = N;
    for (int j = 1; j <= N; ++j) {
        const double v = std::abs(eval(system[j], z0));
        profile.values.push_back(v);
        if (!profile.first_nonvanishing && v > tol * vanishing_scale(system[j])) profile.first_nonvanishing = j;
    }
    return profile;
}

GapCoefficientReport remark1_check(const GapMap& f, int N, double tol) {
    const int n = f.n();
    GapCoefficientReport report;
    report.first_index = n;
    report.last_index = std::min(2 * n, N - 1);
    if (report.last_index < n) throw std::invalid_argument("remark1_check: N must exceed n");
    const FaberSystem system = generate_recurrence(to_exterior_map(f, std::max(f.max_index(), N)), N);
    report.bound_holds = true;
    for (int j = n; j <= report.last_index; ++j) {
        const Complex predicted = -eval(system[j + 1], f.z0()) / static_cast<double>(j + 1);
        const double r = std::abs(f.alpha(j) - predicted);
        report.residuals.push_back(r);
        report.max_residual = std::max(report.max_residual, r);
        if (std::abs(f.alpha(j)) > 2.0 / (j + 1)) report.bound_holds = false;
    }
    report.pass = report.max_residual <= tol;
    return report;
}

ExpPatternReport exp_pattern_report(const ExteriorMap& map, Complex z0, int N, double tol) {
    if (N < 3) throw std::invalid_argument("exp_pattern_report: N must be >= 3");
    ExpPatternReport report;
    report.lambda = map.alpha0 - z0;
    report.distinct_point = std::abs(report.lambda) > tol;

    const FaberSystem system = generate_recurrence(map, N);
    report.profile = leading_common_root_order(system, z0, tol);
    report.pattern = report.profile.first_nonvanishing == 1;
    for (int j = 2; j <= N && report.pattern; ++j)
        if (report.profile.values[static_cast<std::size_t>(j) - 1] > tol * vanishing_scale(system[j])) report.pattern = false;

    // a_j = lambda^{j+1} / (j+1)!
    Complex expected = report.lambda;
    for (int j = 1; j <= map.truncation(); ++j) {
        expected *= report.lambda / static_cast<double>(j + 1);
        report.max_tail_deviation = std::max(report.max_tail_deviation, std::abs(map.alpha(j) - expected));
    }
    report.tail_matches = report.max_tail_deviation <= tol;
    return report;
}

TwoGapProfile twogap_root_profile(const TwoGapMap& f, double tol) {
    const int m = f.m();
    const int n = f.n();
    const FaberSystem system = generate_recurrence(to_exterior_map(f, std::max(f.max_index(), n + 1)), n + 1);
    TwoGapProfile report;
    for (int j = 1; j <= n + 1; ++j) {
        const double v = std::abs(eval(system[j], f.z0()));
        report.values.push_back(v);
        if (j <= n && j != m + 1) report.max_vanishing = std::max(report.max_vanishing, v / vanishing_scale(system[j]));
    }
    report.m1_deviation =
        std::abs(report.values[static_cast<std::size_t>(m)] - static_cast<double>(m + 1) * std::abs(f.alpha_m()));
    report.n1_nonzero = report.values[static_cast<std::size_t>(n)] > tol * vanishing_scale(system[n + 1]);
    report.pass = report.max_vanishing <= tol && report.m1_deviation <= tol * (1.0 + (m + 1) * std::abs(f.alpha_m()));
    return report;
}

}  // namespace faber
