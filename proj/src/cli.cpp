#include "faber/cli.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "faber/faber.hpp"
#include "faber/lambert.hpp"
#include "faber/sampling.hpp"
#include "faber/verify.hpp"

namespace faber::cli {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Adding +0.0 folds negative zero, which would otherwise leak into the output as "-0".
Json complex_json(Complex z) { return Json::array({z.real() + 0.0, z.imag() + 0.0}); }

Json poly_json(const ComplexPolynomial& p) {
    Json a = Json::array();
    for (const auto& c : p.coeffs()) a.push_back(complex_json(c));
    return a;
}

Json complex_list_json(std::span<const Complex> zs) {
    Json a = Json::array();
    for (const auto& z : zs) a.push_back(complex_json(z));
    return a;
}

std::string fmt(double x) {
    std::ostringstream os;
    os << std::setprecision(17) << x + 0.0;
    return os.str();
}

/// Evaluation scale 1 + sum_k |c_k| |z|^k: what a value of p at z is compared against.
double eval_scale(const ComplexPolynomial& p, Complex z) {
    const double r = std::abs(z);
    double acc = 0.0;
    const auto c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * r + std::abs(*it);
    return 1.0 + acc;
}

double rel_poly_deviation(const ComplexPolynomial& p, const ComplexPolynomial& q) {
    return max_coeff_deviation(p, q) / (1.0 + std::max(p.max_abs_coeff(), q.max_abs_coeff()));
}

struct SuiteOutcome {
    Json details = Json::object();
    double max_residual = 0.0;
    bool pass = true;
    bool nonconverged = false;
};

struct SuiteContext {
    const JobSpec& job;
    std::optional<MapFamily> family;

    [[nodiscard]] int N(int fallback) const { return job.N.value_or(fallback); }
    [[nodiscard]] double tol(double fallback) const { return job.tol.value_or(fallback); }
    [[nodiscard]] bool lambda_given() const { return job.map.lambda.has_value(); }
    [[nodiscard]] Complex lambda(Complex fallback) const { return job.map.lambda.value_or(fallback); }
    [[nodiscard]] Complex eta() const { return job.map.eta.value_or(0.0); }
};

// Maps under test: the one given on the command line, or a seeded random batch.
std::vector<ExteriorMap> maps_under_test(const SuiteContext& ctx, SampleRng& rng, int count, int N) {
    if (ctx.family) return {to_exterior_map(*ctx.family, std::max(N, min_truncation(*ctx.family)))};
    std::vector<ExteriorMap> maps;
    for (int i = 0; i < count; ++i) maps.push_back(random_exterior_map(rng, 30));
    return maps;
}

SuiteOutcome suite_recurrence_vs_oracle(const SuiteContext& ctx) {
    const int N = ctx.N(30);
    const double tol = ctx.tol(1e-9);
    SampleRng rng(ctx.job.seed);
    SuiteOutcome out;
    const auto maps = maps_under_test(ctx, rng, 50, N);
    Json per_map = Json::array();
    for (const auto& map : maps) {
        const FaberSystem F = generate_recurrence(map, N);
        double worst = 0.0;
        for (int s = 0; s < 20; ++s) {
            const Complex z = rng.in_disk(3.0);
            const auto oracle = faber_values_oracle(map, z, N);
            for (int j = 1; j <= N; ++j)
                worst = std::max(worst, std::abs(oracle[static_cast<std::size_t>(j) - 1] - eval(F[j], z)) / eval_scale(F[j], z));
        }
        per_map.push_back(worst);
        out.max_residual = std::max(out.max_residual, worst);
    }
    out.details["maps"] = static_cast<int>(maps.size());
    out.details["samples_per_map"] = 20;
    out.details["N"] = N;
    out.details["per_map_max_residual"] = per_map;
    out.pass = out.max_residual <= tol;
    return out;
}

SuiteOutcome suite_generating_function(const SuiteContext& ctx, bool derivative_form) {
    const int N = ctx.N(30);
    const double tol = ctx.tol(1e-9);
    SampleRng rng(ctx.job.seed);
    SuiteOutcome out;
    const int pairs = ctx.family ? 1 : 30;
    Json per_pair = Json::array();
    for (int i = 0; i < pairs; ++i) {
        const ExteriorMap map = maps_under_test(ctx, rng, 1, N).front();
        const Complex z = rng.in_disk(3.0);
        const FaberSystem F = generate_recurrence(map, N);
        double worst = 0.0;
        if (!derivative_form) {
            const auto g = gf13_coeffs(map, z, N);
            for (int j = 0; j <= N; ++j)
                worst = std::max(worst, std::abs(g[static_cast<std::size_t>(j)] - eval(F[j], z)) / eval_scale(F[j], z));
        } else {
            const auto g = gf16_coeffs(map, z, N);
            for (int j = 1; j <= N; ++j) {
                const ComplexPolynomial dF = derivative(F[j]) * Complex(1.0 / j);
                worst = std::max(worst, std::abs(g[static_cast<std::size_t>(j)] - eval(dF, z)) / eval_scale(dF, z));
            }
        }
        per_pair.push_back({{"z", complex_json(z)}, {"max_residual", worst}});
        out.max_residual = std::max(out.max_residual, worst);
    }
    out.details["N"] = N;
    out.details["pairs"] = per_pair;
    out.pass = out.max_residual <= tol;
    return out;
}

SuiteOutcome suite_derivative_identity(const SuiteContext& ctx) {
    const int N = ctx.N(20);
    const double tol = ctx.tol(1e-9);
    const Complex lambda = ctx.lambda(0.7);
    const IdentityReport r = verify_derivative_identity(lambda, N, tol);
    SuiteOutcome out;
    out.details["lambda"] = complex_json(lambda);
    out.details["N"] = N;
    out.details["residuals"] = r.residuals;
    out.max_residual = r.max_residual;
    out.pass = r.pass;
    return out;
}

SuiteOutcome suite_gap_roots(const SuiteContext& ctx) {
    const double tol = ctx.tol(1e-10);
    SampleRng rng(ctx.job.seed);
    std::vector<GapMap> maps;
    if (ctx.family && std::holds_alternative<GapMap>(*ctx.family)) {
        maps.push_back(std::get<GapMap>(*ctx.family));
    } else {
        for (int i = 0; i < 20; ++i) maps.push_back(random_gap_map(rng));
    }
    SuiteOutcome out;
    Json cases = Json::array();
    for (const auto& g : maps) {
        const int N = std::max(ctx.N(0), 2 * g.n() + 2);
        const FaberSystem F = generate_recurrence(to_exterior_map(g, std::max(N, g.max_index())), N);
        const CommonRootProfile profile = leading_common_root_order(F, g.z0(), tol);
        const double predicted = (g.n() + 1) * std::abs(g.alpha(g.n()));
        const double value = profile.values[static_cast<std::size_t>(g.n())];
        const double identity = std::abs(value - predicted) / (1.0 + predicted);
        const GapCoefficientReport remark = remark1_check(g, N, tol);
        bool closed_ok = true;
        for (int j = 0; j <= g.n() + 1; ++j) closed_ok = closed_ok && equal_within(gap_faber_closed(g, j), F[j], 1e-9);
        const bool ok = profile.first_nonvanishing == g.n() + 1 && identity <= tol && remark.pass && remark.bound_holds && closed_ok;
        cases.push_back({{"n", g.n()},
                         {"z0", complex_json(g.z0())},
                         {"first_nonvanishing", profile.first_nonvanishing.value_or(0)},
                         {"horizon", profile.horizon},
                         {"coefficient_identity_max_residual", remark.max_residual},
                         {"pass", ok}});
        out.max_residual = std::max({out.max_residual, identity, remark.max_residual});
        out.pass = out.pass && ok;
    }
    out.details["cases"] = cases;
    return out;
}

SuiteOutcome suite_twogap_roots(const SuiteContext& ctx) {
    const double tol = ctx.tol(1e-10);
    SampleRng rng(ctx.job.seed);
    std::vector<TwoGapMap> maps;
    if (ctx.family && std::holds_alternative<TwoGapMap>(*ctx.family)) {
        maps.push_back(std::get<TwoGapMap>(*ctx.family));
    } else {
        for (int i = 0; i < 20; ++i) maps.push_back(random_twogap_map(rng));
    }
    SuiteOutcome out;
    Json cases = Json::array();
    for (const auto& g : maps) {
        const int N = std::max(ctx.N(24), g.n() + 1);
        const FaberSystem closed = twogap_faber(g, N);
        const FaberSystem rec = generate_recurrence(to_exterior_map(g, std::max(N, g.max_index())), N);
        double dev = 0.0;
        for (int j = 0; j <= N; ++j) dev = std::max(dev, rel_poly_deviation(closed[j], rec[j]));
        const TwoGapProfile profile = twogap_root_profile(g, tol);
        const bool ok = dev <= 1e-9 && profile.pass;
        cases.push_back({{"m", g.m()},
                         {"n", g.n()},
                         {"closed_form_deviation", dev},
                         {"max_vanishing", profile.max_vanishing},
                         {"m1_deviation", profile.m1_deviation},
                         {"pass", ok}});
        out.max_residual = std::max({out.max_residual, dev, profile.max_vanishing});
        out.pass = out.pass && ok;
    }
    out.details["cases"] = cases;
    return out;
}

SuiteOutcome suite_exp_pattern(const SuiteContext& ctx) {
    const int N = ctx.N(20);
    const double tol = ctx.tol(1e-10);
    const Complex eta = ctx.eta();
    const Complex lambda = ctx.lambda(0.5);
    SuiteOutcome out;
    if (lambda == Complex{}) throw std::invalid_argument("exponential-map pattern suite needs lambda != 0");

    const ExteriorMap map = to_exterior_map(ExpMap(eta, lambda), N);
    const FaberSystem F = generate_recurrence(map, N);
    double tail_zero = 0.0;
    for (int j = 2; j <= N; ++j) tail_zero = std::max(tail_zero, std::abs(eval(F[j], eta)));
    const double f1 = std::abs(eval(F[1], eta));
    const bool characterized = theorem3_characterization(map, eta, N, tol);

    // Any perturbed tail coefficient that reaches F_1..F_N must break both the pattern and the characterisation.
    bool perturbations_detected = true;
    double weakest_break = HUGE_VAL;
    for (int k = 1; k <= N - 1; ++k) {
        ExteriorMap perturbed = map;
        perturbed.tail[static_cast<std::size_t>(k) - 1] += 1e-3;
        const FaberSystem G = generate_recurrence(perturbed, N);
        double largest = 0.0;
        for (int j = 2; j <= N; ++j) largest = std::max(largest, std::abs(eval(G[j], eta)));
        weakest_break = std::min(weakest_break, largest);
        if (!(largest > 1e-4) || theorem3_characterization(perturbed, eta, N, tol)) perturbations_detected = false;
    }
    const bool hypocycloid_rejected = !theorem3_characterization(to_exterior_map(Hypocycloid(1), N), eta, N, tol);

    out.details["eta"] = complex_json(eta);
    out.details["lambda"] = complex_json(lambda);
    out.details["abs_F1"] = f1;
    out.details["max_abs_Fj_2_to_N"] = tail_zero;
    out.details["characterized"] = characterized;
    out.details["weakest_perturbation_break"] = weakest_break;
    out.details["perturbations_detected"] = perturbations_detected;
    out.details["hypocycloid_rejected"] = hypocycloid_rejected;
    out.max_residual = std::max(tail_zero, std::abs(f1 - std::abs(lambda)));
    out.pass = out.max_residual <= tol && characterized && perturbations_detected && hypocycloid_rejected;
    return out;
}

SuiteOutcome suite_exp_closed(const SuiteContext& ctx) {
    const int N = ctx.N(20);
    const double tol = ctx.tol(1e-9);
    const Complex eta = ctx.eta();
    std::vector<Complex> lambdas;
    if (ctx.lambda_given()) {
        lambdas.push_back(ctx.lambda(0.0));
    } else {
        for (const double r : {0.0, 0.3, 0.7, 1.0})
            for (int p = 0; p < 8; ++p) lambdas.push_back(std::polar(r, kTwoPi * p / 8));
    }
    SuiteOutcome out;
    for (const Complex lambda : lambdas) {
        const FaberSystem F = generate_recurrence(to_exterior_map(ExpMap(eta, lambda), N), N);
        for (int j = 1; j <= N; ++j) {
            out.max_residual = std::max({out.max_residual, rel_poly_deviation(expmap_faber_closed(eta, lambda, j), F[j]),
                                         rel_poly_deviation(expmap_faber_from_w0_series(eta, lambda, j), F[j])});
        }
    }
    out.details["N"] = N;
    out.details["lambdas"] = complex_list_json(lambdas);
    out.pass = out.max_residual <= tol;
    return out;
}

SuiteOutcome suite_kernel(const SuiteContext& ctx) {
    const int N = ctx.N(15);
    const double tol = ctx.tol(1e-8);
    const Complex lambda = ctx.lambda(0.5);
    const auto P = kernel_polys(lambda, N);
    SuiteOutcome out;
    for (int i = 0; i < 20; ++i) {
        const Complex z = 0.5 * gamma_boundary(lambda, kTwoPi * i / 20);
        const auto K = kernel_series_coeffs(lambda, z, N);
        for (int j = 0; j <= N; ++j)
            out.max_residual = std::max(out.max_residual, std::abs(K[static_cast<std::size_t>(j)] - eval(P[static_cast<std::size_t>(j)], z)) /
                                                              eval_scale(P[static_cast<std::size_t>(j)], z));
    }
    out.details["lambda"] = complex_json(lambda);
    out.details["N"] = N;
    out.pass = out.max_residual <= tol;
    return out;
}

SuiteOutcome suite_polynomial_part(const SuiteContext& ctx) {
    const Complex eta = ctx.eta();
    const Complex lambda = ctx.lambda(0.5);
    const int j = ctx.N(5);
    SuiteOutcome out;
    Json rays = Json::array();
    for (int r = 0; r < 4; ++r) {
        const Complex dir = std::polar(1.0, kTwoPi * r / 4 + 0.3);
        std::vector<Complex> samples;
        for (const double r : {10.0, 100.0}) samples.push_back(eta + r * dir);
        const DecayReport rep = verify_eq9(eta, lambda, samples, j);
        rays.push_back({{"deviations", rep.deviations}, {"ratios", rep.ratios}, {"pass", rep.pass}});
        out.pass = out.pass && rep.pass;
        for (const double d : rep.deviations) out.max_residual = std::max(out.max_residual, d);
    }
    out.details["j"] = j;
    out.details["rays"] = rays;
    return out;
}

SuiteOutcome suite_chebyshev(const SuiteContext& ctx) {
    const int N = ctx.N(24);
    const double tol = ctx.tol(1e-12);
    SuiteOutcome out;
    Json dev = Json::array();
    for (int j = 1; j <= N; ++j) {
        const double d = rel_poly_deviation(hypocycloid_faber_closed(1, j), chebyshev_scaled(j));
        dev.push_back(d);
        out.max_residual = std::max(out.max_residual, d);
    }
    out.details["deviations"] = dev;
    out.pass = out.max_residual <= tol;
    return out;
}

std::vector<int> hypocycloid_orders(const SuiteContext& ctx) {
    if (ctx.family && std::holds_alternative<Hypocycloid>(*ctx.family)) return {std::get<Hypocycloid>(*ctx.family).m()};
    return {1, 2, 3, 4};
}

SuiteOutcome suite_he_formula(const SuiteContext& ctx) {
    const int N = ctx.N(24);
    const double tol = ctx.tol(1e-9);
    SuiteOutcome out;
    Json per_m = Json::object();
    for (const int m : hypocycloid_orders(ctx)) {
        const FaberSystem F = generate_recurrence(to_exterior_map(Hypocycloid(m), std::max(N, m)), N);
        double worst = 0.0;
        for (int j = 1; j <= N; ++j) worst = std::max(worst, rel_poly_deviation(hypocycloid_faber_closed(m, j), F[j]));
        per_m[std::to_string(m)] = worst;
        out.max_residual = std::max(out.max_residual, worst);
    }
    out.details["N"] = N;
    out.details["max_deviation_by_m"] = per_m;
    out.pass = out.max_residual <= tol;
    return out;
}

SuiteOutcome suite_lambert(const SuiteContext& ctx) {
    const double tol = ctx.tol(1e-12);
    const Complex lambda = ctx.lambda(0.8);
    SuiteOutcome out;

    // 40 x 25 grid on [-5, 5] x [-5, 5], shifted off the real axis.
    double grid_worst = 0.0;
    int unconverged = 0;
    for (int a = 0; a < 40; ++a) {
        for (int b = 0; b < 25; ++b) {
            const Complex t(-5.0 + 10.0 * a / 39.0, -5.0 + 10.0 * b / 24.0 + 0.013);
            const LambertResult w = lambert_w0(t);
            if (!w.converged) ++unconverged;
            grid_worst = std::max(grid_worst, w.residual / (1.0 + std::abs(t)));
        }
    }

    SampleRng rng(ctx.job.seed);
    double roundtrip = 0.0;
    for (int i = 0; i < 100; ++i) {
        const Complex w = std::polar(rng.uniform(1.1, 10.0), kTwoPi * rng.uniform());
        const Complex z = psi_eval(MapFamily{ExpMap(0.0, lambda)}, w);
        roundtrip = std::max(roundtrip, std::abs(phi_inverse(z, 0.0, lambda) - w));
    }

    const PowerSeries w0 = w0_power_series(1, 20);
    double series_dev = 0.0;
    for (int p = 0; p < 16; ++p) {
        const Complex t = std::polar(0.1, kTwoPi * p / 16);
        series_dev = std::max(series_dev, std::abs(w0.sum_at(t) - lambert_w0(t).value));
    }

    out.details["grid_points"] = 1000;
    out.details["grid_max_relative_residual"] = grid_worst;
    out.details["grid_unconverged"] = unconverged;
    out.details["roundtrip_max_error"] = roundtrip;
    out.details["series_max_error"] = series_dev;
    out.max_residual = std::max({grid_worst, roundtrip, series_dev});
    out.nonconverged = unconverged > 0;
    out.pass = grid_worst <= tol && roundtrip <= 1e-10 && series_dev <= 1e-10 && unconverged == 0;
    return out;
}

SuiteOutcome suite_rays(const SuiteContext& ctx) {
    const int N = ctx.N(24);
    const double angle_tol = ctx.tol(1e-6);
    SuiteOutcome out;
    double worst_angle = 0.0;
    double worst_residual = 0.0;
    int unconverged = 0;
    for (const int m : hypocycloid_orders(ctx)) {
        for (int j = 1; j <= N; ++j) {
            const RootResult r = roots(hypocycloid_faber_closed(m, j));
            if (!r.converged) ++unconverged;
            worst_residual = std::max(worst_residual, r.max_residual);
            for (const Complex root : r.roots) {
                if (std::abs(root) <= 1e-8) continue;
                double best = HUGE_VAL;
                for (int k = 0; k <= m; ++k)
                    best = std::min(best, std::abs(std::remainder(std::arg(root) - kTwoPi * k / (m + 1), kTwoPi)));
                worst_angle = std::max(worst_angle, best);
            }
        }
    }
    out.details["max_angle_deviation"] = worst_angle;
    out.details["max_residual"] = worst_residual;
    out.details["unconverged"] = unconverged;
    out.max_residual = worst_angle;
    out.nonconverged = unconverged > 0;
    out.pass = worst_angle <= angle_tol && worst_residual <= 1e-8 && unconverged == 0;
    return out;
}

using SuiteFn = std::function<SuiteOutcome(const SuiteContext&)>;

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
    static const std::vector<std::pair<std::string, SuiteFn>> table = {
        {"recurrence-vs-oracle", suite_recurrence_vs_oracle},
        {"eq13", [](const SuiteContext& c) { return suite_generating_function(c, false); }},
        {"eq14", suite_derivative_identity},
        {"eq16", [](const SuiteContext& c) { return suite_generating_function(c, true); }},
        {"theorem1", suite_gap_roots},
        {"theorem2", suite_twogap_roots},
        {"theorem3", suite_exp_pattern},
        {"exp-closed", suite_exp_closed},
        {"kernel", suite_kernel},
        {"polynomial-part", suite_polynomial_part},
        {"chebyshev", suite_chebyshev},
        {"he-formula", suite_he_formula},
        {"lambert", suite_lambert},
        {"rays", suite_rays},
    };
    return table;
}

Json envelope(const JobSpec& job, int N) {
    Json j;
    j["command"] = job.command;
    j["map"] = map_to_json(job.map);
    j["N"] = N;
    return j;
}

void write_error(std::ostream& err, const std::string& kind, const std::string& message) {
    err << Json{{"error", kind}, {"message", message}}.dump() << '\n';
}

std::optional<MapFamily> optional_family(const MapSpec& spec) {
    if (spec.family.empty()) return std::nullopt;
    return build_family(spec);
}

MapFamily required_family(const MapSpec& spec) {
    if (spec.family.empty()) throw std::invalid_argument("a map family is required (--family)");
    return build_family(spec);
}

void write_poly_csv(std::ostream& out, const std::vector<ComplexPolynomial>& polys) {
    int width = 0;
    for (const auto& p : polys) width = std::max(width, p.degree() + 1);
    out << "j";
    for (int k = 0; k < width; ++k) out << ",re_" << k << ",im_" << k;
    out << '\n';
    for (std::size_t j = 0; j < polys.size(); ++j) {
        out << j;
        for (int k = 0; k < width; ++k) out << ',' << fmt(polys[j][k].real()) << ',' << fmt(polys[j][k].imag());
        out << '\n';
    }
}

std::vector<ComplexPolynomial> closed_form_system(const MapFamily& f, int N) {
    std::vector<ComplexPolynomial> polys;
    if (const auto* g = std::get_if<TwoGapMap>(&f)) return twogap_faber(*g, N).polys;
    for (int j = 0; j <= N; ++j) {
        if (const auto* s = std::get_if<ShiftMap>(&f)) polys.push_back(ComplexPolynomial::shifted_power(s->alpha0, j));
        else if (const auto* g = std::get_if<GapMap>(&f)) polys.push_back(gap_faber_closed(*g, j));
        else if (const auto* h = std::get_if<Hypocycloid>(&f))
            polys.push_back(j == 0 ? ComplexPolynomial::constant(1.0) : hypocycloid_faber_closed(h->m(), j));
        else if (const auto* e = std::get_if<ExpMap>(&f)) polys.push_back(expmap_faber_closed(e->eta, e->lambda, j));
    }
    return polys;
}

int run_gen(const JobSpec& job, std::ostream& out) {
    const MapFamily f = required_family(job.map);
    const int N = job.N.value_or(10);
    std::vector<ComplexPolynomial> polys;
    std::string method;
    if (job.method == "recurrence") {
        polys = generate_recurrence(to_exterior_map(f, std::max(N, min_truncation(f))), N).polys;
        method = std::string(to_string(FaberMethod::Recurrence));
    } else if (job.method == "closed") {
        polys = closed_form_system(f, N);
        method = std::string(to_string(FaberMethod::ClosedForm));
    } else {
        throw std::invalid_argument("unknown method: " + job.method);
    }
    if (job.format == "csv") {
        write_poly_csv(out, polys);
        return kExitPass;
    }
    Json j = envelope(job, N);
    Json list = Json::array();
    for (const auto& p : polys) list.push_back(poly_json(p));
    j["results"] = {{"method", method}, {"polys", list}};
    j["residuals"] = Json::object();
    j["pass"] = true;
    out << j.dump(2) << '\n';
    return kExitPass;
}

int run_kernel(const JobSpec& job, std::ostream& out) {
    const Complex lambda = job.map.lambda.value_or(0.0);
    const int N = job.N.value_or(10);
    const auto P = kernel_polys(lambda, N);
    if (job.format == "csv") {
        write_poly_csv(out, P);
        return kExitPass;
    }
    Json j = envelope(job, N);
    Json list = Json::array();
    for (const auto& p : P) list.push_back(poly_json(p));
    j["results"] = {{"lambda", complex_json(lambda)}, {"polys", list}};
    j["residuals"] = Json::object();
    j["pass"] = true;
    out << j.dump(2) << '\n';
    return kExitPass;
}

int run_boundary(const JobSpec& job, std::ostream& out) {
    const Complex lambda = job.map.lambda.value_or(0.0);
    std::vector<double> thetas;
    if (job.theta) {
        thetas.push_back(*job.theta);
    } else {
        if (job.samples < 1) throw std::invalid_argument("--samples must be >= 1");
        for (int i = 0; i < job.samples; ++i) thetas.push_back(kTwoPi * i / job.samples);
    }
    std::vector<Complex> points;
    for (const double th : thetas) points.push_back(gamma_boundary(lambda, th));
    if (job.format == "csv") {
        out << "theta,re,im\n";
        for (std::size_t i = 0; i < points.size(); ++i)
            out << fmt(thetas[i]) << ',' << fmt(points[i].real()) << ',' << fmt(points[i].imag()) << '\n';
        return kExitPass;
    }
    Json j = envelope(job, static_cast<int>(points.size()));
    j["results"] = {{"lambda", complex_json(lambda)}, {"theta", thetas}, {"points", complex_list_json(points)}};
    j["residuals"] = Json::object();
    j["pass"] = true;
    out << j.dump(2) << '\n';
    return kExitPass;
}

int run_roots(const JobSpec& job, std::ostream& out) {
    const MapFamily f = required_family(job.map);
    const int N = job.N.value_or(10);
    const int lo = job.j_min.value_or(1);
    const int hi = job.j_max.value_or(N);
    if (lo < 1 || hi < lo || hi > N) throw std::invalid_argument("root range must satisfy 1 <= j-min <= j-max <= N");
    const FaberSystem F = generate_recurrence(to_exterior_map(f, std::max(N, min_truncation(f))), N);
    Json list = Json::array();
    bool all_converged = true;
    double worst = 0.0;
    std::ostringstream csv;
    csv << "j,index,re,im\n";
    for (int jj = lo; jj <= hi; ++jj) {
        const RootResult r = roots(F[jj]);
        all_converged = all_converged && r.converged;
        worst = std::max(worst, r.max_residual);
        list.push_back({{"j", jj},
                        {"roots", complex_list_json(r.roots)},
                        {"converged", r.converged},
                        {"iterations", r.iterations},
                        {"max_residual", r.max_residual}});
        for (std::size_t i = 0; i < r.roots.size(); ++i)
            csv << jj << ',' << i << ',' << fmt(r.roots[i].real()) << ',' << fmt(r.roots[i].imag()) << '\n';
    }
    if (job.format == "csv") {
        out << csv.str();
    } else {
        Json j = envelope(job, N);
        j["results"] = list;
        j["residuals"] = {{"roots", worst}};
        j["pass"] = all_converged;
        out << j.dump(2) << '\n';
    }
    return all_converged ? kExitPass : kExitNonConvergence;
}

int run_verify(const JobSpec& job, std::ostream& out) {
    SuiteContext ctx{job, optional_family(job.map)};
    std::vector<std::string> selected;
    if (job.suite == "all") {
        for (const auto& [name, fn] : suite_table()) selected.push_back(name);
    } else {
        const auto& names = suite_names();
        if (std::find(names.begin(), names.end(), job.suite) == names.end())
            throw std::invalid_argument("unknown suite: " + job.suite);
        selected.push_back(job.suite);
    }
    Json results = Json::object();
    Json residuals = Json::object();
    bool pass = true;
    bool nonconverged = false;
    for (const auto& name : selected) {
        const auto& table = suite_table();
        const auto it = std::find_if(table.begin(), table.end(), [&](const auto& e) { return e.first == name; });
        SuiteOutcome o = it->second(ctx);
        o.details["pass"] = o.pass;
        results[name] = o.details;
        residuals[name] = o.max_residual;
        pass = pass && o.pass;
        nonconverged = nonconverged || o.nonconverged;
    }
    if (job.format == "csv") {
        out << "suite,max_residual,pass\n";
        for (const auto& name : selected)
            out << name << ',' << fmt(residuals[name].get<double>()) << ',' << (results[name]["pass"].get<bool>() ? "true" : "false")
                << '\n';
    } else {
        Json j = envelope(job, job.N.value_or(0));
        j["results"] = results;
        j["residuals"] = residuals;
        j["pass"] = pass;
        out << j.dump(2) << '\n';
    }
    if (nonconverged) return kExitNonConvergence;
    return pass ? kExitPass : kExitCheckFailure;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, fn] : suite_table()) v.push_back(name);
        v.emplace_back("all");
        return v;
    }();
    return names;
}

Complex parse_complex(const std::string& text) {
    const auto comma = text.find(',');
    auto parse_real = [&](const std::string& s) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("not a number: '" + text + "'");
        }
        if (used != s.size() || !std::isfinite(v)) throw std::invalid_argument("not a number: '" + text + "'");
        return v;
    };
    if (comma == std::string::npos) return {parse_real(text), 0.0};
    return {parse_real(text.substr(0, comma)), parse_real(text.substr(comma + 1))};
}

MapFamily build_family(const MapSpec& spec) {
    const std::string& f = spec.family;
    if (f == "shift") return ShiftMap{spec.alpha0};
    if (f == "gap") return GapMap(spec.z0, spec.n, spec.tail);
    if (f == "twogap") return TwoGapMap(spec.z0, spec.m, spec.alpha_m, spec.n, spec.tail);
    if (f == "hypocycloid") return Hypocycloid(spec.m);
    if (f == "exp") return ExpMap(spec.eta.value_or(0.0), spec.lambda.value_or(0.0));
    throw std::invalid_argument("unknown map family: '" + f + "'");
}

Json map_to_json(const MapSpec& spec) {
    const std::string& f = spec.family;
    if (f.empty()) return nullptr;
    Json j;
    j["family"] = f;
    if (f == "shift") {
        j["alpha0"] = complex_json(spec.alpha0);
    } else if (f == "gap") {
        j["z0"] = complex_json(spec.z0);
        j["n"] = spec.n;
        j["tail"] = complex_list_json(spec.tail);
    } else if (f == "twogap") {
        j["z0"] = complex_json(spec.z0);
        j["m"] = spec.m;
        j["alpha_m"] = complex_json(spec.alpha_m);
        j["n"] = spec.n;
        j["tail"] = complex_list_json(spec.tail);
    } else if (f == "hypocycloid") {
        j["m"] = spec.m;
    } else if (f == "exp") {
        j["eta"] = complex_json(spec.eta.value_or(0.0));
        j["lambda"] = complex_json(spec.lambda.value_or(0.0));
    }
    return j;
}

int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
    try {
        if (job.format != "json" && job.format != "csv") throw std::invalid_argument("format must be json or csv");
        if (job.N && *job.N < 0) throw std::invalid_argument("N must be non-negative");
        if (job.command == "gen") return run_gen(job, out);
        if (job.command == "verify") return run_verify(job, out);
        if (job.command == "roots") return run_roots(job, out);
        if (job.command == "boundary") return run_boundary(job, out);
        if (job.command == "kernel") return run_kernel(job, out);
        throw std::invalid_argument("unknown command: '" + job.command + "'");
    } catch (const BranchCutError& e) {
        write_error(err, "numerical", e.what());
        return kExitNonConvergence;
    } catch (const std::invalid_argument& e) {
        write_error(err, "usage", e.what());
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        write_error(err, "usage", e.what());
        return kExitUsage;
    } catch (const std::domain_error& e) {
        write_error(err, "domain", e.what());
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        write_error(err, "numerical", e.what());
        return kExitNonConvergence;
    }
}

}  // namespace faber::cli
