// faber_cli: generate and check Faber polynomials of exterior maps.
//
//   faber_cli gen --family exp --eta 0 --lambda 0.5 --N 10
//   faber_cli verify --suite all --seed 7
//   faber_cli roots --family hypocycloid --m 2 --N 12
//   faber_cli boundary --lambda 1 --samples 256 --format csv
//   faber_cli kernel --lambda 0.7 --N 8

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "faber/cli.hpp"

namespace {

struct RawArgs {
    std::string family;
    std::string alpha0 = "0";
    std::string z0 = "0";
    std::optional<std::string> eta;
    std::optional<std::string> lambda;
    std::string alpha_m = "0";
    std::vector<std::string> tail;
    std::string out;
};

void add_common_options(CLI::App* sub, faber::cli::JobSpec& job, RawArgs& raw) {
    sub->add_option("--family", raw.family, "Map family: shift, gap, twogap, hypocycloid, exp")
        ->check(CLI::IsMember({"shift", "gap", "twogap", "hypocycloid", "exp"}));
    sub->add_option("--alpha0", raw.alpha0, "Constant term of the shift map (re or re,im)");
    sub->add_option("--z0", raw.z0, "Common root point of gap and two-gap maps");
    sub->add_option("--eta", raw.eta, "Centre of the exponential map");
    sub->add_option("--lambda", raw.lambda, "Scale of the exponential map");
    sub->add_option("--alpha-m", raw.alpha_m, "Isolated coefficient a_m of a two-gap map");
    sub->add_option("--m", job.map.m, "Hypocycloid order or two-gap isolated index");
    sub->add_option("--n", job.map.n, "Gap index");
    sub->add_option("--tail", raw.tail, "Tail coefficients a_n, a_{n+1}, ... (repeatable)");
    sub->add_option("-N,--N", job.N, "Highest Faber index");
    sub->add_option("--format", job.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--seed", job.seed, "Seed for randomised checks");
    sub->add_option("--tol", job.tol, "Override the check tolerance");
    sub->add_option("--out", raw.out, "Write results to this file instead of stdout");
}

void error_record(const std::string& kind, const std::string& message) {
    std::cerr << faber::cli::Json{{"error", kind}, {"message", message}}.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Faber polynomials of exterior maps"};
    app.require_subcommand(1);

    faber::cli::JobSpec job;
    RawArgs raw;

    auto* gen = app.add_subcommand("gen", "Generate F_0 ... F_N");
    add_common_options(gen, job, raw);
    gen->add_option("--method", job.method, "recurrence or closed")->check(CLI::IsMember({"recurrence", "closed"}));

    auto* verify = app.add_subcommand("verify", "Run numerical checks");
    add_common_options(verify, job, raw);
    verify->add_option("--suite", job.suite, "Check suite")->check(CLI::IsMember(faber::cli::suite_names()));

    auto* roots = app.add_subcommand("roots", "Zeros of F_j");
    add_common_options(roots, job, raw);
    roots->add_option("--j-min", job.j_min, "First index");
    roots->add_option("--j-max", job.j_max, "Last index");

    auto* boundary = app.add_subcommand("boundary", "Sample the boundary curve of the exponential map");
    add_common_options(boundary, job, raw);
    boundary->add_option("--theta", job.theta, "Single angle");
    boundary->add_option("--samples", job.samples, "Number of equally spaced angles");

    auto* kernel = app.add_subcommand("kernel", "Kernel polynomials P_0 ... P_N");
    add_common_options(kernel, job, raw);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        error_record("usage", e.what());
        return faber::cli::kExitUsage;
    }

    job.command = app.get_subcommands().front()->get_name();
    try {
        job.map.family = raw.family;
        job.map.alpha0 = faber::cli::parse_complex(raw.alpha0);
        job.map.z0 = faber::cli::parse_complex(raw.z0);
        if (raw.eta) job.map.eta = faber::cli::parse_complex(*raw.eta);
        if (raw.lambda) job.map.lambda = faber::cli::parse_complex(*raw.lambda);
        job.map.alpha_m = faber::cli::parse_complex(raw.alpha_m);
        for (const auto& t : raw.tail) job.map.tail.push_back(faber::cli::parse_complex(t));
    } catch (const std::invalid_argument& e) {
        error_record("usage", e.what());
        return faber::cli::kExitUsage;
    }

    if (raw.out.empty()) return faber::cli::run(job, std::cout, std::cerr);
    std::ofstream file(raw.out);
    if (!file) {
        error_record("io", "cannot open " + raw.out);
        return faber::cli::kExitUsage;
    }
    return faber::cli::run(job, file, std::cerr);
}
