#pragma once

// Job description and runner behind the faber_cli tool. Argument parsing
// lives in the tool; everything here is callable in-process so the output
// format can be tested byte for byte.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "faber/maps.hpp"

namespace faber::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int {
    kExitPass = 0,
    kExitCheckFailure = 1,
    kExitUsage = 2,
    kExitNonConvergence = 3,
};

struct MapSpec {
    std::string family;  // shift | gap | twogap | hypocycloid | exp; empty when not given
    Complex alpha0{};
    Complex z0{};
    std::optional<Complex> eta;     // exp family, and the exponential-map suites
    std::optional<Complex> lambda;  // exp family, kernel, boundary and suites
    Complex alpha_m{};
    int m = 1;
    int n = 1;
    std::vector<Complex> tail;
};

struct JobSpec {
    std::string command;  // gen | verify | roots | boundary | kernel
    MapSpec map;
    std::optional<int> N;
    std::string format = "json";  // json | csv
    std::uint64_t seed = 0;
    std::optional<double> tol;
    std::string suite = "all";
    std::string method = "recurrence";  // gen: recurrence | closed
    std::optional<int> j_min;
    std::optional<int> j_max;
    std::optional<double> theta;
    int samples = 64;
};

/// Names accepted by `verify --suite`.
const std::vector<std::string>& suite_names();

/// Parses "re" or "re,im" into a complex number; throws std::invalid_argument.
Complex parse_complex(const std::string& text);

/// Validates the map parameters; throws std::invalid_argument on any violated invariant.
MapFamily build_family(const MapSpec& spec);

Json map_to_json(const MapSpec& spec);

/// Runs one job, writing results to out and structured error records to err.
int run(const JobSpec& job, std::ostream& out, std::ostream& err);

}  // namespace faber::cli
