#include "doctest.h"

#include <cmath>
#include <numbers>
#include <sstream>

#include "faber/cli.hpp"

using namespace faber::cli;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_job(const JobSpec& job) {
    std::ostringstream out, err;
    const int code = run(job, out, err);
    return {code, out.str(), err.str()};
}

JobSpec hypocycloid_gen(int m, int N) {
    JobSpec job;
    job.command = "gen";
    job.map.family = "hypocycloid";
    job.map.m = m;
    job.N = N;
    return job;
}

}  // namespace

TEST_CASE("parse_complex") {
    CHECK(parse_complex("1.5") == faber::Complex(1.5, 0.0));
    CHECK(parse_complex("-2,0.25") == faber::Complex(-2.0, 0.25));
    CHECK(parse_complex("1e-3,-1e3") == faber::Complex(1e-3, -1e3));
    CHECK_THROWS_AS(parse_complex(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_complex("1,2,3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_complex("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_complex("inf"), std::invalid_argument);
}

TEST_CASE("build_family validates") {
    MapSpec spec;
    spec.family = "gap";
    spec.n = 0;
    spec.tail = {1.0};
    CHECK_THROWS_AS(build_family(spec), std::invalid_argument);
    spec.family = "nope";
    CHECK_THROWS_AS(build_family(spec), std::invalid_argument);
    spec.family = "exp";
    spec.lambda = 0.5;
    CHECK(std::holds_alternative<faber::ExpMap>(build_family(spec)));
}

TEST_CASE("gen writes ascending coefficients") {
    const Outcome o = run_job(hypocycloid_gen(1, 3));
    REQUIRE(o.code == kExitPass);
    const Json j = Json::parse(o.out);
    CHECK(j["command"] == "gen");
    CHECK(j["N"] == 3);
    CHECK(j["pass"] == true);
    const Json f3 = j["results"]["polys"][3];
    REQUIRE(f3.size() == 4);
    const double expect[] = {0.0, -3.0, 0.0, 1.0};
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK(f3[k][0].get<double>() == expect[k]);
        CHECK(f3[k][1].get<double>() == 0.0);
    }
    // Top-level key order is fixed.
    std::vector<std::string> keys;
    for (const auto& [key, value] : j.items()) keys.push_back(key);
    CHECK(keys == std::vector<std::string>{"command", "map", "N", "results", "residuals", "pass"});
}

TEST_CASE("gen csv and closed method") {
    JobSpec job = hypocycloid_gen(1, 3);
    job.format = "csv";
    const Outcome o = run_job(job);
    CHECK(o.out.find("j,re_0,im_0,re_1,im_1,re_2,im_2,re_3,im_3\n") == 0);
    CHECK(o.out.find("\n3,0,0,-3,0,0,0,1,0\n") != std::string::npos);

    JobSpec closed = hypocycloid_gen(2, 6);
    closed.method = "closed";
    JobSpec rec = hypocycloid_gen(2, 6);
    const Json a = Json::parse(run_job(closed).out)["results"]["polys"];
    const Json b = Json::parse(run_job(rec).out)["results"]["polys"];
    REQUIRE(a.size() == b.size());
    for (std::size_t j = 0; j < a.size(); ++j)
        for (std::size_t k = 0; k < a[j].size(); ++k)
            CHECK(std::abs(a[j][k][0].get<double>() - b[j][k][0].get<double>()) <= 1e-12);
}

TEST_CASE("verify derivative-identity suite") {
    JobSpec job;
    job.command = "verify";
    job.suite = "eq14";
    job.map.lambda = 0.7;
    job.N = 20;
    const Outcome o = run_job(job);
    CHECK(o.code == kExitPass);
    const Json j = Json::parse(o.out);
    CHECK(j["pass"] == true);
    CHECK(j["residuals"]["eq14"].get<double>() <= 1e-9);
    CHECK(j["results"]["eq14"]["lambda"][0].get<double>() == 0.7);

    job.tol = 1e-30;
    CHECK(run_job(job).code == kExitCheckFailure);
}

TEST_CASE("boundary") {
    JobSpec job;
    job.command = "boundary";
    job.map.lambda = 1.0;
    job.theta = 0.0;
    const Json j = Json::parse(run_job(job).out);
    CHECK(j["results"]["points"][0][0].get<double>() == doctest::Approx(std::numbers::e));
    CHECK(j["results"]["points"][0][1].get<double>() == 0.0);

    job.theta.reset();
    job.samples = 8;
    CHECK(Json::parse(run_job(job).out)["results"]["points"].size() == 8);
    job.samples = 0;
    CHECK(run_job(job).code == kExitUsage);
}

TEST_CASE("roots and kernel") {
    JobSpec job = hypocycloid_gen(3, 8);
    job.command = "roots";
    job.j_min = 4;
    const Outcome o = run_job(job);
    CHECK(o.code == kExitPass);
    const Json j = Json::parse(o.out);
    CHECK(j["results"].size() == 5);
    CHECK(j["results"][0]["roots"].size() == 4);

    job.j_max = 9;
    CHECK(run_job(job).code == kExitUsage);

    JobSpec k;
    k.command = "kernel";
    k.map.lambda = 0.5;
    k.N = 4;
    CHECK(Json::parse(run_job(k).out)["results"]["polys"].size() == 5);
    k.map.lambda = 2.0;
    CHECK(run_job(k).code == kExitUsage);
}

TEST_CASE("errors are one JSON record per line") {
    JobSpec job;
    job.command = "gen";
    job.map.family = "gap";
    job.map.n = 0;
    job.map.tail = {1.0};
    const Outcome o = run_job(job);
    CHECK(o.code == kExitUsage);
    CHECK(o.out.empty());
    REQUIRE(!o.err.empty());
    CHECK(o.err.back() == '\n');
    CHECK(o.err.find('\n') == o.err.size() - 1);
    CHECK(Json::parse(o.err).contains("error"));

    job.command = "frobnicate";
    CHECK(run_job(job).code == kExitUsage);

    JobSpec missing;
    missing.command = "gen";
    CHECK(run_job(missing).code == kExitUsage);

    JobSpec fmt = hypocycloid_gen(1, 3);
    fmt.format = "xml";
    CHECK(run_job(fmt).code == kExitUsage);

    JobSpec suite;
    suite.command = "verify";
    suite.suite = "nope";
    CHECK(run_job(suite).code == kExitUsage);
}

TEST_CASE("output is deterministic and round-trips") {
    JobSpec job;
    job.command = "verify";
    job.suite = "recurrence-vs-oracle";
    job.seed = 42;
    const Outcome a = run_job(job);
    const Outcome b = run_job(job);
    CHECK(a.out == b.out);
    CHECK(Json::parse(a.out).dump(2) + "\n" == a.out);

    job.seed = 43;
    CHECK(run_job(job).out != a.out);
}

TEST_CASE("suite list") {
    const auto& names = suite_names();
    for (const char* n : {"recurrence-vs-oracle", "eq13", "eq14", "eq16", "theorem1", "theorem2", "theorem3", "chebyshev",
                          "he-formula", "lambert", "rays", "all"})
        CHECK(std::find(names.begin(), names.end(), n) != names.end());
}
