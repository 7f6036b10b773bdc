#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "diffrep/bench.hpp"

using namespace diffrep;
using namespace diffrep::bench;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream is(text);
    for (std::string line; std::getline(is, line);) out.push_back(line);
    return out;
}

std::vector<std::string> fields_of(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    for (std::string f; std::getline(is, f, ',');) out.push_back(f);
    return out;
}

} // namespace

TEST_CASE("doubles format with full round-trip precision") {
    CHECK(format_double(1.0) == "1.0");
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(0.0) == "0.0");
    for (double v : {1.0 / 3.0, 2.0 / std::sqrt(std::numbers::pi), 1e-9, 12345.678901234567}) {
        CHECK(std::stod(format_double(v)) == v);
    }
}

TEST_CASE("eval writes header plus one line per grid point") {
    ExperimentConfig cfg;
    cfg.f_tag = "zero";
    cfg.n_list = {8};
    cfg.m_list = {6};
    std::ostringstream os;
    run_eval(cfg, os);

    const auto lines = lines_of(os.str());
    REQUIRE(lines.size() == 9);
    CHECK(lines[0] == "t,value");
    CHECK(lines.back() == "1.0,0.0");
    CHECK(lines[1] == "0.125,0.0");
}

TEST_CASE("eval reaches the constant-source closed form") {
    ExperimentConfig cfg;
    cfg.n_list = {256};
    cfg.m_list = {40};
    std::ostringstream os;
    run_eval(cfg, os);

    const auto lines = lines_of(os.str());
    const auto last = fields_of(lines.back());
    REQUIRE(last.size() == 2);
    CHECK(std::stod(last[0]) == 1.0);
    const double reference = 2.0 / std::sqrt(std::numbers::pi);
    CHECK(std::abs(std::stod(last[1]) - reference) / reference < 1e-5);
}

TEST_CASE("eval validates its config") {
    ExperimentConfig cfg;
    cfg.n_list = {16, 32};
    std::ostringstream os;
    CHECK_THROWS_AS(run_eval(cfg, os), ConfigError);

    ExperimentConfig bad_order;
    bad_order.alpha = 1.0;
    CHECK_THROWS_AS(run_eval(bad_order, os), IntegerOrderError);

    ExperimentConfig bad_interval;
    bad_interval.b = bad_interval.a;
    CHECK_THROWS_AS(run_eval(bad_interval, os), ConfigError);

    ExperimentConfig bad_m;
    bad_m.m_list = {0};
    CHECK_THROWS_AS(run_eval(bad_m, os), ConfigError);

    ExperimentConfig bad_stepper;
    bad_stepper.stepper = "rk4";
    CHECK_THROWS_AS(run_eval(bad_stepper, os), ConfigError);
}

TEST_CASE("convergence table carries EOC and runtime columns") {
    ExperimentConfig cfg;
    cfg.n_list = {64, 128, 256, 512};
    cfg.m_list = {40};
    std::ostringstream os;
    run_convergence(cfg, os);

    const auto lines = lines_of(os.str());
    REQUIRE(lines.size() == 5);
    CHECK(lines[0] == "N,M,stepper,max_rel_error,eoc,runtime_ns");

    const auto first = fields_of(lines[1]);
    REQUIRE(first.size() == 6);
    CHECK(first[0] == "64");
    CHECK(first[1] == "40");
    CHECK(first[2] == "trap");
    CHECK(first[4].empty());
    CHECK(std::stol(first[5]) > 0);

    for (std::size_t i = 2; i < lines.size(); ++i) {
        const auto row = fields_of(lines[i]);
        REQUIRE(row.size() == 6);
        const double eoc = std::stod(row[4]);
        CAPTURE(lines[i]);
        CHECK(eoc == doctest::Approx(2.0).epsilon(0.25));
    }
}

TEST_CASE("backward euler shows first order in the convergence table") {
    ExperimentConfig cfg;
    cfg.stepper = "be";
    cfg.n_list = {64, 128, 256, 512};
    cfg.m_list = {40};
    std::ostringstream os;
    run_convergence(cfg, os);

    const auto lines = lines_of(os.str());
    REQUIRE(lines.size() == 5);
    for (std::size_t i = 2; i < lines.size(); ++i) {
        const auto row = fields_of(lines[i]);
        CHECK(row[2] == "be");
        CHECK(std::stod(row[4]) == doctest::Approx(1.0).epsilon(0.2));
    }
}

TEST_CASE("convergence marks undefined EOC for an identically zero source") {
    ExperimentConfig cfg;
    cfg.f_tag = "zero";
    cfg.n_list = {16, 32, 64};
    cfg.m_list = {8};
    std::ostringstream os;
    run_convergence(cfg, os);

    const auto lines = lines_of(os.str());
    REQUIRE(lines.size() == 4);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto row = fields_of(lines[i]);
        CHECK(row[3] == "0.0");
        if (i > 1) CHECK(row[4] == "nan");
    }
}

TEST_CASE("convergence needs at least three grid sizes") {
    ExperimentConfig cfg;
    cfg.n_list = {64, 128};
    std::ostringstream os;
    CHECK_THROWS_AS(run_convergence(cfg, os), ConfigError);
}

TEST_CASE("convergence sweeps every rule size in config order") {
    ExperimentConfig cfg;
    cfg.n_list = {32, 64, 128};
    cfg.m_list = {20, 40};
    std::ostringstream os;
    run_convergence(cfg, os);

    const auto lines = lines_of(os.str());
    REQUIRE(lines.size() == 7);
    CHECK(fields_of(lines[1])[1] == "20");
    CHECK(fields_of(lines[3])[1] == "20");
    CHECK(fields_of(lines[4])[1] == "40");
    CHECK(fields_of(lines[4])[4].empty()); // EOC chain restarts per rule size
    CHECK(fields_of(lines[6])[1] == "40");
}

TEST_CASE("node dump matches the rule definition") {
    ExperimentConfig cfg;
    cfg.m_list = {2};
    std::ostringstream os;
    run_nodes(cfg, os);

    const auto lines = lines_of(os.str());
    REQUIRE(lines.size() == 5); // header + 2*m_half
    CHECK(lines[0] == "m,omega,weight,psi,lambda_stiffness");
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto row = fields_of(lines[i]);
        REQUIRE(row.size() == 5);
        CHECK(std::stoul(row[0]) == i);
        CHECK(std::stod(row[2]) > 0.0);
        // lambda is psi at the node
        CHECK(std::stod(row[3]) == doctest::Approx(std::exp(std::stod(row[1]))));
        CHECK(row[3] == row[4]);
    }
}

TEST_CASE("kernel dump handles the degenerate start time") {
    ExperimentConfig cfg;
    KernelWindow window;
    window.t = 0.0;
    window.omega_min = -2.0;
    window.omega_max = 2.0;
    window.count = 5;
    std::ostringstream os;
    run_kernel(cfg, window, os);
    const auto zero_lines = lines_of(os.str());
    REQUIRE(zero_lines.size() == 6);
    for (std::size_t i = 1; i < zero_lines.size(); ++i) {
        const auto row = fields_of(zero_lines[i]);
        CHECK(row[2] == "0.0");
    }

    window.t = 1.0;
    std::ostringstream ok;
    run_kernel(cfg, window, ok);
    const auto lines = lines_of(ok.str());
    REQUIRE(lines.size() == 6);
    CHECK(lines[0] == "omega,psi,phi_abs");
}

TEST_CASE("kernel dump rejects probes outside the domain") {
    ExperimentConfig cfg;
    cfg.transform = "square";
    KernelWindow window;
    window.omega_min = -1.0;
    window.omega_max = 1.0;
    window.count = 3;
    std::ostringstream os;
    CHECK_THROWS_AS(run_kernel(cfg, window, os), ConfigError);
}

TEST_CASE("json config round trip with overrides") {
    const std::string path = "bench_config_test.json";
    {
        std::ofstream f(path);
        f << R"({"alpha": 0.75, "transform": "rational", "sigma": 2.0, "rho": 3.0,
                 "f": "poly:1", "a": 0.5, "b": 2.5, "n": [16, 32, 64], "m": 12,
                 "stepper": "be", "tol": 1e-8, "out": "x.csv"})";
    }
    const ExperimentConfig cfg = config_from_json_file(path);
    CHECK(cfg.alpha == 0.75);
    CHECK(cfg.transform == "rational");
    CHECK(cfg.sigma == 2.0);
    CHECK(cfg.rho == 3.0);
    CHECK(cfg.f_tag == "poly:1");
    CHECK(cfg.a == 0.5);
    CHECK(cfg.b == 2.5);
    CHECK(cfg.n_list == std::vector<int>{16, 32, 64});
    CHECK(cfg.m_list == std::vector<int>{12});
    CHECK(cfg.stepper == "be");
    CHECK(cfg.tol == 1e-8);
    CHECK(cfg.output_path == "x.csv");
    std::remove(path.c_str());
}

TEST_CASE("json config rejects unknown keys and bad files") {
    const std::string path = "bench_config_bad.json";
    {
        std::ofstream f(path);
        f << R"({"alpha": 0.5, "order": 3})";
    }
    CHECK_THROWS_AS(config_from_json_file(path), ConfigError);
    std::remove(path.c_str());
    CHECK_THROWS_AS(config_from_json_file("no_such_file.json"), ConfigError);
}

TEST_CASE("kernel dump is byte-stable across runs") {
    ExperimentConfig cfg;
    KernelWindow window;
    window.t = 0.7;
    window.omega_min = -3.0;
    window.omega_max = 3.0;
    window.count = 13;
    std::ostringstream first, second;
    run_kernel(cfg, window, first);
    run_kernel(cfg, window, second);
    CHECK(first.str() == second.str());
}
