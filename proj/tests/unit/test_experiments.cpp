#include <doctest.h>

#include <cmath>
#include <sstream>

#include "hadarot/analytic.hpp"
#include "hadarot/error.hpp"
#include "hadarot/experiments.hpp"
#include "hadarot/report_io.hpp"

using namespace hadarot;
using namespace hadarot::experiments;

TEST_CASE("config validation") {
    ExperimentConfig c;
    c.dims = {16, 32};
    CHECK_NOTHROW(c.validate());
    c.dims = {16, 48};
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c.dims = {};
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c.dims = {16};
    c.n_inputs = 0;
    CHECK_THROWS_AS(c.validate(), ConfigError);
}

TEST_CASE("config hash ignores path, format and workers") {
    ExperimentConfig a;
    a.dims = {16};
    ExperimentConfig b = a;
    b.output_path = "x.csv";
    b.format = Format::json;
    b.workers = 7;
    CHECK(a.hash("m") == b.hash("m"));
    b.master_seed += 1;
    CHECK(a.hash("m") != b.hash("m"));
    CHECK(a.hash("m") != a.hash("n"));
}

TEST_CASE("adaptive sample schedule") {
    CHECK(adaptive_samples(16) == 10000);
    CHECK(adaptive_samples(256) == 12800);
    CHECK(adaptive_samples(1024) == 51200);
    CHECK(adaptive_samples(4096) == 100000);
}

TEST_CASE("marginal experiment report") {
    ExperimentConfig c;
    c.dims = {16, 64};
    c.n_inputs = 8;
    c.n_samples = 2000;
    const auto report = run_marginal(c);
    REQUIRE(report.rows.size() == 2);
    CHECK(report.se_defined);
    for (const auto& row : report.rows) {
        CHECK(row.ks_mean < row.c_pos_bound);
        CHECK(row.ci_low == doctest::Approx(row.ks_mean - 1.96 * row.ks_se));
        CHECK(row.ci_high == doctest::Approx(row.ks_mean + 1.96 * row.ks_se));
        CHECK(row.c_pos_bound == analytic::positive_bound(double(row.d)));
    }
    CHECK(report.rows[0].theory_curve == doctest::Approx(report.rows[0].ks_mean));
    CHECK(report.c_scale == doctest::Approx(report.rows[0].ks_mean * std::pow(16.0, 0.2)));

    c.n_inputs = 1;
    const auto single = run_marginal(c);
    CHECK_FALSE(single.se_defined);
    CHECK(single.rows[0].ks_se == 0.0);
}

TEST_CASE("marginal per-input values do not depend on the worker count") {
    set_workers(1);
    const auto one = marginal_ks_per_input(32, 6, 1000, 77);
    set_workers(4);
    const auto four = marginal_ks_per_input(32, 6, 1000, 77);
    set_workers(1);
    CHECK(one == four);
}

TEST_CASE("lower-bound experiment") {
    ExperimentConfig c;
    c.dims = {256, 32768};
    c.t_grid_size = 100;
    const auto report = run_lower_bound(c);
    CHECK(report.rows.size() > 200);
    REQUIRE(report.maxima.size() == 2);
    CHECK(report.maxima[0].max_bound <= report.maxima[0].upper_e1);
    REQUIRE(report.landmarks.size() == 3);
    CHECK(report.all_landmarks_pass());
    CHECK(std::abs(report.landmarks[0].value - 0.3346) < 5e-4);
    CHECK(std::abs(report.landmarks[1].value - 0.6026) < 5e-4);
    CHECK(std::isnan(report.landmarks[2].t));
}

TEST_CASE("e1 experiment guards small dimensions") {
    ExperimentConfig c;
    c.dims = {2, 64};
    c.n_samples = 2000;
    const auto report = run_e1(c);
    REQUIRE(report.rows.size() == 2);
    CHECK_FALSE(report.rows[0].sandwich_checked);
    CHECK(report.rows[0].sandwich_ok);
    CHECK(report.rows[1].sandwich_checked);
    CHECK(report.all_pass());
}

TEST_CASE("CSV writers emit the fixed headers") {
    ExperimentConfig c;
    c.dims = {64};
    c.n_samples = 100;
    c.n_inputs = 2;
    c.t_grid_size = 5;

    std::ostringstream m, lb, e1;
    io::write_marginal(run_marginal(c), c, m);
    io::write_lower_bound(run_lower_bound(c), c, lb);
    io::write_e1(run_e1(c), c, e1);
    auto header = [](const std::string& s) {
        std::istringstream in(s);
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line[0] != '#') return line;
        }
        return std::string{};
    };
    CHECK(header(m.str()) == "d,ks_mean,ks_se,ci_low,ci_high,n_inputs,n_samples,c_pos_bound,theory_curve");
    CHECK(header(lb.str()) == "d,t,bound");
    CHECK(header(e1.str()) == "d,estimate,se,lower_max_t,upper_closed_form");
    CHECK(m.str().find("seed=20240917") != std::string::npos);
    CHECK(m.str().find("config_hash=" + c.hash("experiment marginal")) != std::string::npos);
}

TEST_CASE("verify JSON carries one entry per verifier") {
    lemmas::SuiteConfig config;
    config.sample_scale = 0.01;
    const auto reports = lemmas::run_suite(config, "gautschi-chi");
    std::ostringstream out;
    io::write_verify(reports, {config.master_seed, config.sample_scale, "gautschi-chi"}, out);
    const auto text = out.str();
    for (const char* key : {"\"verifier\"", "\"instances\"", "\"violations\"", "\"min_slack\"", "\"pass\""}) {
        CHECK(text.find(key) != std::string::npos);
    }
}

TEST_CASE("FWHT benchmark") {
    const auto report = run_bench_fwht({1024, 2048, 4096}, 5);
    REQUIRE(report.rows.size() == 3);
    for (const auto& row : report.rows) CHECK(row.fwht_median_ns > 0.0);
    CHECK(report.speedup_checked);
    CHECK(report.speedup_ok);
    CHECK(report.exponent_checked);
    CHECK_THROWS_AS(run_bench_fwht({1000}, 5), ConfigError);
    CHECK_THROWS_AS(run_bench_fwht({1024}, 0), ConfigError);
}
