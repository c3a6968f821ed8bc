#pragma once

// Experiment runners behind the `hadarot` CLI. Each runner is a pure function
// of its config; file emission lives in report_io.hpp.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hadarot/lemma_suite.hpp"

namespace hadarot::experiments {

enum class Format { csv, json };

struct ExperimentConfig {
    std::vector<std::size_t> dims;
    std::size_t n_inputs = 1000;
    /// Samples per input; nullopt selects adaptive_samples(d).
    std::optional<std::size_t> n_samples;
    std::uint64_t master_seed = 20240917;
    std::size_t t_grid_size = 2000;
    std::string output_path;
    Format format = Format::csv;
    /// Worker threads; 0 = OpenMP default. Does not affect results.
    int workers = 0;

    /// Throws ConfigError on non-power-of-two dims or zero counts.
    void validate() const;
    /// Hex digest of every field that influences results (not path, format or workers).
    std::string hash(const std::string& command) const;
};

/// min(1e5, max(1e4, 50 d)).
std::size_t adaptive_samples(std::size_t d);

struct MarginalRow {
    std::size_t d;
    double ks_mean;
    double ks_se;
    double ci_low;
    double ci_high;
    std::size_t n_inputs;
    std::size_t n_samples;
    double c_pos_bound;
    double theory_curve;
};

struct MarginalReport {
    std::vector<MarginalRow> rows;
    /// c such that c d_min^{-1/5} equals the empirical mean at the smallest dimension.
    double c_scale = 0.0;
    /// False when n_inputs == 1 (standard errors are emitted as 0).
    bool se_defined = true;
};

/// KS distance of coordinate 0 of T(u) to the exact spherical marginal, for n_inputs
/// random u per dimension.
MarginalReport run_marginal(const ExperimentConfig& config);

/// Per-input KS values for one dimension (exposed for tests).
std::vector<double> marginal_ks_per_input(std::size_t d, std::size_t n_inputs,
                                          std::size_t n_samples, std::uint64_t master_seed);

struct LowerBoundRow {
    std::size_t d;
    double t;
    double bound;
};

struct LowerBoundMaxRow {
    std::size_t d;
    double t_star;
    double max_bound;
    double upper_e1;
};

struct Landmark {
    std::string name;
    std::size_t d;
    double t;  // NaN for the max-over-t landmark
    double value;
    double expected;
    double tolerance;
    bool pass;
};

struct LowerBoundReport {
    std::vector<LowerBoundRow> rows;
    std::vector<LowerBoundMaxRow> maxima;
    std::vector<Landmark> landmarks;

    bool all_landmarks_pass() const;
};

LowerBoundReport run_lower_bound(const ExperimentConfig& config);

/// The three fixed checks: (256, 0.11) -> 0.3346, (32768, 0.02) -> 0.6026,
/// max over t at 2^18 -> 0.6358 within 0.02.
std::vector<Landmark> lower_bound_landmarks(std::size_t t_grid_size = 2000);

struct E1Row {
    std::size_t d;
    double estimate;
    double se;
    double lower_max_t;
    double upper_closed_form;
    bool sandwich_checked;  // only for d >= 8
    bool sandwich_ok;
};

struct E1Report {
    std::vector<E1Row> rows;
    std::size_t n_samples = 0;

    bool all_pass() const;
};

inline constexpr std::size_t kDefaultE1Samples = 100000;
inline constexpr double kE1SandwichSe = 4.0;

E1Report run_e1(const ExperimentConfig& config);

struct BenchRow {
    std::size_t d;
    double fwht_median_ns;
    double naive_median_ns;  // NaN when d exceeds the naive oracle guard
    double speedup;          // NaN when naive is not measured
};

struct BenchReport {
    std::vector<BenchRow> rows;
    /// Slope of log(time) vs log(d) over dims in [2^10, 2^20]; NaN with fewer than two such dims.
    double scaling_exponent;
    bool exponent_checked = false;
    bool exponent_ok = true;
    bool speedup_checked = false;
    bool speedup_ok = true;

    bool all_pass() const { return exponent_ok && speedup_ok; }
};

BenchReport run_bench_fwht(const std::vector<std::size_t>& dims, std::size_t reps);

}  // namespace hadarot::experiments
