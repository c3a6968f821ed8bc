// hadarot: experiments, lemma verification and FWHT benchmarks for two-block
// structured Hadamard rotations.
//
// Exit codes: 0 pass, 1 assertion failure, 2 configuration error.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fmt/format.h>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "hadarot/error.hpp"
#include "hadarot/experiments.hpp"
#include "hadarot/lemma_suite.hpp"
#include "hadarot/report_io.hpp"

namespace ex = hadarot::experiments;
namespace io = hadarot::io;

namespace {

constexpr int kPass = 0;
constexpr int kAssertionFailure = 1;
constexpr int kConfigError = 2;

constexpr std::uint64_t kDefaultSeed = 20240917;

std::vector<std::size_t> pow2_range(unsigned lo, unsigned hi, unsigned step = 1) {
    std::vector<std::size_t> out;
    for (unsigned m = lo; m <= hi; m += step) out.push_back(std::size_t{1} << m);
    return out;
}

/// --seed wins over HADAROT_SEED, which wins over the default.
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("HADAROT_SEED")) {
        try {
            std::size_t used = 0;
            const auto v = std::stoull(env, &used);
            if (used == std::string(env).size()) return v;
        } catch (const std::exception&) {
        }
        throw hadarot::ConfigError(fmt::format("HADAROT_SEED is not an integer: '{}'", env));
    }
    return kDefaultSeed;
}

std::string sibling_path(const std::string& path, const std::string& suffix) {
    std::filesystem::path p(path);
    const auto ext = p.extension().string();
    p.replace_extension();
    return p.string() + suffix + (ext.empty() ? ".csv" : ext);
}

struct ExperimentFlags {
    std::vector<std::size_t> dims;
    std::optional<std::uint64_t> seed;
    std::string out;
    std::string format = "csv";
    int workers = 0;
    std::size_t inputs = 1000;
    std::optional<std::size_t> samples;
    std::size_t t_grid = 2000;
};

ex::ExperimentConfig to_config(const ExperimentFlags& f, std::vector<std::size_t> default_dims) {
    ex::ExperimentConfig c;
    c.dims = f.dims.empty() ? std::move(default_dims) : f.dims;
    c.n_inputs = f.inputs;
    c.n_samples = f.samples;
    c.master_seed = resolve_seed(f.seed);
    c.t_grid_size = f.t_grid;
    c.output_path = f.out;
    c.format = f.format == "json" ? ex::Format::json : ex::Format::csv;
    c.workers = f.workers;
    c.validate();
    hadarot::set_workers(c.workers);
    return c;
}

void add_experiment_flags(CLI::App* cmd, ExperimentFlags& f) {
    cmd->add_option("--dims", f.dims, "Comma-separated powers of two")->delimiter(',');
    cmd->add_option("--seed", f.seed, "Master seed (overrides HADAROT_SEED)");
    cmd->add_option("--out", f.out, "Output path (stdout when omitted)");
    cmd->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--workers", f.workers, "Worker threads (results do not depend on it)");
}

int run_marginal(const ExperimentFlags& f) {
    const auto config = to_config(f, pow2_range(4, 10));
    const auto report = ex::run_marginal(config);
    io::emit_to(config.output_path, [&](std::ostream& os) { io::write_marginal(report, config, os); });
    int status = kPass;
    for (const auto& row : report.rows) {
        if (!(row.ks_mean < row.c_pos_bound)) {
            std::cerr << fmt::format("FAIL d={} mean KS {} >= C_pos d^-1/5 = {}\n", row.d, row.ks_mean,
                                     row.c_pos_bound);
            status = kAssertionFailure;
        }
    }
    std::cerr << fmt::format("fitted c_scale = {}\n", report.c_scale);
    return status;
}

int run_lower_bound(const ExperimentFlags& f) {
    const auto config = to_config(f, pow2_range(3, 18));
    const auto report = ex::run_lower_bound(config);
    io::emit_to(config.output_path, [&](std::ostream& os) { io::write_lower_bound(report, config, os); });
    if (!config.output_path.empty() && config.format == ex::Format::csv) {
        io::emit_to(sibling_path(config.output_path, "_max"),
                    [&](std::ostream& os) { io::write_lower_bound_maxima(report, config, os); });
    }
    for (const auto& l : report.landmarks) {
        std::cerr << fmt::format("{} {} = {:.6f} (expected {} +- {})\n", l.pass ? "PASS" : "FAIL",
                                 l.name, l.value, l.expected, l.tolerance);
    }
    return report.all_landmarks_pass() ? kPass : kAssertionFailure;
}

int run_e1(const ExperimentFlags& f) {
    const auto config = to_config(f, {4096, 32768});
    const auto report = ex::run_e1(config);
    io::emit_to(config.output_path, [&](std::ostream& os) { io::write_e1(report, config, os); });
    for (const auto& r : report.rows) {
        if (!r.sandwich_checked) {
            std::cerr << fmt::format("SKIP d={} (sandwich needs d >= 8)\n", r.d);
            continue;
        }
        std::cerr << fmt::format("{} d={} {:.5f} <= {:.5f} (se {:.2g}) <= {:.5f}\n",
                                 r.sandwich_ok ? "PASS" : "FAIL", r.d, r.lower_max_t, r.estimate, r.se,
                                 r.upper_closed_form);
    }
    return report.all_pass() ? kPass : kAssertionFailure;
}

struct VerifyFlags {
    std::string only;
    std::optional<std::uint64_t> seed;
    std::string out;
    double sample_scale = 1.0;
    hadarot::lemmas::Tolerances tol;
    int workers = 0;
};

int run_verify(const VerifyFlags& f) {
    hadarot::lemmas::SuiteConfig config;
    config.master_seed = resolve_seed(f.seed);
    config.tolerances = f.tol;
    config.sample_scale = f.sample_scale;
    config.validate();
    hadarot::set_workers(f.workers);
    const auto reports = hadarot::lemmas::run_suite(config, f.only);
    io::emit_to(f.out, [&](std::ostream& os) {
        io::write_verify(reports, {config.master_seed, config.sample_scale, f.only}, os);
    });
    bool all = true;
    for (const auto& r : reports) {
        std::cerr << fmt::format("{} {} instances={} violations={} min_slack={:.3g}\n",
                                 r.pass ? "PASS" : "FAIL", r.verifier, r.instances, r.violations,
                                 r.min_slack);
        all = all && r.pass;
    }
    return all ? kPass : kAssertionFailure;
}

int run_bench(const std::vector<std::size_t>& dims_flag, std::size_t reps) {
    const auto dims = dims_flag.empty() ? pow2_range(10, 20) : dims_flag;
    const auto report = ex::run_bench_fwht(dims, reps);
    io::write_bench(report, std::cout);
    return report.all_pass() ? kPass : kAssertionFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-block structured Hadamard rotations: experiments and verification"};
    app.require_subcommand(1);

    ExperimentFlags exp_flags;
    auto* experiment = app.add_subcommand("experiment", "Run a Monte Carlo or bound experiment");
    experiment->require_subcommand(1);
    auto* marginal = experiment->add_subcommand("marginal", "One-coordinate KS distance vs dimension");
    auto* lower = experiment->add_subcommand("lower-bound", "Wasserstein lower-bound table");
    auto* e1 = experiment->add_subcommand("e1", "Exact W1 for u = e1 by Monte Carlo");
    for (auto* cmd : {marginal, lower, e1}) add_experiment_flags(cmd, exp_flags);
    marginal->add_option("--inputs", exp_flags.inputs, "Random inputs per dimension");
    marginal->add_option("--samples", exp_flags.samples, "Samples per input (default adaptive)");
    e1->add_option("--samples", exp_flags.samples, "Monte Carlo samples per dimension");
    lower->add_option("--t-grid", exp_flags.t_grid, "Uniform t points per dimension");
    e1->add_option("--t-grid", exp_flags.t_grid, "Uniform t points for the lower bound");

    VerifyFlags vf;
    auto* verify = app.add_subcommand("verify", "Run the lemma verification suite");
    verify->add_option("--only", vf.only, "Run a single verifier by name");
    verify->add_option("--seed", vf.seed, "Master seed (overrides HADAROT_SEED)");
    verify->add_option("--out", vf.out, "JSON report path (stdout when omitted)");
    verify->add_option("--sample-scale", vf.sample_scale, "Multiplier on Monte Carlo sample counts");
    verify->add_option("--slack-tol", vf.tol.slack, "Additive tolerance for deterministic inequalities");
    verify->add_option("--se-mult", vf.tol.se_multiplier, "Standard-error multiplier for tail checks");
    verify->add_option("--ks-allowance", vf.tol.ks_allowance, "KS allowance c in c/sqrt(n)");
    verify->add_option("--workers", vf.workers, "Worker threads");

    std::vector<std::size_t> bench_dims;
    std::size_t bench_reps = 100;
    auto* bench = app.add_subcommand("bench", "Benchmarks");
    bench->require_subcommand(1);
    auto* bench_fwht = bench->add_subcommand("fwht", "FWHT timing and naive comparison");
    bench_fwht->add_option("--dims", bench_dims, "Comma-separated powers of two")->delimiter(',');
    bench_fwht->add_option("--reps", bench_reps, "Repetitions per dimension");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kConfigError;
    }

    try {
        if (*marginal) return run_marginal(exp_flags);
        if (*lower) return run_lower_bound(exp_flags);
        if (*e1) return run_e1(exp_flags);
        if (*verify) return run_verify(vf);
        if (*bench_fwht) return run_bench(bench_dims, bench_reps);
    } catch (const hadarot::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const hadarot::ContractError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfigError;
    }
    return kConfigError;
}
