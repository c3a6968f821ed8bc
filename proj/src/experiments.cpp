#include "hadarot/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fmt/format.h>
#include <limits>
#include <numeric>

#include "hadarot/analytic.hpp"
#include "hadarot/error.hpp"

namespace hadarot::experiments {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

const std::uint64_t kMarginalTag = fnv1a("experiment/marginal");
const std::uint64_t kE1Tag = fnv1a("experiment/e1");

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

void ExperimentConfig::validate() const {
    if (dims.empty()) throw ConfigError("at least one dimension is required");
    for (auto d : dims) {
        if (!is_power_of_two(d)) throw ConfigError(fmt::format("dimension {} is not a power of two", d));
    }
    if (n_inputs == 0) throw ConfigError("n_inputs must be at least 1");
    if (n_samples && *n_samples == 0) throw ConfigError("n_samples must be at least 1");
    if (t_grid_size == 0) throw ConfigError("t grid size must be at least 1");
}

std::string ExperimentConfig::hash(const std::string& command) const {
    std::string canon = command + "|dims=";
    for (auto d : dims) canon += fmt::format("{},", d);
    canon += fmt::format("|inputs={}|samples={}|seed={}|tgrid={}", n_inputs,
                         n_samples ? fmt::format("{}", *n_samples) : "adaptive", master_seed,
                         t_grid_size);
    return fmt::format("{:016x}", fnv1a(canon));
}

std::size_t adaptive_samples(std::size_t d) {
    return std::min<std::size_t>(100000, std::max<std::size_t>(10000, 50 * d));
}

std::vector<double> marginal_ks_per_input(std::size_t d, std::size_t n_inputs,
                                          std::size_t n_samples, std::uint64_t master_seed) {
    const Dimension dim(d);
    if (d < 2) throw ConfigError("the marginal experiment needs d >= 2");
    std::vector<double> ks(n_inputs);
    // Inputs run in parallel; each input's samples are drawn serially.
    for_each_index(n_inputs, Exec::parallel, [&](std::size_t i) {
        const StreamSpec unit{master_seed, stream_index_of({kMarginalTag, d, i})};
        StreamRng g = unit.child(0).rng(Layer::gauss);
        const UnitVector u = sample_uniform_sphere(dim, g);
        ks[i] = marginal_ks_experiment(u, 0, n_samples, unit.child(1), Exec::serial);
    });
    return ks;
}

MarginalReport run_marginal(const ExperimentConfig& config) {
    config.validate();
    MarginalReport report;
    report.se_defined = config.n_inputs > 1;
    for (std::size_t d : config.dims) {
        const std::size_t n = config.n_samples.value_or(adaptive_samples(d));
        const auto ks = marginal_ks_per_input(d, config.n_inputs, n, config.master_seed);
        RunningStats stats;
        for (double v : ks) stats.push(v);
        const double se = stats.standard_error();
        report.rows.push_back({d, stats.mean, se, stats.mean - 1.96 * se, stats.mean + 1.96 * se,
                               config.n_inputs, n, analytic::positive_bound(double(d)), 0.0});
    }
    const auto smallest = std::min_element(report.rows.begin(), report.rows.end(),
                                           [](const auto& a, const auto& b) { return a.d < b.d; });
    report.c_scale = smallest->ks_mean / std::pow(double(smallest->d), -0.2);
    for (auto& row : report.rows) row.theory_curve = report.c_scale * std::pow(double(row.d), -0.2);
    return report;
}

bool LowerBoundReport::all_landmarks_pass() const {
    return std::all_of(landmarks.begin(), landmarks.end(), [](const Landmark& l) { return l.pass; });
}

std::vector<Landmark> lower_bound_landmarks(std::size_t t_grid_size) {
    using analytic::BoundParams;
    std::vector<Landmark> out;
    auto add = [&](std::string name, std::size_t d, double t, double value, double expected,
                   double tol) {
        out.push_back({std::move(name), d, t, value, expected, tol, std::abs(value - expected) <= tol});
    };
    add("lower-bound(256,0.11)", 256, 0.11,
        analytic::wasserstein_lower_bound(BoundParams(256, 0.11)), 0.3346, 5e-4);
    add("lower-bound(32768,0.02)", 32768, 0.02,
        analytic::wasserstein_lower_bound(BoundParams(32768, 0.02)), 0.6026, 5e-4);
    const std::size_t big = std::size_t{1} << 18;
    add("max-over-t(262144)", big, kNaN,
        analytic::wasserstein_lower_bound_max(big, t_grid_size).value,
        analytic::constants().w1_asymptote, 0.02);
    return out;
}

LowerBoundReport run_lower_bound(const ExperimentConfig& config) {
    config.validate();
    LowerBoundReport report;
    for (std::size_t d : config.dims) {
        if (d < 2) throw ConfigError("the lower-bound functional needs d >= 2");
        LowerBoundMaxRow best{d, 0.0, 0.0, analytic::wasserstein_upper_bound_e1(d)};
        for (double t : analytic::lower_bound_t_grid(d, config.t_grid_size)) {
            const double v = analytic::wasserstein_lower_bound(analytic::BoundParams(d, t));
            report.rows.push_back({d, t, v});
            if (v > best.max_bound) {
                best.max_bound = v;
                best.t_star = t;
            }
        }
        report.maxima.push_back(best);
    }
    report.landmarks = lower_bound_landmarks(config.t_grid_size);
    return report;
}

bool E1Report::all_pass() const {
    return std::all_of(rows.begin(), rows.end(), [](const E1Row& r) { return r.sandwich_ok; });
}

E1Report run_e1(const ExperimentConfig& config) {
    config.validate();
    E1Report report;
    report.n_samples = config.n_samples.value_or(kDefaultE1Samples);
    if (report.n_samples < 2) throw ConfigError("the e1 experiment needs at least 2 samples");
    for (std::size_t d : config.dims) {
        if (d < 2) throw ConfigError("the e1 experiment needs d >= 2");
        const StreamSpec stream{config.master_seed, stream_index_of({kE1Tag, d})};
        const auto mc = e1_wasserstein_mc(Dimension(d), report.n_samples, stream);
        E1Row row{d, mc.estimate, mc.standard_error,
                  analytic::wasserstein_lower_bound_max(d, config.t_grid_size).value,
                  analytic::wasserstein_upper_bound_e1(d), d >= 8, true};
        if (row.sandwich_checked) {
            const double allowance = kE1SandwichSe * row.se;
            row.sandwich_ok = row.estimate >= row.lower_max_t - allowance &&
                              row.estimate <= row.upper_closed_form + allowance;
        }
        report.rows.push_back(row);
    }
    return report;
}

BenchReport run_bench_fwht(const std::vector<std::size_t>& dims, std::size_t reps) {
    if (reps == 0) throw ConfigError("reps must be at least 1");
    using clock = std::chrono::steady_clock;
    BenchReport report;
    for (std::size_t d : dims) {
        if (!is_power_of_two(d)) throw ConfigError(fmt::format("dimension {} is not a power of two", d));
        const Dimension dim(d);
        std::vector<double> x(d);
        StreamRng rng(1, d, Layer::gauss);
        for (double& v : x) v = rng.gaussian();
        const std::vector<double> original = x;
        // Each call scales the norm by sqrt(d); cap the batch well before overflow.
        const std::size_t batch = std::clamp<std::size_t>(
            std::min((std::size_t{1} << 16) / d, std::size_t{1000} / std::max(1u, dim.log2())), 1, 1 << 16);
        std::vector<double> fast_ns;
        volatile double sink = 0.0;
        for (std::size_t r = 0; r < reps; ++r) {
            x = original;
            const auto start = clock::now();
            for (std::size_t b = 0; b < batch; ++b) fwht_in_place(x, dim);
            const auto stop = clock::now();
            fast_ns.push_back(std::chrono::duration<double, std::nano>(stop - start).count() / double(batch));
            sink = sink + x[0];
        }
        BenchRow row{d, median(fast_ns), kNaN, kNaN};
        if (d <= kNaiveHadamardLimit) {
            std::vector<double> slow_ns;
            const std::size_t naive_reps = std::min<std::size_t>(reps, d >= 1024 ? 5 : reps);
            for (std::size_t r = 0; r < naive_reps; ++r) {
                const auto start = clock::now();
                const auto y = naive_hadamard_multiply(x, dim);
                const auto stop = clock::now();
                sink = sink + y[0];
                slow_ns.push_back(std::chrono::duration<double, std::nano>(stop - start).count());
            }
            row.naive_median_ns = median(slow_ns);
            row.speedup = row.naive_median_ns / row.fwht_median_ns;
        }
        report.rows.push_back(row);
    }

    std::vector<double> lx, ly;
    for (const auto& row : report.rows) {
        if (row.d >= (std::size_t{1} << 10) && row.d <= (std::size_t{1} << 20)) {
            lx.push_back(std::log(double(row.d)));
            ly.push_back(std::log(row.fwht_median_ns));
        }
    }
    report.scaling_exponent = kNaN;
    if (lx.size() >= 2) {
        const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / double(lx.size());
        const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / double(ly.size());
        double sxy = 0.0, sxx = 0.0;
        for (std::size_t i = 0; i < lx.size(); ++i) {
            sxy += (lx[i] - mx) * (ly[i] - my);
            sxx += (lx[i] - mx) * (lx[i] - mx);
        }
        report.scaling_exponent = sxy / sxx;
        report.exponent_checked = true;
        report.exponent_ok = report.scaling_exponent >= 0.9 && report.scaling_exponent <= 1.4;
    }
    for (const auto& row : report.rows) {
        if (row.d == 4096) {
            report.speedup_checked = true;
            report.speedup_ok = row.speedup >= 10.0;
        }
    }
    return report;
}

}  // namespace hadarot::experiments
