#pragma once

// Empirical distribution machinery for the Monte Carlo experiments: empirical
// CDFs, one-sample Kolmogorov-Smirnov statistics against analytic CDFs, the
// exact-coupling W1 estimator for u = e1, and moment estimators of T(u).

#include <cmath>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "hadarot/parallel.hpp"
#include "hadarot/rotor.hpp"

namespace hadarot {

/// Address of a family of random streams; sample i uses child(i).
struct StreamSpec {
    std::uint64_t master_seed = 0;
    std::uint64_t stream = 0;

    StreamSpec child(std::uint64_t i) const noexcept {
        return {master_seed, stream_index_of({stream, i})};
    }
    StreamRng rng(Layer layer) const noexcept { return StreamRng(master_seed, stream, layer); }
};

/// Welford accumulator with Chan's pairwise merge.
struct RunningStats {
    std::uint64_t n = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void push(double x) noexcept {
        ++n;
        const double delta = x - mean;
        mean += delta / double(n);
        m2 += delta * (x - mean);
    }
    void merge(const RunningStats& o) noexcept;

    double variance() const noexcept { return n > 1 ? m2 / double(n - 1) : 0.0; }
    double stddev() const noexcept { return std::sqrt(variance()); }
    /// Sample standard deviation / sqrt(n); 0 when n < 2.
    double standard_error() const noexcept { return n > 1 ? stddev() / std::sqrt(double(n)) : 0.0; }
};

class EmpiricalCdf {
public:
    /// Sorts the samples. Throws ContractError when empty.
    explicit EmpiricalCdf(std::vector<double> samples);

    std::size_t size() const noexcept { return sorted_.size(); }
    std::span<const double> sorted() const noexcept { return sorted_; }

    /// (# samples <= t) / n.
    double operator()(double t) const noexcept;

private:
    std::vector<double> sorted_;
};

/// sup_t |F_n(t) - F(t)| = max_i max(i/n - F(x_(i)), F(x_(i)) - (i-1)/n).
/// The CDF is evaluated once per order statistic; evaluations run in parallel
/// under Exec::parallel (max is order independent, so the result is identical).
template <class Cdf>
double ks_statistic(const EmpiricalCdf& ecdf, Cdf&& cdf, Exec exec = Exec::serial) {
    const auto xs = ecdf.sorted();
    const double n = double(xs.size());
    return chunked_reduce<double>(
        xs.size(), exec,
        [&](std::size_t begin, std::size_t end) {
            double worst = 0.0;
            for (std::size_t i = begin; i < end; ++i) {
                const double f = cdf(xs[i]);
                worst = std::max({worst, double(i + 1) / n - f, f - double(i) / n});
            }
            return worst;
        },
        [](double& acc, double part) { acc = std::max(acc, part); }, 0.0);
}

double ks_statistic_vs_cdf(const EmpiricalCdf& ecdf, const std::function<double(double)>& cdf);

/// Samples of [T(u)]_k, sample i drawn with rotation seed from stream.child(i).
std::vector<double> sample_transform_coordinate(const UnitVector& u, std::size_t k,
                                                std::size_t n_samples, StreamSpec stream,
                                                Exec exec = Exec::parallel);

/// KS distance between n_samples draws of [T(u)]_k and the exact spherical marginal.
double marginal_ks_experiment(const UnitVector& u, std::size_t k, std::size_t n_samples,
                              StreamSpec stream, Exec exec = Exec::parallel);

struct McEstimate {
    double estimate;
    double standard_error;
};

/// Mean of hypercube_distance(X) for X uniform on S^{d-1}; equals W1(X(e1), T(e1)).
McEstimate e1_wasserstein_mc(Dimension dim, std::size_t n_samples, StreamSpec stream,
                             Exec exec = Exec::parallel);

struct CrossMoment {
    std::size_t k;
    std::size_t r;
    double value;
    double standard_error;
};

struct MomentSummary {
    std::vector<double> mean;
    std::vector<double> mean_se;
    std::vector<double> second_moments;  // E[T_k^2]
    std::vector<double> second_se;
    std::vector<CrossMoment> cross_moments;  // E[T_k T_r]
    std::uint64_t n = 0;
};

MomentSummary transform_moment_summary(const UnitVector& u, std::size_t n_samples,
                                       StreamSpec stream,
                                       std::span<const std::pair<std::size_t, std::size_t>> cross_pairs,
                                       Exec exec = Exec::parallel);

struct FourthMomentCheck {
    double estimate;
    double standard_error;
    double exact;  // (3 - 2 sum u^4) / d
};

/// Monte Carlo of sum_j b_j^4 with b = (1/sqrt d) H D2 u, against the closed form.
FourthMomentCheck b_coefficient_fourth_moment(const UnitVector& u, std::size_t n_samples,
                                              StreamSpec stream, Exec exec = Exec::parallel);

}  // namespace hadarot
