#include "hadarot/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "hadarot/analytic.hpp"
#include "hadarot/error.hpp"

namespace hadarot {

void RunningStats::merge(const RunningStats& o) noexcept {
    if (o.n == 0) return;
    if (n == 0) {
        *this = o;
        return;
    }
    const double total = double(n + o.n);
    const double delta = o.mean - mean;
    mean += delta * double(o.n) / total;
    m2 += o.m2 + delta * delta * double(n) * double(o.n) / total;
    n += o.n;
}

EmpiricalCdf::EmpiricalCdf(std::vector<double> samples) : sorted_(std::move(samples)) {
    if (sorted_.empty()) throw ContractError("EmpiricalCdf: empty sample set");
    std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalCdf::operator()(double t) const noexcept {
    const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), t);
    return double(it - sorted_.begin()) / double(sorted_.size());
}

double ks_statistic_vs_cdf(const EmpiricalCdf& ecdf, const std::function<double(double)>& cdf) {
    return ks_statistic(ecdf, cdf, Exec::serial);
}

std::vector<double> sample_transform_coordinate(const UnitVector& u, std::size_t k,
                                                std::size_t n_samples, StreamSpec stream,
                                                Exec exec) {
    const Dimension dim = u.dim();
    const std::size_t d = dim.value();
    if (k >= d) throw ContractError("coordinate index out of range");
    std::vector<double> out(n_samples);
    for_each_index(chunk_count(n_samples), exec, [&](std::size_t c) {
        std::vector<double> scratch(d);
        SignVector d1(d), d2(d);
        const std::size_t end = std::min(n_samples, (c + 1) * kChunkSize);
        for (std::size_t i = c * kChunkSize; i < end; ++i) {
            const StreamSpec s = stream.child(i);
            StreamRng r1 = s.rng(Layer::d1);
            StreamRng r2 = s.rng(Layer::d2);
            draw_signs(r1, d1);
            draw_signs(r2, d2);
            out[i] = two_block_coordinate(u.coords(), d1, d2, k, scratch, dim);
        }
    });
    return out;
}

double marginal_ks_experiment(const UnitVector& u, std::size_t k, std::size_t n_samples,
                              StreamSpec stream, Exec exec) {
    if (n_samples == 0) throw ContractError("marginal_ks_experiment: n_samples must be positive");
    const std::size_t d = u.size();
    if (d < 2) throw ContractError("marginal_ks_experiment: requires d >= 2");
    EmpiricalCdf ecdf(sample_transform_coordinate(u, k, n_samples, stream, exec));
    return ks_statistic(ecdf, [d](double t) { return analytic::sphere_coordinate_cdf(t, d); }, exec);
}

McEstimate e1_wasserstein_mc(Dimension dim, std::size_t n_samples, StreamSpec stream, Exec exec) {
    if (n_samples < 2) throw ContractError("e1_wasserstein_mc: requires n >= 2");
    const std::size_t d = dim.value();
    const RunningStats stats = chunked_reduce<RunningStats>(
        n_samples, exec,
        [&](std::size_t begin, std::size_t end) {
            RunningStats part;
            std::vector<double> x(d);
            for (std::size_t i = begin; i < end; ++i) {
                StreamRng rng = stream.child(i).rng(Layer::gauss);
                sample_uniform_sphere_into(x, rng);
                part.push(hypercube_distance(x));
            }
            return part;
        },
        [](RunningStats& acc, const RunningStats& p) { acc.merge(p); }, RunningStats{});
    return {stats.mean, stats.standard_error()};
}

namespace {

struct MomentPartial {
    std::vector<RunningStats> first;
    std::vector<RunningStats> second;
    std::vector<RunningStats> cross;

    void merge(const MomentPartial& o) {
        for (std::size_t i = 0; i < first.size(); ++i) first[i].merge(o.first[i]);
        for (std::size_t i = 0; i < second.size(); ++i) second[i].merge(o.second[i]);
        for (std::size_t i = 0; i < cross.size(); ++i) cross[i].merge(o.cross[i]);
    }
};

}  // namespace

MomentSummary transform_moment_summary(
    const UnitVector& u, std::size_t n_samples, StreamSpec stream,
    std::span<const std::pair<std::size_t, std::size_t>> cross_pairs, Exec exec) {
    if (n_samples < 2) throw ContractError("transform_moment_summary: requires n >= 2");
    const Dimension dim = u.dim();
    const std::size_t d = dim.value();
    for (auto [k, r] : cross_pairs) {
        if (k >= d || r >= d) throw ContractError("cross-moment index out of range");
    }
    const MomentPartial empty{std::vector<RunningStats>(d), std::vector<RunningStats>(d),
                              std::vector<RunningStats>(cross_pairs.size())};
    const MomentPartial total = chunked_reduce<MomentPartial>(
        n_samples, exec,
        [&](std::size_t begin, std::size_t end) {
            MomentPartial part = empty;
            std::vector<double> t(d);
            SignVector d1(d), d2(d);
            for (std::size_t i = begin; i < end; ++i) {
                const StreamSpec s = stream.child(i);
                StreamRng r1 = s.rng(Layer::d1);
                StreamRng r2 = s.rng(Layer::d2);
                draw_signs(r1, d1);
                draw_signs(r2, d2);
                two_block_transform_into(u.coords(), d1, d2, t, dim);
                for (std::size_t k = 0; k < d; ++k) {
                    part.first[k].push(t[k]);
                    part.second[k].push(t[k] * t[k]);
                }
                for (std::size_t p = 0; p < cross_pairs.size(); ++p) {
                    part.cross[p].push(t[cross_pairs[p].first] * t[cross_pairs[p].second]);
                }
            }
            return part;
        },
        [](MomentPartial& acc, const MomentPartial& p) { acc.merge(p); }, empty);

    MomentSummary out;
    out.n = n_samples;
    for (std::size_t k = 0; k < d; ++k) {
        out.mean.push_back(total.first[k].mean);
        out.mean_se.push_back(total.first[k].standard_error());
        out.second_moments.push_back(total.second[k].mean);
        out.second_se.push_back(total.second[k].standard_error());
    }
    for (std::size_t p = 0; p < cross_pairs.size(); ++p) {
        out.cross_moments.push_back({cross_pairs[p].first, cross_pairs[p].second,
                                     total.cross[p].mean, total.cross[p].standard_error()});
    }
    return out;
}

FourthMomentCheck b_coefficient_fourth_moment(const UnitVector& u, std::size_t n_samples,
                                              StreamSpec stream, Exec exec) {
    if (n_samples == 0) throw ContractError("b_coefficient_fourth_moment: n must be positive");
    const Dimension dim = u.dim();
    const std::size_t d = dim.value();
    const double inv_sqrt_d = 1.0 / std::sqrt(double(d));
    const RunningStats stats = chunked_reduce<RunningStats>(
        n_samples, exec,
        [&](std::size_t begin, std::size_t end) {
            RunningStats part;
            std::vector<double> b(d);
            SignVector d2(d);
            for (std::size_t i = begin; i < end; ++i) {
                StreamRng r2 = stream.child(i).rng(Layer::d2);
                draw_signs(r2, d2);
                std::copy(u.coords().begin(), u.coords().end(), b.begin());
                apply_sign_diagonal_in_place(b, d2);
                fwht_in_place(b, dim);
                double s4 = 0.0;
                for (double v : b) {
                    const double bj = v * inv_sqrt_d;
                    const double sq = bj * bj;
                    s4 += sq * sq;
                }
                part.push(s4);
            }
            return part;
        },
        [](RunningStats& acc, const RunningStats& p) { acc.merge(p); }, RunningStats{});
    double sum_u4 = 0.0;
    for (double v : u.coords()) sum_u4 += v * v * v * v;
    return {stats.mean, stats.standard_error(), (3.0 - 2.0 * sum_u4) / double(d)};
}

}  // namespace hadarot
