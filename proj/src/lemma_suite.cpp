#include "hadarot/lemma_suite.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fmt/format.h>

#include "hadarot/analytic.hpp"
#include "hadarot/error.hpp"

namespace hadarot::lemmas {

namespace {

// FNV-1a over the raw bytes of the values.
class GridHash {
public:
    void add(double v) noexcept { add_bits(std::bit_cast<std::uint64_t>(v)); }
    void add(std::uint64_t v) noexcept { add_bits(v); }
    std::string hex() const { return fmt::format("{:016x}", h_); }

private:
    void add_bits(std::uint64_t bits) noexcept {
        for (int i = 0; i < 8; ++i) {
            h_ ^= (bits >> (8 * i)) & 0xffu;
            h_ *= 0x100000001b3ULL;
        }
    }
    std::uint64_t h_ = 0xcbf29ce484222325ULL;
};

std::string seed_hash(StreamSpec stream, std::initializer_list<std::uint64_t> sizes) {
    GridHash h;
    h.add(stream.master_seed);
    h.add(stream.stream);
    for (auto s : sizes) h.add(s);
    return h.hex();
}

double uniform_in(StreamRng& rng, double lo, double hi) { return lo + (hi - lo) * rng.uniform(); }

std::size_t scaled(double scale, std::size_t n, std::size_t floor = 2) {
    return std::max(floor, static_cast<std::size_t>(std::llround(scale * double(n))));
}

std::uint64_t tag(const char* name) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const char* p = name; *p; ++p) {
        h ^= static_cast<unsigned char>(*p);
        h *= 0x100000001b3ULL;
    }
    return h;
}

VerifierReport new_report(std::string name, bool statistical = false) {
    VerifierReport rep;
    rep.verifier = std::move(name);
    rep.statistical = statistical;
    return rep;
}

}  // namespace

void VerifierReport::record(double slack, double tolerance) {
    ++instances;
    min_slack = std::min(min_slack, slack);
    if (slack < -tolerance) ++violations;
}

double VerifierReport::detail(const std::string& key) const {
    for (const auto& [k, v] : details) {
        if (k == key) return v;
    }
    throw ContractError("no detail named " + key + " in " + verifier);
}

void Tolerances::validate() const {
    for (double v : {slack, se_multiplier, ks_allowance, moment_mean_se, moment_second_se}) {
        if (!std::isfinite(v) || v < 0.0) throw ConfigError("tolerances must be finite and non-negative");
    }
}

void SuiteConfig::validate() const {
    tolerances.validate();
    if (!std::isfinite(sample_scale) || !(sample_scale > 0.0)) {
        throw ConfigError("sample scale must be positive");
    }
}

VerifierReport verify_product_difference(std::size_t trials, std::size_t max_d, StreamSpec stream,
                                         const Tolerances& tol) {
    auto rep = new_report("product-difference");
    rep.grid_hash = seed_hash(stream, {trials, max_d});
    StreamRng rng = stream.rng(Layer::aux);
    std::vector<double> a, b;
    for (std::size_t d = 1; d <= max_d; ++d) {
        for (double gamma : {0.5, 1.0, 2.0}) {
            a.resize(d);
            b.resize(d);
            for (std::size_t trial = 0; trial < trials; ++trial) {
                for (std::size_t j = 0; j < d; ++j) {
                    a[j] = uniform_in(rng, -gamma, gamma);
                    // Every tenth pair shares a prefix with a, so some differences vanish.
                    b[j] = (trial % 10 == 0 && j + 1 < d) ? a[j] : uniform_in(rng, -gamma, gamma);
                }
                double pa = 1.0, pb = 1.0, l1 = 0.0;
                for (std::size_t j = 0; j < d; ++j) {
                    pa *= a[j];
                    pb *= b[j];
                    l1 += std::abs(a[j] - b[j]);
                }
                const double rhs = std::pow(gamma, double(d - 1)) * l1;
                rep.record(rhs - std::abs(pa - pb), tol.slack);
            }
        }
    }
    rep.finish();
    return rep;
}

VerifierReport verify_cos_exp(double lo, double hi, std::size_t points, const Tolerances& tol) {
    if (points < 2 || !(hi > lo)) throw ContractError("verify_cos_exp: need a non-empty grid");
    auto rep = new_report("cos-exp");
    GridHash h;
    double tight_x = lo;
    for (std::size_t i = 0; i < points; ++i) {
        const double x = lo + (hi - lo) * double(i) / double(points - 1);
        h.add(x);
        const double lhs = std::abs(std::cos(x) - std::exp(-0.5 * x * x));
        const double rhs = x * x * x * x / 6.0;
        const double slack = rhs - lhs;
        if (slack < rep.min_slack) tight_x = x;
        rep.record(slack, tol.slack);
    }
    rep.grid_hash = h.hex();
    rep.details = {{"tightest_x", tight_x}};
    rep.finish();
    return rep;
}

VerifierReport verify_lipschitz_l1(std::size_t trials, std::size_t dim, StreamSpec stream,
                                   const Tolerances& tol) {
    auto rep = new_report("lipschitz-l1");
    rep.grid_hash = seed_hash(stream, {trials, dim});
    StreamRng rng = stream.rng(Layer::gauss);
    std::vector<double> x(dim), y(dim);
    const double root = std::sqrt(double(dim));
    for (std::size_t trial = 0; trial < trials; ++trial) {
        for (std::size_t j = 0; j < dim; ++j) {
            x[j] = rng.gaussian();
            y[j] = trial % 2 == 0 ? rng.gaussian() : x[j] + 1e-3 * rng.gaussian();
        }
        const double lhs = std::abs(l1_norm(x) - l1_norm(y)) / root;
        rep.record(euclidean_distance(x, y) - lhs, tol.slack);
    }
    rep.finish();
    return rep;
}

VerifierReport verify_distance_to_set_lipschitz(std::size_t trials, std::size_t dim,
                                                StreamSpec stream, const Tolerances& tol) {
    auto rep = new_report("distance-to-set-lipschitz");
    rep.grid_hash = seed_hash(stream, {trials, dim});
    const Dimension dimension(dim);
    StreamRng rng = stream.rng(Layer::gauss);
    std::vector<double> x(dim), y(dim);
    double closed_form_gap = 0.0;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        sample_uniform_sphere_into(x, rng);
        switch (trial % 3) {
            case 0:
                sample_uniform_sphere_into(y, rng);
                break;
            case 1: {
                for (std::size_t j = 0; j < dim; ++j) y[j] = x[j] + 1e-3 * rng.gaussian();
                const double n = euclidean_norm(y);
                for (double& v : y) v /= n;
                break;
            }
            default:
                y = sample_hypercube(dimension, rng).coords();
                break;
        }
        const double lhs = std::abs(hypercube_distance(x) - hypercube_distance(y));
        rep.record(euclidean_distance(x, y) - lhs, tol.slack);
        // The closed form must agree with the explicit distance to the nearest vertex.
        const auto vertex = nearest_hypercube_vertex(x).coords();
        closed_form_gap =
            std::max(closed_form_gap, std::abs(euclidean_distance(x, vertex) - hypercube_distance(x)));
    }
    rep.details = {{"max_closed_form_gap", closed_form_gap}};
    if (closed_form_gap > 1e-9) ++rep.violations;
    rep.finish();
    return rep;
}

VerifierReport verify_spherical_concentration(Dimension dim, const std::vector<double>& t_grid,
                                              std::size_t n_samples, StreamSpec stream,
                                              const Tolerances& tol) {
    if (n_samples == 0) throw ContractError("verify_spherical_concentration: n must be positive");
    auto rep = new_report("spherical-concentration", true);
    const std::size_t d = dim.value();
    GridHash h;
    h.add(stream.master_seed);
    h.add(stream.stream);
    h.add(std::uint64_t(n_samples));
    for (double t : t_grid) h.add(t);
    rep.grid_hash = h.hex();

    std::vector<double> values(n_samples);
    const double root = std::sqrt(double(d));
    for_each_index(chunk_count(n_samples), Exec::parallel, [&](std::size_t c) {
        std::vector<double> x(d);
        const std::size_t end = std::min(n_samples, (c + 1) * kChunkSize);
        for (std::size_t i = c * kChunkSize; i < end; ++i) {
            StreamRng rng = stream.child(i).rng(Layer::gauss);
            sample_uniform_sphere_into(x, rng);
            values[i] = l1_norm(x) / root;
        }
    });
    const double mean = root * analytic::sphere_coordinate_abs_mean(d);
    const double n = double(n_samples);
    for (double t : t_grid) {
        const auto exceed = std::count_if(values.begin(), values.end(),
                                          [&](double v) { return v - mean > t; });
        const double p = double(exceed) / n;
        const double se = std::sqrt(p * (1.0 - p) / n);
        const double bound = std::exp(-0.5 * double(d - 1) * t * t);
        rep.record(bound + tol.se_multiplier * se - p, 0.0);
        rep.details.emplace_back(fmt::format("tail@t={}", t), p);
        rep.details.emplace_back(fmt::format("bound@t={}", t), bound);
    }
    rep.finish();
    return rep;
}

SupDifference sphere_gauss_sup_difference(std::size_t d, std::size_t points) {
    const double root = std::sqrt(double(d));
    SupDifference best{0.0, 0.0};
    for (std::size_t i = 0; i < points; ++i) {
        const double t = -1.0 + 2.0 * double(i) / double(points - 1);
        const double diff =
            std::abs(analytic::sphere_coordinate_cdf(t, d) - analytic::normal_cdf(t * root));
        if (diff > best.value) best = {diff, t};
    }
    return best;
}

VerifierReport verify_sphere_gauss_ks(Dimension mc_dim, std::size_t n_samples,
                                      const std::vector<std::size_t>& grid_dims,
                                      StreamSpec stream, const Tolerances& tol) {
    auto rep = new_report("sphere-gauss-ks", true);
    rep.grid_hash = seed_hash(stream, {mc_dim.value(), n_samples});

    for (std::size_t d : grid_dims) {
        const auto sup = sphere_gauss_sup_difference(d);
        const double bound = analytic::sphere_gauss_bound(double(d));
        rep.record(bound - sup.value, tol.slack);
        rep.details.emplace_back(fmt::format("grid_sup@d={}", d), sup.value);
        rep.details.emplace_back(fmt::format("grid_argmax@d={}", d), sup.at_t);
        rep.details.emplace_back(fmt::format("bound@d={}", d), bound);
    }

    const std::size_t d = mc_dim.value();
    std::vector<double> first(n_samples);
    for_each_index(chunk_count(n_samples), Exec::parallel, [&](std::size_t c) {
        std::vector<double> x(d);
        const std::size_t end = std::min(n_samples, (c + 1) * kChunkSize);
        for (std::size_t i = c * kChunkSize; i < end; ++i) {
            StreamRng rng = stream.child(i).rng(Layer::gauss);
            sample_uniform_sphere_into(x, rng);
            first[i] = x[0];
        }
    });
    const double root = std::sqrt(double(d));
    const double ks = ks_statistic(EmpiricalCdf(std::move(first)),
                                   [root](double t) { return analytic::normal_cdf(t * root); },
                                   Exec::parallel);
    const double allowance = tol.ks_allowance / std::sqrt(double(n_samples));
    const double bound = analytic::sphere_gauss_bound(double(d));
    rep.record(bound + allowance - ks, 0.0);
    rep.details.emplace_back(fmt::format("mc_ks@d={}", d), ks);
    rep.details.emplace_back(fmt::format("bound@d={}", d), bound);
    rep.finish();
    return rep;
}

VerifierReport verify_gautschi_and_chi(std::size_t x_points, std::size_t max_log2_dof,
                                       const Tolerances& tol) {
    auto rep = new_report("gautschi-chi");
    GridHash h;
    const double log_lo = std::log(1e-3), log_hi = std::log(1e4);
    for (std::size_t i = 0; i < x_points; ++i) {
        const double x = std::exp(log_lo + (log_hi - log_lo) * double(i) / double(x_points - 1));
        for (int si = 1; si <= 9; ++si) {
            const double s = 0.1 * si;
            h.add(x);
            h.add(s);
            const double ratio = 1.0 / analytic::gamma_ratio(x + s, 1.0 - s);
            // Strict inequalities: the margin itself must be positive.
            rep.record(ratio - std::pow(x, 1.0 - s), -tol.slack);
            rep.record(std::pow(x + 1.0, 1.0 - s) - ratio, -tol.slack);
        }
    }
    double largest = 0.0, smallest = 2.0;
    for (std::size_t m = 0; m <= max_log2_dof; ++m) {
        const std::size_t dof = std::size_t{1} << m;
        h.add(std::uint64_t(dof));
        const double moment = analytic::chi_centered_second_moment(dof);
        rep.record(2.0 - moment, tol.slack);
        rep.record(moment, -tol.slack);  // strictly positive
        largest = std::max(largest, moment);
        smallest = std::min(smallest, moment);
    }
    rep.grid_hash = h.hex();
    rep.details = {{"chi_moment_max", largest},
                   {"chi_moment_min", smallest},
                   {"chi_moment@1", analytic::chi_centered_second_moment(1)},
                   {"chi_moment@max_dof",
                    analytic::chi_centered_second_moment(std::size_t{1} << max_log2_dof)}};
    rep.finish();
    return rep;
}

const char* to_string(InputKind kind) {
    switch (kind) {
        case InputKind::e1: return "e1";
        case InputKind::ones: return "ones";
        case InputKind::random: return "random";
    }
    return "?";
}

UnitVector make_input(InputKind kind, Dimension dim, StreamSpec stream) {
    switch (kind) {
        case InputKind::e1: return UnitVector::basis(dim, 0);
        case InputKind::ones: return UnitVector::ones(dim);
        case InputKind::random: {
            StreamRng rng = stream.rng(Layer::gauss);
            return sample_uniform_sphere(dim, rng);
        }
    }
    throw ContractError("unknown input kind");
}

VerifierReport verify_gauss_bridge_ks(Dimension dim, const std::vector<InputKind>& inputs,
                                      std::size_t n_samples, StreamSpec stream,
                                      const Tolerances& tol) {
    auto rep = new_report("gauss-bridge-ks", true);
    rep.grid_hash = seed_hash(stream, {dim.value(), n_samples, inputs.size()});
    const double root = std::sqrt(double(dim.value()));
    const double bound = analytic::gauss_bridge_bound(double(dim.value()));
    const double allowance = tol.ks_allowance / std::sqrt(double(n_samples));
    for (std::size_t idx = 0; idx < inputs.size(); ++idx) {
        const StreamSpec s = stream.child(idx);
        const UnitVector u = make_input(inputs[idx], dim, s.child(0));
        auto samples = sample_transform_coordinate(u, 0, n_samples, s.child(1));
        const double ks = ks_statistic(EmpiricalCdf(std::move(samples)),
                                       [root](double t) { return analytic::normal_cdf(t * root); },
                                       Exec::parallel);
        rep.record(bound + allowance - ks, 0.0);
        rep.details.emplace_back(fmt::format("ks@{}", to_string(inputs[idx])), ks);
    }
    rep.details.emplace_back("bound", bound);
    rep.finish();
    return rep;
}

VerifierReport verify_mean_covariance(Dimension dim, const std::vector<InputKind>& inputs,
                                      std::size_t n_samples, std::size_t n_pairs,
                                      StreamSpec stream, const Tolerances& tol) {
    auto rep = new_report("mean-cov", true);
    rep.grid_hash = seed_hash(stream, {dim.value(), n_samples, n_pairs});
    const std::size_t d = dim.value();
    const double target = 1.0 / double(d);
    for (std::size_t idx = 0; idx < inputs.size(); ++idx) {
        const StreamSpec s = stream.child(idx);
        const UnitVector u = make_input(inputs[idx], dim, s.child(0));
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        StreamRng pick = s.child(2).rng(Layer::aux);
        while (pairs.size() < n_pairs && d > 1) {
            const std::size_t k = pick() % d, r = pick() % d;
            if (k != r) pairs.emplace_back(k, r);
        }
        const auto summary = transform_moment_summary(u, n_samples, s.child(1), pairs);
        double worst_mean = 0.0, worst_second = 0.0, worst_cross = 0.0;
        for (std::size_t k = 0; k < d; ++k) {
            const double se = summary.mean_se[k];
            rep.record(tol.moment_mean_se * se - std::abs(summary.mean[k]), 0.0);
            // e1 and similar inputs can make T_k^2 deterministic (SE = 0); allow rounding.
            const double se2 = summary.second_se[k];
            rep.record(tol.moment_second_se * se2 + 1e-12 - std::abs(summary.second_moments[k] - target), 0.0);
            if (se > 0) worst_mean = std::max(worst_mean, std::abs(summary.mean[k]) / se);
            if (se2 > 0) worst_second = std::max(worst_second, std::abs(summary.second_moments[k] - target) / se2);
        }
        for (const auto& c : summary.cross_moments) {
            rep.record(tol.moment_second_se * c.standard_error + 1e-12 - std::abs(c.value), 0.0);
            if (c.standard_error > 0) worst_cross = std::max(worst_cross, std::abs(c.value) / c.standard_error);
        }
        const std::string name = to_string(inputs[idx]);
        rep.details.emplace_back("max_mean_z@" + name, worst_mean);
        rep.details.emplace_back("max_second_z@" + name, worst_second);
        rep.details.emplace_back("max_cross_z@" + name, worst_cross);
    }
    rep.finish();
    return rep;
}

VerifierReport verify_coefficient_fourth_moment(Dimension dim, const std::vector<InputKind>& inputs,
                                                std::size_t n_samples, StreamSpec stream,
                                                const Tolerances& tol) {
    auto rep = new_report("coeff-control", true);
    rep.grid_hash = seed_hash(stream, {dim.value(), n_samples});
    const double cap = 3.0 / double(dim.value());
    for (std::size_t idx = 0; idx < inputs.size(); ++idx) {
        const StreamSpec s = stream.child(idx);
        const UnitVector u = make_input(inputs[idx], dim, s.child(0));
        const auto check = b_coefficient_fourth_moment(u, n_samples, s.child(1));
        const double allowance = tol.moment_second_se * check.standard_error + 1e-12;
        rep.record(allowance - std::abs(check.estimate - check.exact), 0.0);
        rep.record(cap + allowance - check.estimate, 0.0);
        rep.record(cap - check.exact, tol.slack);
        const std::string name = to_string(inputs[idx]);
        rep.details.emplace_back("estimate@" + name, check.estimate);
        rep.details.emplace_back("exact@" + name, check.exact);
    }
    rep.details.emplace_back("cap", cap);
    rep.finish();
    return rep;
}

VerifierReport verify_conditional_representation(std::size_t trials, std::size_t max_d,
                                                 StreamSpec stream, const Tolerances&) {
    auto rep = new_report("conditional-representation");
    rep.grid_hash = seed_hash(stream, {trials, max_d});
    constexpr double kIdentityTol = 1e-9;
    for (std::size_t d = 2; d <= max_d; d *= 2) {
        const Dimension dim(d);
        const double root = std::sqrt(double(d));
        for (std::size_t trial = 0; trial < trials; ++trial) {
            const StreamSpec s = stream.child(stream_index_of({d, trial}));
            StreamRng g = s.rng(Layer::gauss);
            const UnitVector u = sample_uniform_sphere(dim, g);
            const RotationSeed seed = RotationSeed::from_stream(dim, s.master_seed, s.stream);
            const UnitVector t = two_block_transform(u, seed);
            // b = (1/sqrt d) H D2 u, explicitly.
            std::vector<double> b(d, 0.0);
            for (std::size_t j = 0; j < d; ++j) {
                for (std::size_t l = 0; l < d; ++l) {
                    b[j] += hadamard_entry(j, l) * seed.d2[l] * u[l];
                }
                b[j] /= root;
            }
            double norm_sq = 0.0;
            for (double v : b) norm_sq += v * v;
            rep.record(kIdentityTol - std::abs(norm_sq - 1.0), 0.0);
            for (std::size_t k = 0; k < d; ++k) {
                double sum = 0.0;
                for (std::size_t j = 0; j < d; ++j) {
                    const double xi = hadamard_entry(k, j) * seed.d1[j];
                    sum += xi * b[j];
                }
                rep.record(kIdentityTol - std::abs(root * t[k] - sum), 0.0);
            }
        }
    }
    rep.finish();
    return rep;
}

VerifierReport verify_hadamard_kernel(std::size_t trials, std::size_t max_d, StreamSpec stream) {
    auto rep = new_report("hadamard-kernel");
    rep.grid_hash = seed_hash(stream, {trials, max_d});
    StreamRng rng = stream.rng(Layer::gauss);
    constexpr double kRelTol = 1e-12;
    for (std::size_t d = 2; d <= max_d; d *= 2) {
        const Dimension dim(d);
        std::vector<double> x(d);
        for (std::size_t trial = 0; trial < trials; ++trial) {
            for (double& v : x) v = rng.gaussian();
            const auto fast = fwht(x, dim);
            const auto slow = naive_hadamard_multiply(x, dim);
            const double scale = euclidean_norm(slow);
            rep.record(kRelTol - euclidean_distance(fast, slow) / scale, 0.0);
            auto twice = fast;
            fwht_in_place(twice, dim);
            double err = 0.0;
            for (std::size_t i = 0; i < d; ++i) err = std::max(err, std::abs(twice[i] - double(d) * x[i]));
            rep.record(1e-10 - err / (double(d) * euclidean_norm(x)), 0.0);
        }
    }
    rep.finish();
    return rep;
}

const std::vector<NamedVerifier>& registry() {
    using K = InputKind;
    static const std::vector<NamedVerifier> verifiers = {
        {"hadamard-kernel",
         [](const SuiteConfig& c) {
             return verify_hadamard_kernel(100, 256, {c.master_seed, tag("hadamard-kernel")});
         }},
        {"product-difference",
         [](const SuiteConfig& c) {
             return verify_product_difference(scaled(c.sample_scale, 10000), 8,
                                              {c.master_seed, tag("product-difference")},
                                              c.tolerances);
         }},
        {"cos-exp",
         [](const SuiteConfig& c) { return verify_cos_exp(-20.0, 20.0, 1000000, c.tolerances); }},
        {"lipschitz-l1",
         [](const SuiteConfig& c) {
             return verify_lipschitz_l1(scaled(c.sample_scale, 10000), 128,
                                        {c.master_seed, tag("lipschitz-l1")}, c.tolerances);
         }},
        {"distance-to-set-lipschitz",
         [](const SuiteConfig& c) {
             return verify_distance_to_set_lipschitz(scaled(c.sample_scale, 10000), 64,
                                                     {c.master_seed, tag("distance-to-set")},
                                                     c.tolerances);
         }},
        {"spherical-concentration",
         [](const SuiteConfig& c) {
             return verify_spherical_concentration(
                 Dimension(1024), {0.01, 0.02, 0.03, 0.05, 0.1, 0.15, 0.2},
                 scaled(c.sample_scale, 1000000), {c.master_seed, tag("spherical-concentration")},
                 c.tolerances);
         }},
        {"sphere-gauss-ks",
         [](const SuiteConfig& c) {
             return verify_sphere_gauss_ks(Dimension(1024), scaled(c.sample_scale, 100000),
                                           {4, 16, 64, 256, 1024, 4096},
                                           {c.master_seed, tag("sphere-gauss-ks")}, c.tolerances);
         }},
        {"gautschi-chi",
         [](const SuiteConfig& c) { return verify_gautschi_and_chi(400, 20, c.tolerances); }},
        {"gauss-bridge-ks",
         [](const SuiteConfig& c) {
             auto small = verify_gauss_bridge_ks(Dimension(16), {K::e1, K::ones, K::random},
                                                 scaled(c.sample_scale, 100000),
                                                 {c.master_seed, tag("gauss-bridge-16")},
                                                 c.tolerances);
             auto large = verify_gauss_bridge_ks(Dimension(1024), {K::e1, K::ones, K::random},
                                                 scaled(c.sample_scale, 100000),
                                                 {c.master_seed, tag("gauss-bridge-1024")},
                                                 c.tolerances);
             small.instances += large.instances;
             small.violations += large.violations;
             small.min_slack = std::min(small.min_slack, large.min_slack);
             for (auto& [k, v] : small.details) k += "@d=16";
             for (auto& [k, v] : large.details) small.details.emplace_back(k + "@d=1024", v);
             small.finish();
             return small;
         }},
        {"mean-cov",
         [](const SuiteConfig& c) {
             return verify_mean_covariance(Dimension(64), {K::e1, K::ones, K::random},
                                           scaled(c.sample_scale, 200000), 10,
                                           {c.master_seed, tag("mean-cov")}, c.tolerances);
         }},
        {"coeff-control",
         [](const SuiteConfig& c) {
             return verify_coefficient_fourth_moment(Dimension(32), {K::e1, K::ones, K::random},
                                                     scaled(c.sample_scale, 100000),
                                                     {c.master_seed, tag("coeff-control")},
                                                     c.tolerances);
         }},
        {"conditional-representation",
         [](const SuiteConfig& c) {
             return verify_conditional_representation(20, 64, {c.master_seed, tag("cond-rep")},
                                                      c.tolerances);
         }},
    };
    return verifiers;
}

std::vector<VerifierReport> run_suite(const SuiteConfig& config, const std::string& only) {
    config.validate();
    std::vector<VerifierReport> reports;
    bool matched = false;
    for (const auto& v : registry()) {
        if (!only.empty() && v.name != only) continue;
        matched = true;
        reports.push_back(v.run(config));
    }
    if (!matched) throw ConfigError("unknown verifier: " + only);
    return reports;
}

}  // namespace hadarot::lemmas
