#pragma once

// Numerical verifiers for the inequalities behind the marginal and global
// results. Each verifier evaluates its inequality on deterministic grids or
// randomized instances and reports the smallest margin it saw.

#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "hadarot/metrics.hpp"

namespace hadarot::lemmas {

struct VerifierReport {
    std::string verifier;
    std::uint64_t instances = 0;
    std::uint64_t violations = 0;
    /// Smallest (bound - observed) over all instances; negative means a violation
    /// before tolerances/allowances are applied.
    double min_slack = std::numeric_limits<double>::infinity();
    bool pass = false;
    bool statistical = false;
    /// Hash of the deterministic grid or of (seed, sizes) for randomized checks.
    std::string grid_hash;
    /// Extra named values (tightest point, statistics, bounds).
    std::vector<std::pair<std::string, double>> details;

    void record(double slack, double tolerance);
    void finish() { pass = violations == 0; }
    double detail(const std::string& key) const;
};

/// Allowances shared by all verifiers.
struct Tolerances {
    double slack = 1e-12;        // additive slack for deterministic inequalities
    double se_multiplier = 3.0;  // binomial-SE multiplier for tail checks
    double ks_allowance = 2.0;   // KS statistics may exceed their bound by ks_allowance / sqrt(n)
    double moment_mean_se = 4.0;
    double moment_second_se = 5.0;

    /// Throws ConfigError when any entry is negative or non-finite.
    void validate() const;
};

VerifierReport verify_product_difference(std::size_t trials, std::size_t max_d, StreamSpec stream,
                                         const Tolerances& tol = {});

VerifierReport verify_cos_exp(double lo, double hi, std::size_t points,
                              const Tolerances& tol = {});

VerifierReport verify_lipschitz_l1(std::size_t trials, std::size_t dim, StreamSpec stream,
                                   const Tolerances& tol = {});

VerifierReport verify_distance_to_set_lipschitz(std::size_t trials, std::size_t dim,
                                                StreamSpec stream, const Tolerances& tol = {});

VerifierReport verify_spherical_concentration(Dimension dim, const std::vector<double>& t_grid,
                                              std::size_t n_samples, StreamSpec stream,
                                              const Tolerances& tol = {});

/// Monte Carlo KS at `mc_dim` plus a deterministic sup over a t-grid of
/// |F_d(t) - Phi(t sqrt d)| for each d in `grid_dims`.
VerifierReport verify_sphere_gauss_ks(Dimension mc_dim, std::size_t n_samples,
                                      const std::vector<std::size_t>& grid_dims,
                                      StreamSpec stream, const Tolerances& tol = {});

/// Largest |F_d(t) - Phi(t sqrt d)| on a uniform grid of `points` values in [-1, 1].
struct SupDifference {
    double value;
    double at_t;
};
SupDifference sphere_gauss_sup_difference(std::size_t d, std::size_t points = 20001);

VerifierReport verify_gautschi_and_chi(std::size_t x_points, std::size_t max_log2_dof,
                                       const Tolerances& tol = {});

enum class InputKind { e1, ones, random };
const char* to_string(InputKind kind);
UnitVector make_input(InputKind kind, Dimension dim, StreamSpec stream);

VerifierReport verify_gauss_bridge_ks(Dimension dim, const std::vector<InputKind>& inputs,
                                      std::size_t n_samples, StreamSpec stream,
                                      const Tolerances& tol = {});

/// E[T(u)] = 0, E[T_k^2] = 1/d, E[T_k T_r] = 0 within SE multiples, for each input kind.
VerifierReport verify_mean_covariance(Dimension dim, const std::vector<InputKind>& inputs,
                                      std::size_t n_samples, std::size_t n_pairs,
                                      StreamSpec stream, const Tolerances& tol = {});

/// E[sum b_j^4] matches (3 - 2 sum u^4)/d and stays below 3/d (+ SE allowance).
VerifierReport verify_coefficient_fourth_moment(Dimension dim, const std::vector<InputKind>& inputs,
                                                std::size_t n_samples, StreamSpec stream,
                                                const Tolerances& tol = {});

/// sqrt(d) [T(u)]_k = sum_j xi_j b_j with sum_j b_j^2 = 1, reconstructed explicitly.
VerifierReport verify_conditional_representation(std::size_t trials, std::size_t max_d,
                                                 StreamSpec stream, const Tolerances& tol = {});

/// FWHT against the O(d^2) oracle, and H H = d I.
VerifierReport verify_hadamard_kernel(std::size_t trials, std::size_t max_d, StreamSpec stream);

struct SuiteConfig {
    std::uint64_t master_seed = 20240917;
    Tolerances tolerances;
    /// Multiplies every Monte Carlo sample count (1.0 = full size).
    double sample_scale = 1.0;

    void validate() const;
};

struct NamedVerifier {
    std::string name;
    std::function<VerifierReport(const SuiteConfig&)> run;
};

/// Every verifier in the order `hadarot verify` runs them.
const std::vector<NamedVerifier>& registry();

/// Runs the registry (or just `only`, when non-empty). Throws ConfigError on an unknown name.
std::vector<VerifierReport> run_suite(const SuiteConfig& config, const std::string& only = {});

}  // namespace hadarot::lemmas
