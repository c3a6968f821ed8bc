#pragma once

// Closed-form quantities: special functions, the exact law of one coordinate
// of a uniform point on S^{d-1}, and the deterministic bound functionals for
// the structured two-block rotation.

#include <cstddef>
#include <vector>

#include "hadarot/hadamard.hpp"

namespace hadarot::analytic {

/// Constants of the marginal (Kolmogorov) and global (Wasserstein) results.
struct PaperConstants {
    double c_g;           // 5 * 3^{4/5} / pi^{7/5}
    double c3;            // sqrt(2) / pi^{1/4}
    double c_pos;         // c_g + c3
    double w1_asymptote;  // sqrt(2 (1 - sqrt(2/pi)))
};

const PaperConstants& constants();

/// ln Gamma(x), x > 0.
double log_gamma(double x);

/// Gamma(x) / Gamma(x + delta) without forming either Gamma value.
double gamma_ratio(double x, double delta);

/// I_x(a, b). Throws ContractError outside a, b > 0, x in [0, 1].
double regularized_incomplete_beta(double a, double b, double x);

/// Standard normal CDF.
double normal_cdf(double z);

/// CDF of one coordinate of a uniform point on S^{d-1}; S_1^2 ~ Beta(1/2, (d-1)/2).
/// Requires d >= 2.
double sphere_coordinate_cdf(double t, std::size_t d);

/// E|S_1| = Gamma(d/2) / (sqrt(pi) Gamma((d+1)/2)).
double sphere_coordinate_abs_mean(std::size_t d);

/// sqrt(2/pi) * sqrt(d / (d-1)), the upper bound on E[|X|_1 / sqrt d].
double m_d(std::size_t d);

/// An admissible (d, t) pair: 0 <= t <= 1 - m_d.
class BoundParams {
public:
    /// Throws AdmissibilityError if t is outside [0, 1 - m_d].
    BoundParams(std::size_t d, double t);

    std::size_t d() const noexcept { return d_; }
    double t() const noexcept { return t_; }

private:
    std::size_t d_;
    double t_;
};

/// sqrt(2 (1 - m_d - t)) * (1 - exp(-(d-1) t^2 / 2)).
double wasserstein_lower_bound(const BoundParams& p);

struct LowerBoundMax {
    double t_star;
    double value;
};

/// t values scanned when maximizing the lower bound: `grid_size` uniform points on
/// [0, 1 - m_d] followed by alpha / sqrt(d - 1) for alpha = 1..40 (when admissible).
/// Empty for d = 2, where 1 - m_d < 0; the maximum is then 0 with t_star = NaN.
std::vector<double> lower_bound_t_grid(std::size_t d, std::size_t grid_size = 2000);

LowerBoundMax wasserstein_lower_bound_max(std::size_t d, std::size_t grid_size = 2000);

/// sqrt(2 - 2 sqrt(d) E|S_1|): exact W1 between X(e1) and T(e1) in expectation form.
double wasserstein_upper_bound_e1(std::size_t d);

/// C_pos * d^{-1/5}. Accepts any real d >= 1.
double positive_bound(double d);

/// C_G * d^{-1/5}.
double gauss_bridge_bound(double d);

/// C_3 * d^{-1/4}.
double sphere_gauss_bound(double d);

/// Mean of the chi distribution with `dof` degrees of freedom.
double chi_mean(std::size_t dof);

/// E[(X - sqrt(dof))^2] = 2 dof - 2 sqrt(dof) E[X] for X ~ chi_dof.
double chi_centered_second_moment(std::size_t dof);

}  // namespace hadarot::analytic
