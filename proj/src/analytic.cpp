#include "hadarot/analytic.hpp"

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "hadarot/error.hpp"

namespace hadarot::analytic {

namespace {

using std::numbers::pi;

// Evaluate in double rather than promoting to long double; the promoted path is
// several times slower and the marginal experiment calls the CDF per sample.
using DoublePolicy = boost::math::policies::policy<boost::math::policies::promote_double<false>>;

void require_d_at_least(std::size_t d, std::size_t min, const char* what) {
    if (d < min) {
        throw ContractError(std::string(what) + ": requires d >= " + std::to_string(min) +
                            ", got " + std::to_string(d));
    }
}

}  // namespace

const PaperConstants& constants() {
    static const PaperConstants c = [] {
        PaperConstants k{};
        k.c_g = 5.0 * std::pow(3.0, 0.8) / std::pow(pi, 1.4);
        k.c3 = std::sqrt(2.0) / std::pow(pi, 0.25);
        k.c_pos = k.c_g + k.c3;
        k.w1_asymptote = std::sqrt(2.0 * (1.0 - std::sqrt(2.0 / pi)));
        return k;
    }();
    return c;
}

double log_gamma(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) throw ContractError("log_gamma: requires x > 0");
    return boost::math::lgamma(x);
}

double gamma_ratio(double x, double delta) {
    if (!(x > 0.0) || !(x + delta > 0.0)) throw ContractError("gamma_ratio: requires x > 0");
    return boost::math::tgamma_delta_ratio(x, delta);
}

double regularized_incomplete_beta(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0)) throw ContractError("incomplete beta: requires a, b > 0");
    if (!(x >= 0.0 && x <= 1.0)) throw ContractError("incomplete beta: requires x in [0, 1]");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;
    return boost::math::ibeta(a, b, x, DoublePolicy());
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

double sphere_coordinate_cdf(double t, std::size_t d) {
    require_d_at_least(d, 2, "sphere_coordinate_cdf");
    if (t <= -1.0) return 0.0;
    if (t >= 1.0) return 1.0;
    if (t == 0.0) return 0.5;
    const double mass = regularized_incomplete_beta(0.5, 0.5 * double(d - 1), t * t);
    return t > 0.0 ? 0.5 * (1.0 + mass) : 0.5 * (1.0 - mass);
}

double sphere_coordinate_abs_mean(std::size_t d) {
    require_d_at_least(d, 2, "sphere_coordinate_abs_mean");
    return gamma_ratio(0.5 * double(d), 0.5) / std::sqrt(pi);
}

double m_d(std::size_t d) {
    require_d_at_least(d, 2, "m_d");
    const double dd = double(d);
    return std::sqrt(2.0 / pi) * std::sqrt(dd / (dd - 1.0));
}

BoundParams::BoundParams(std::size_t d, double t) : d_(d), t_(t) {
    require_d_at_least(d, 2, "BoundParams");
    const double t_max = 1.0 - m_d(d);
    if (!(t >= 0.0 && t <= t_max)) {
        throw AdmissibilityError("t = " + std::to_string(t) + " is not admissible for d = " +
                                 std::to_string(d) + " (need 0 <= t <= " +
                                 std::to_string(t_max) + ")");
    }
}

double wasserstein_lower_bound(const BoundParams& p) {
    const double radicand = 2.0 * (1.0 - m_d(p.d()) - p.t());
    const double mass = -std::expm1(-0.5 * double(p.d() - 1) * p.t() * p.t());
    return std::sqrt(std::max(radicand, 0.0)) * mass;
}

std::vector<double> lower_bound_t_grid(std::size_t d, std::size_t grid_size) {
    const double t_max = 1.0 - m_d(d);
    std::vector<double> grid;
    if (t_max < 0.0) return grid;  // d = 2: no admissible t
    grid.reserve(grid_size + 40);
    if (grid_size == 1) {
        grid.push_back(0.0);
    } else {
        for (std::size_t i = 0; i < grid_size; ++i) {
            grid.push_back(t_max * double(i) / double(grid_size - 1));
        }
    }
    const double root = std::sqrt(double(d - 1));
    for (int alpha = 1; alpha <= 40; ++alpha) {
        const double t = alpha / root;
        if (t <= t_max) grid.push_back(t);
    }
    return grid;
}

LowerBoundMax wasserstein_lower_bound_max(std::size_t d, std::size_t grid_size) {
    LowerBoundMax best{std::numeric_limits<double>::quiet_NaN(), 0.0};
    for (double t : lower_bound_t_grid(d, grid_size)) {
        const double v = wasserstein_lower_bound(BoundParams(d, t));
        if (v > best.value) best = {t, v};
    }
    return best;
}

double wasserstein_upper_bound_e1(std::size_t d) {
    const double radicand = 2.0 - 2.0 * std::sqrt(double(d)) * sphere_coordinate_abs_mean(d);
    return std::sqrt(std::max(radicand, 0.0));
}

double positive_bound(double d) {
    if (!(d >= 1.0)) throw ContractError("positive_bound: requires d >= 1");
    return constants().c_pos * std::pow(d, -0.2);
}

double gauss_bridge_bound(double d) { return constants().c_g * std::pow(d, -0.2); }

double sphere_gauss_bound(double d) { return constants().c3 * std::pow(d, -0.25); }

double chi_mean(std::size_t dof) {
    require_d_at_least(dof, 1, "chi_mean");
    return std::numbers::sqrt2 / gamma_ratio(0.5 * double(dof), 0.5);
}

double chi_centered_second_moment(std::size_t dof) {
    const double k = double(dof);
    return 2.0 * k - 2.0 * std::sqrt(k) * chi_mean(dof);
}

}  // namespace hadarot::analytic
