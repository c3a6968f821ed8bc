#pragma once

// Test-only reference computations, independent of the library code paths
// they check: adaptive Simpson quadrature, brute-force KS, vertex enumeration.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

namespace oracle {

namespace detail {

inline double simpson(const std::function<double(double)>& f, double a, double b, double fa,
                      double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

inline double adaptive(const std::function<double(double)>& f, double a, double b, double fa,
                       double fm, double fb, double whole, double eps, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(f, a, m, fa, flm, fm);
    const double right = simpson(f, m, b, fm, frm, fb);
    if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * eps) {
        return left + right + (left + right - whole) / 15.0;
    }
    return adaptive(f, a, m, fa, flm, fm, left, 0.5 * eps, depth - 1) +
           adaptive(f, m, b, fm, frm, fb, right, 0.5 * eps, depth - 1);
}

}  // namespace detail

/// Adaptive Simpson quadrature of a smooth integrand on [a, b].
inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double eps = 1e-12, int max_depth = 40) {
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    return detail::adaptive(f, a, b, fa, fm, fb, detail::simpson(f, a, b, fa, fm, fb), eps, max_depth);
}

/// sup_t |F_n(t) - F(t)| by checking every sample point and its left limit,
/// counting the empirical CDF from scratch each time (O(n^2)).
inline double brute_force_ks(const std::vector<double>& samples,
                             const std::function<double(double)>& cdf) {
    const double n = double(samples.size());
    double worst = 0.0;
    for (double t : samples) {
        std::size_t at_or_below = 0, below = 0;
        for (double s : samples) {
            if (s <= t) ++at_or_below;
            if (s < t) ++below;
        }
        const double f = cdf(t);
        worst = std::max({worst, std::abs(double(at_or_below) / n - f), std::abs(double(below) / n - f)});
    }
    return worst;
}

/// Index of the vertex of {+-1/sqrt d}^d maximizing <x, y>, by enumeration;
/// bit i of the result set means coordinate i is negative.
inline unsigned long best_vertex_by_enumeration(const std::vector<double>& x) {
    const std::size_t d = x.size();
    double best = -std::numeric_limits<double>::infinity();
    unsigned long arg = 0;
    for (unsigned long mask = 0; mask < (1ul << d); ++mask) {
        double dot = 0.0;
        for (std::size_t i = 0; i < d; ++i) dot += ((mask >> i) & 1ul) ? -x[i] : x[i];
        if (dot > best) {
            best = dot;
            arg = mask;
        }
    }
    return arg;
}

/// Explicit Sylvester matrix built by the block recursion H_2n = [[H, H], [H, -H]].
inline std::vector<std::vector<long>> sylvester_by_recursion(std::size_t d) {
    std::vector<std::vector<long>> h{{1}};
    while (h.size() < d) {
        const std::size_t n = h.size();
        std::vector<std::vector<long>> next(2 * n, std::vector<long>(2 * n));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                next[i][j] = h[i][j];
                next[i][j + n] = h[i][j];
                next[i + n][j] = h[i][j];
                next[i + n][j + n] = -h[i][j];
            }
        }
        h = std::move(next);
    }
    return h;
}

}  // namespace oracle
