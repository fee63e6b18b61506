// SPDX-License-Identifier: Apache-2.0
// Brute-force reference computations used only by the tests. Nothing here
// calls into the closed forms or integration paths under test.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <random>
#include <vector>

namespace certquad::testing {

/// Midpoint Riemann sum with n cells, Neumaier-compensated.
inline double riemann(const std::function<double(double)>& g, double lo, double hi, std::size_t n)
{
    if (lo == hi)
        return 0.0;
    const double h = (hi - lo) / static_cast<double>(n);
    double sum = 0.0, comp = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double y = g(lo + (static_cast<double>(k) + 0.5) * h);
        const double t = sum + y;
        comp += std::abs(sum) >= std::abs(y) ? (sum - t) + y : (y - t) + sum;
        sum = t;
    }
    return (sum + comp) * h;
}

/// Plain composite Simpson with n (even) subintervals, written out
/// independently of the library helpers.
inline double simpson_ref(const std::function<double(double)>& g, double lo, double hi, std::size_t n)
{
    if (lo == hi)
        return 0.0;
    const double h = (hi - lo) / static_cast<double>(n);
    long double s = g(lo) + g(hi);
    for (std::size_t k = 1; k < n; ++k)
        s += (k % 2 ? 4.0L : 2.0L) * g(lo + static_cast<double>(k) * h);
    return static_cast<double>(s * h / 3.0L);
}

/// Integral of |t - c|^p over [a, b] by quadrature. Pieces that touch c are
/// integrated after t = c +- L u^2, which turns the endpoint singularity of
/// the derivatives into a smooth polynomial-like integrand.
inline double mu_numeric(double p, double a, double c, double b, std::size_t n = 4000)
{
    auto touching = [&](double len) {
        // int_0^len s^p ds  with s = len u^2.
        return simpson_ref([&](double u) { return std::pow(len, p + 1.0) * std::pow(u, 2.0 * p) * 2.0 * u; }, 0.0,
                           1.0, n);
    };
    auto g = [&](double t) { return std::pow(std::abs(t - c), p); };
    if (c <= a || c >= b) {
        if (c == a)
            return touching(b - a);
        if (c == b)
            return touching(b - a);
        return simpson_ref(g, a, b, n);
    }
    return touching(c - a) + touching(b - c);
}

inline double grid_max(const std::function<double(double)>& g, double lo, double hi, std::size_t n)
{
    double m = g(lo);
    for (std::size_t k = 1; k <= n; ++k)
        m = std::max(m, g(lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n)));
    return m;
}

inline bool close_rel(double x, double y, double rel)
{
    return std::abs(x - y) <= rel * std::max(std::abs(x), std::abs(y));
}

}  // namespace certquad::testing
