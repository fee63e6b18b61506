// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>

namespace certquad {

/// Neumaier-compensated running sum. Order of `add` calls fixes the result.
class CompensatedSum {
public:
    void add(double x) noexcept
    {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

inline double ordered_sum(std::span<const double> xs) noexcept
{
    CompensatedSum s;
    for (double x : xs)
        s.add(x);
    return s.value();
}

/// Composite Simpson rule for a real integrand on [lo, hi] with `panels`
/// Simpson panels (2 * panels subintervals, 2 * panels + 1 samples).
template <class F>
double simpson(F&& g, double lo, double hi, std::size_t panels)
{
    if (panels == 0)
        throw std::invalid_argument("simpson needs at least one panel");
    if (lo == hi)
        return 0.0;
    const std::size_t n = 2 * panels;
    const double h = (hi - lo) / static_cast<double>(n);
    CompensatedSum ends, odd, even;
    ends.add(g(lo));
    ends.add(g(hi));
    for (std::size_t k = 1; k < n; ++k) {
        const double t = lo + static_cast<double>(k) * h;
        if (k % 2 == 1)
            odd.add(g(t));
        else
            even.add(g(t));
    }
    return h / 3.0 * (ends.value() + 4.0 * odd.value() + 2.0 * even.value());
}

}  // namespace certquad
