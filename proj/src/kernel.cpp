// SPDX-License-Identifier: Apache-2.0
#include "certquad/kernel.hpp"

#include "certquad/reference.hpp"

#include <stdexcept>

namespace certquad {

double peano_kernel(const Interval& interval, double x, double t)
{
    return t <= x ? t - interval.a() : t - interval.b();
}

PeanoKernel::PeanoKernel(QuadratureRule rule, Interval interval)
    : rule_(std::move(rule)), interval_(interval), cumulative_(cumulative(rule_, interval_)),
      nodes_(rule_.nodes(interval_))
{
}

double PeanoKernel::piece_offset(std::size_t k) const
{
    if (k == 0)
        return interval_.a();
    if (k >= nodes_.size())
        return interval_.b();
    return cumulative_.xi[k - 1];
}

double PeanoKernel::operator()(double t) const
{
    if (!interval_.contains(t))
        throw std::out_of_range("kernel argument outside [a, b]");
    if (t == interval_.b())
        return 0.0;
    // Piece k is (x_k, x_{k+1}] with x_0 = a; count the nodes strictly left of t.
    std::size_t k = 0;
    while (k < nodes_.size() && nodes_[k] < t)
        ++k;
    return t - piece_offset(k);
}

double kernel_value(const PeanoKernel& kernel, double t) { return kernel(t); }

double identity_residual(const VectorFunction& fn, const QuadratureRule& rule, const Interval& interval,
                         std::size_t oracle_resolution)
{
    if (!fn.has_pointwise_derivative())
        throw std::invalid_argument("identity residual needs a derivative evaluator");
    if (interval.degenerate())
        throw std::invalid_argument("identity residual needs a < b");

    const PeanoKernel kernel{rule, interval};
    const double inv_len = 1.0 / interval.length();
    const auto& x = kernel.nodes();
    const auto weights = rule.weights();

    Element lhs = Element::zero(fn.space);
    for (std::size_t i = 0; i < x.size(); ++i)
        lhs = add(lhs, scale(weights[i], fn.eval(x[i])));
    const Element mean = scale(inv_len, simpson_integral([&](double t) { return fn.eval(t); }, fn.space, interval,
                                                         oracle_resolution));
    lhs = subtract(lhs, mean);

    // On piece k the kernel is exactly t - c_k; integrating that closed form
    // keeps the jump at each node out of the Simpson sums.
    Element rhs = Element::zero(fn.space);
    for (std::size_t k = 0; k <= x.size(); ++k) {
        const double lo = k == 0 ? interval.a() : x[k - 1];
        const double hi = k == x.size() ? interval.b() : x[k];
        if (lo == hi)
            continue;
        const double c = kernel.piece_offset(k);
        const Element piece = simpson_integral([&](double t) { return scale(t - c, fn.derivative_at(t)); }, fn.space,
                                               Interval{lo, hi}, oracle_resolution);
        rhs = add(rhs, piece);
    }
    rhs = scale(inv_len, rhs);
    return subtract(lhs, rhs).norm();
}

}  // namespace certquad
