// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "certquad/geometry.hpp"
#include "certquad/normed_space.hpp"
#include "certquad/rules.hpp"

#include <cstddef>
#include <vector>

namespace certquad {

/// Single-node Peano kernel: t - a for t <= x, t - b for t > x.
double peano_kernel(const Interval& interval, double x, double t);

/// The weighted kernel S(t) = sum_i p_i k(x_i, t), stored in its collapsed
/// piecewise-affine form: t - a on [a, x_1], t - xi_i on (x_i, x_{i+1}],
/// t - b on (x_n, b]. A point t = x_i belongs to the piece on its left.
class PeanoKernel {
public:
    PeanoKernel(QuadratureRule rule, Interval interval);

    const QuadratureRule& rule() const noexcept { return rule_; }
    const Interval& interval() const noexcept { return interval_; }
    const CumulativeWeights& weights() const noexcept { return cumulative_; }
    const std::vector<double>& nodes() const noexcept { return nodes_; }

    /// A node t = x_i belongs to the piece on its left, except that t = b
    /// always takes the closing piece t - b, so S(a) = S(b) = 0. Throws
    /// std::out_of_range for t outside [a, b].
    double operator()(double t) const;

    /// Offset c such that S(t) = t - c on piece `k` (0 = [a, x_1], n = (x_n, b]).
    double piece_offset(std::size_t k) const;

private:
    QuadratureRule rule_;
    Interval interval_;
    CumulativeWeights cumulative_;
    std::vector<double> nodes_;
};

double kernel_value(const PeanoKernel& kernel, double t);

/// Residual norm of the kernel identity
///   sum p_i f(x_i) - I(f)/(b - a) = I(S f')/(b - a)
/// with both integrals taken by composite Simpson at `oracle_resolution`
/// subintervals (the kernel side piece by piece, since S jumps at the nodes).
double identity_residual(const VectorFunction& fn, const QuadratureRule& rule, const Interval& interval,
                         std::size_t oracle_resolution);

}  // namespace certquad
