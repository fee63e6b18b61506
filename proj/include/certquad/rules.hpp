// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "certquad/geometry.hpp"

#include <span>
#include <string>
#include <vector>

namespace certquad {

/// Convex-combination rule in relative coordinates: nodes u_1 <= ... <= u_n
/// in [0, 1] and weights p_i > 0 summing to 1. On [a, b] the rule samples
/// x_i = a + u_i (b - a). Coincident nodes are allowed; zero weights are not
/// and must be dropped by the caller.
class QuadratureRule {
public:
    QuadratureRule(std::vector<double> nodes_rel, std::vector<double> weights, std::string name = {});

    std::span<const double> nodes_rel() const noexcept { return nodes_; }
    std::span<const double> weights() const noexcept { return weights_; }
    std::size_t size() const noexcept { return nodes_.size(); }
    const std::string& name() const noexcept { return name_; }

    /// Absolute nodes on the given interval.
    std::vector<double> nodes(const Interval& interval) const;

    /// False when the weights fall outside the admissibility window
    /// P_i in [u_i, u_{i+1}]; the Corollary-style shortcuts are then off and
    /// only the general bounds apply.
    bool within_window() const noexcept { return within_window_; }

private:
    std::vector<double> nodes_;
    std::vector<double> weights_;
    std::string name_;
    bool within_window_ = true;
};

QuadratureRule make_rule(std::vector<double> nodes_rel, std::vector<double> weights, std::string name = {});

/// P_i = p_1 + ... + p_i, Pbar_i = 1 - P_i, and the kernel break values
/// xi_i = P_i b + Pbar_i a for i = 1 .. n-1 (index 0 in the vectors).
struct CumulativeWeights {
    std::vector<double> P;
    std::vector<double> Pbar;
    std::vector<double> xi;
};

CumulativeWeights cumulative(const QuadratureRule& rule, const Interval& interval);

/// True iff every xi_i lies in [x_i, x_{i+1}].
bool corollary_condition_holds(const QuadratureRule& rule, const Interval& interval);

/// Named presets. Parameters (relative positions or weights):
///   ostrowski(s)                   node s, weight 1
///   weighted_endpoints(t)          nodes (0, 1), weights (1 - t, t)
///   trapezoid                      weighted_endpoints(1/2)
///   quarter_points(t)              nodes (1/4, 3/4), weights (t, 1 - t)
///   qt                             quarter_points(1/2)
///   three_point(alpha, beta, u1, u2, u3)
///   endpoints_midpoint(alpha, beta) nodes (0, 1/2, 1)
///   qs                             endpoints_midpoint(1/4, 1/2)
///   simpson                        endpoints_midpoint(1/6, 4/6)
///   quarter_three_point(alpha, beta) nodes (1/4, 1/2, 3/4)
QuadratureRule preset(const std::string& name, std::span<const double> params = {});

/// Parses "name" or "name:p1,p2,...".
QuadratureRule parse_rule(const std::string& text);

std::vector<std::string> preset_names();

}  // namespace certquad
