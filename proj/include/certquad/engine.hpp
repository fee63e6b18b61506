// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "certquad/bounds.hpp"
#include "certquad/geometry.hpp"
#include "certquad/normed_space.hpp"
#include "certquad/rules.hpp"

#include <cstddef>
#include <vector>

namespace certquad {

inline constexpr std::size_t default_oracle_resolution = 65536;

struct Panel {
    Interval interval;
    Element approximation;
    ErrorCertificate certificate;
};

/// Approximation with its certificate. For composite and adaptive runs the
/// certificate bound is the fold of the panel bounds in left-to-right order.
struct QuadratureResult {
    Element approximation;
    ErrorCertificate certificate;
    std::vector<Panel> panels;
    std::size_t evaluations = 0;
    bool converged = true;
};

struct EngineOptions {
    std::size_t resolution = default_resolution;
    /// Worker threads for per-panel work; results do not depend on it.
    std::size_t threads = 1;
};

/// (b - a) * sum_i p_i f(a + u_i (b - a)), accumulated in node order.
Element apply_rule(const VectorFunction& fn, const QuadratureRule& rule, const Interval& interval);

QuadratureResult integrate_composite(const VectorFunction& fn, const QuadratureRule& rule, const Partition& partition,
                                     const NormRegime& regime, int level, const EngineOptions& options = {});

/// Worst-first bisection driven by per-panel level-2 certificates. Stops once
/// the summed bound is <= tol or the panel budget is spent; in the latter
/// case `converged` is false and the partial result is returned.
QuadratureResult integrate_adaptive(const VectorFunction& fn, const QuadratureRule& rule, const Interval& interval,
                                    const NormRegime& regime, double tol, std::size_t max_panels,
                                    const EngineOptions& options = {});

/// Component-wise composite Simpson with `resolution` (even) subintervals.
/// Test and reporting oracle only.
Element oracle_integral(const VectorFunction& fn, const Interval& interval,
                        std::size_t resolution = default_oracle_resolution);

}  // namespace certquad
