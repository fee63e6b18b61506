// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "certquad/geometry.hpp"
#include "certquad/normed_space.hpp"
#include "certquad/rules.hpp"

#include <cstddef>
#include <vector>

namespace certquad {

inline constexpr std::size_t default_resolution = 4096;

/// Estimate of the seminorm of t -> ||f'(t)|| over an interval.
///
/// `certified` is true only when the value is a rigorous upper bound: an
/// analytic envelope or an exact zero on a degenerate interval. Sampled
/// values (Simpson integrals or grid maxima) are never certified.
struct SeminormEstimate {
    double value = 0.0;
    NormRegime regime = NormRegime::linf();
    Interval interval{0.0, 0.0};
    bool certified = false;
    std::size_t resolution = 0;

    friend bool operator==(const SeminormEstimate&, const SeminormEstimate&) = default;
};

/// Per-segment estimates over [a, x_1], [x_1, x_2], ..., [x_n, b] plus one
/// global estimate over [a, b], recomputed rather than aggregated.
struct SeminormProfile {
    std::vector<SeminormEstimate> segments;
    SeminormEstimate global;
    NormRegime regime() const noexcept { return global.regime; }
};

/// Segments induced by a rule's nodes: n + 1 intervals tiling [a, b].
std::vector<Interval> rule_segments(const QuadratureRule& rule, const Interval& interval);

/// L1/Lp: composite Simpson of ||f'||^p on `resolution` panels, then the
/// 1/p root. L∞: the analytic envelope when available (certified), otherwise
/// the maximum over resolution + 1 equispaced samples. With no pointwise
/// derivative, L1/Lp fall back to envelope * length^(1/p) (certified).
SeminormEstimate seminorm(const VectorFunction& fn, const Interval& interval, const NormRegime& regime,
                          std::size_t resolution = default_resolution);

SeminormProfile seminorm_profile(const VectorFunction& fn, const QuadratureRule& rule, const Interval& interval,
                                 const NormRegime& regime, std::size_t resolution = default_resolution);

}  // namespace certquad
