// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "certquad/derivative_norms.hpp"
#include "certquad/geometry.hpp"
#include "certquad/normed_space.hpp"
#include "certquad/rules.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace certquad {

/// Upper bound for || integral of f over [a, b] - (b - a) sum p_i f(x_i) ||.
///
/// Level 1 integrates the kernel-weighted derivative norm directly, level 2
/// multiplies per-segment seminorms by per-segment geometry factors, level 3
/// multiplies one global seminorm by one geometry factor. For levels 1 and 2
/// `bound` is the ordered sum of `segment_contributions`; level 3 records the
/// factor in `geometry_factor` instead.
struct ErrorCertificate {
    double bound = 0.0;
    int level = 3;
    NormRegime regime = NormRegime::linf();
    std::vector<double> segment_contributions;
    bool certified = false;
    std::string rule_name;
    Interval interval{0.0, 0.0};
    std::vector<SeminormEstimate> seminorms;
    std::optional<double> geometry_factor;
};

ErrorCertificate bound_level1(const VectorFunction& fn, const QuadratureRule& rule, const Interval& interval,
                              std::size_t resolution = default_resolution);

ErrorCertificate bound_level2(const SeminormProfile& profile, const QuadratureRule& rule, const Interval& interval);

ErrorCertificate bound_level3(const SeminormEstimate& global, const QuadratureRule& rule, const Interval& interval);

/// The level-3 factor multiplying the global seminorm.
double level3_geometry_factor(const QuadratureRule& rule, const Interval& interval, const NormRegime& regime);

/// Shortcut forms valid when corollary_condition_holds: h_i / 2 + |xi_i - m_i|
/// for L1, the two-sided power sums for Lp and h_i^2 / 4 + (xi_i - m_i)^2 for
/// L∞. Used to cross-check the general path; throws std::domain_error when the
/// condition fails.
ErrorCertificate corollary_level2(const SeminormProfile& profile, const QuadratureRule& rule,
                                  const Interval& interval);
ErrorCertificate corollary_level3(const SeminormEstimate& global, const QuadratureRule& rule,
                                  const Interval& interval);

/// Tabulated coefficient c in  error <= c (b - a)^k ||f'||  for the named
/// rules trapezoid, qt, qs and simpson. The exponent k is closed_form_power.
double closed_form_constant(const std::string& rule_name, const NormRegime& regime);
double closed_form_power(const NormRegime& regime);

/// Per-segment estimates plus the requested level, in one call.
ErrorCertificate certify(const VectorFunction& fn, const QuadratureRule& rule, const Interval& interval,
                         const NormRegime& regime, int level, std::size_t resolution = default_resolution);

}  // namespace certquad
