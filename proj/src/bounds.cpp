// SPDX-License-Identifier: Apache-2.0
#include "certquad/bounds.hpp"

#include "certquad/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace certquad {

namespace {

// Above this conjugate exponent, q-th powers go through logarithms.
constexpr double log_space_q = 30.0;

// factor * seminorm with 0 * anything = 0.
double product(double factor, double seminorm) { return seminorm == 0.0 || factor == 0.0 ? 0.0 : factor * seminorm; }

bool all_certified(const std::vector<SeminormEstimate>& estimates)
{
    return std::all_of(estimates.begin(), estimates.end(), [](const SeminormEstimate& e) { return e.certified; });
}

double log_sum_exp(const std::vector<double>& logs)
{
    const double hi = *std::max_element(logs.begin(), logs.end());
    if (hi == -std::numeric_limits<double>::infinity())
        return hi;
    CompensatedSum s;
    for (double l : logs)
        s.add(std::exp(l - hi));
    return hi + std::log(s.value());
}

// Weighted-kernel integral over [lo, hi] of |t - c| ||f'(t)||, split at c when
// c is interior so each Simpson piece sees a smooth weight.
double weighted_segment(const VectorFunction& fn, double lo, double hi, double c, std::size_t resolution)
{
    if (lo == hi)
        return 0.0;
    auto g = [&](double t) { return std::abs(t - c) * fn.derivative_norm(t); };
    if (lo < c && c < hi)
        return simpson(g, lo, c, resolution) + simpson(g, c, hi, resolution);
    return simpson(g, lo, hi, resolution);
}

void check_profile(const SeminormProfile& profile, const QuadratureRule& rule, const Interval& interval)
{
    const auto segs = rule_segments(rule, interval);
    if (profile.segments.size() != segs.size())
        throw std::invalid_argument("seminorm profile does not align with rule segments");
    for (std::size_t i = 0; i < segs.size(); ++i) {
        if (profile.segments[i].interval != segs[i])
            throw std::invalid_argument("seminorm profile segment differs from rule segment");
        if (profile.segments[i].regime != profile.global.regime)
            throw std::invalid_argument("seminorm profile mixes regimes");
    }
    if (profile.global.interval != interval)
        throw std::invalid_argument("seminorm profile global interval differs from the rule interval");
}

ErrorCertificate base_certificate(int level, const NormRegime& regime, const QuadratureRule& rule,
                                  const Interval& interval)
{
    ErrorCertificate c;
    c.level = level;
    c.regime = regime;
    c.rule_name = rule.name();
    c.interval = interval;
    return c;
}

}  // namespace

ErrorCertificate bound_level1(const VectorFunction& fn, const QuadratureRule& rule, const Interval& interval,
                              std::size_t resolution)
{
    if (!fn.has_pointwise_derivative())
        throw std::invalid_argument("level-1 bound needs a derivative evaluator");
    if (resolution < 1)
        throw std::invalid_argument("level-1 resolution must be positive");

    ErrorCertificate cert = base_certificate(1, NormRegime::l1(), rule, interval);
    const auto x = rule.nodes(interval);
    const auto cw = cumulative(rule, interval);
    const std::size_t n = x.size();

    cert.segment_contributions.push_back(weighted_segment(fn, interval.a(), x[0], interval.a(), resolution));
    for (std::size_t i = 0; i + 1 < n; ++i)
        cert.segment_contributions.push_back(weighted_segment(fn, x[i], x[i + 1], cw.xi[i], resolution));
    cert.segment_contributions.push_back(weighted_segment(fn, x[n - 1], interval.b(), interval.b(), resolution));

    cert.bound = ordered_sum(cert.segment_contributions);
    cert.certified = interval.degenerate();
    return cert;
}

ErrorCertificate bound_level2(const SeminormProfile& profile, const QuadratureRule& rule, const Interval& interval)
{
    check_profile(profile, rule, interval);
    const NormRegime& regime = profile.regime();
    ErrorCertificate cert = base_certificate(2, regime, rule, interval);
    cert.seminorms = profile.segments;
    cert.certified = all_certified(profile.segments);

    const auto x = rule.nodes(interval);
    const auto cw = cumulative(rule, interval);
    const std::size_t n = x.size();
    const double left = x[0] - interval.a();
    const double right = interval.b() - x[n - 1];

    std::vector<double> factors(n + 1);
    switch (regime.kind()) {
    case RegimeKind::L1:
        factors[0] = left;
        for (std::size_t i = 0; i + 1 < n; ++i)
            factors[i + 1] = mu(Exponent::infinity(), x[i], cw.xi[i], x[i + 1]);
        factors[n] = right;
        break;
    case RegimeKind::Lp: {
        const double q = regime.q();
        const double root_q1 = std::pow(q + 1.0, 1.0 / q);
        factors[0] = std::pow(left, 1.0 + 1.0 / q) / root_q1;
        for (std::size_t i = 0; i + 1 < n; ++i)
            factors[i + 1] = q > log_space_q ? std::exp(log_mu(q, x[i], cw.xi[i], x[i + 1]) / q)
                                             : std::pow(mu(q, x[i], cw.xi[i], x[i + 1]), 1.0 / q);
        factors[n] = std::pow(right, 1.0 + 1.0 / q) / root_q1;
        break;
    }
    case RegimeKind::Linf:
        factors[0] = 0.5 * left * left;
        for (std::size_t i = 0; i + 1 < n; ++i)
            factors[i + 1] = mu(1.0, x[i], cw.xi[i], x[i + 1]);
        factors[n] = 0.5 * right * right;
        break;
    }

    cert.segment_contributions.resize(n + 1);
    for (std::size_t k = 0; k <= n; ++k)
        cert.segment_contributions[k] = product(factors[k], profile.segments[k].value);
    cert.bound = ordered_sum(cert.segment_contributions);
    return cert;
}

double level3_geometry_factor(const QuadratureRule& rule, const Interval& interval, const NormRegime& regime)
{
    const auto x = rule.nodes(interval);
    const auto cw = cumulative(rule, interval);
    const std::size_t n = x.size();
    const double left = x[0] - interval.a();
    const double right = interval.b() - x[n - 1];

    switch (regime.kind()) {
    case RegimeKind::L1: {
        double m = std::max(left, right);
        for (std::size_t i = 0; i + 1 < n; ++i)
            m = std::max(m, mu(Exponent::infinity(), x[i], cw.xi[i], x[i + 1]));
        return m;
    }
    case RegimeKind::Lp: {
        const double q = regime.q();
        if (q > log_space_q) {
            // Discrete Hölder aggregate in log space: log of each q-power term.
            constexpr double neg_inf = -std::numeric_limits<double>::infinity();
            const double log_q1 = std::log(q + 1.0);
            std::vector<double> logs;
            logs.push_back(left > 0.0 ? (q + 1.0) * std::log(left) - log_q1 : neg_inf);
            for (std::size_t i = 0; i + 1 < n; ++i)
                logs.push_back(log_mu(q, x[i], cw.xi[i], x[i + 1]));
            logs.push_back(right > 0.0 ? (q + 1.0) * std::log(right) - log_q1 : neg_inf);
            const double lse = log_sum_exp(logs);
            return lse == neg_inf ? 0.0 : std::exp(lse / q);
        }
        CompensatedSum s;
        s.add(std::pow(left, q + 1.0) / (q + 1.0));
        for (std::size_t i = 0; i + 1 < n; ++i)
            s.add(mu(q, x[i], cw.xi[i], x[i + 1]));
        s.add(std::pow(right, q + 1.0) / (q + 1.0));
        return std::pow(s.value(), 1.0 / q);
    }
    case RegimeKind::Linf: {
        CompensatedSum s;
        s.add(0.5 * left * left);
        for (std::size_t i = 0; i + 1 < n; ++i)
            s.add(mu(1.0, x[i], cw.xi[i], x[i + 1]));
        s.add(0.5 * right * right);
        return s.value();
    }
    }
    throw std::logic_error("unreachable regime");
}

ErrorCertificate bound_level3(const SeminormEstimate& global, const QuadratureRule& rule, const Interval& interval)
{
    if (global.interval != interval)
        throw std::invalid_argument("global seminorm was estimated over a different interval");
    ErrorCertificate cert = base_certificate(3, global.regime, rule, interval);
    cert.seminorms = {global};
    cert.certified = global.certified;
    const double factor = level3_geometry_factor(rule, interval, global.regime);
    cert.geometry_factor = factor;
    cert.bound = product(factor, global.value);
    return cert;
}

ErrorCertificate corollary_level2(const SeminormProfile& profile, const QuadratureRule& rule,
                                  const Interval& interval)
{
    if (!corollary_condition_holds(rule, interval))
        throw std::domain_error("corollary shortcut needs xi_i in [x_i, x_{i+1}]");
    check_profile(profile, rule, interval);
    const NormRegime& regime = profile.regime();
    ErrorCertificate cert = base_certificate(2, regime, rule, interval);
    cert.seminorms = profile.segments;
    cert.certified = all_certified(profile.segments);

    const auto x = rule.nodes(interval);
    const auto cw = cumulative(rule, interval);
    const std::size_t n = x.size();
    const double left = x[0] - interval.a();
    const double right = interval.b() - x[n - 1];
    std::vector<double> c(n + 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double h = x[i + 1] - x[i];
        const double offset = cw.xi[i] - 0.5 * (x[i] + x[i + 1]);
        switch (regime.kind()) {
        case RegimeKind::L1:
            c[i + 1] = 0.5 * h + std::abs(offset);
            break;
        case RegimeKind::Lp: {
            const double q = regime.q();
            c[i + 1] = std::pow(std::pow(cw.xi[i] - x[i], q + 1.0) + std::pow(x[i + 1] - cw.xi[i], q + 1.0),
                                1.0 / q) /
                       std::pow(q + 1.0, 1.0 / q);
            break;
        }
        case RegimeKind::Linf:
            c[i + 1] = 0.25 * h * h + offset * offset;
            break;
        }
    }
    switch (regime.kind()) {
    case RegimeKind::L1:
        c[0] = left;
        c[n] = right;
        break;
    case RegimeKind::Lp: {
        const double q = regime.q();
        c[0] = std::pow(left, 1.0 + 1.0 / q) / std::pow(q + 1.0, 1.0 / q);
        c[n] = std::pow(right, 1.0 + 1.0 / q) / std::pow(q + 1.0, 1.0 / q);
        break;
    }
    case RegimeKind::Linf:
        c[0] = 0.5 * left * left;
        c[n] = 0.5 * right * right;
        break;
    }
    cert.segment_contributions.resize(n + 1);
    for (std::size_t k = 0; k <= n; ++k)
        cert.segment_contributions[k] = product(c[k], profile.segments[k].value);
    cert.bound = ordered_sum(cert.segment_contributions);
    return cert;
}

ErrorCertificate corollary_level3(const SeminormEstimate& global, const QuadratureRule& rule,
                                  const Interval& interval)
{
    if (!corollary_condition_holds(rule, interval))
        throw std::domain_error("corollary shortcut needs xi_i in [x_i, x_{i+1}]");
    if (global.interval != interval)
        throw std::invalid_argument("global seminorm was estimated over a different interval");
    ErrorCertificate cert = base_certificate(3, global.regime, rule, interval);
    cert.seminorms = {global};
    cert.certified = global.certified;

    const auto x = rule.nodes(interval);
    const auto cw = cumulative(rule, interval);
    const std::size_t n = x.size();
    const double left = x[0] - interval.a();
    const double right = interval.b() - x[n - 1];
    double factor = 0.0;
    switch (global.regime.kind()) {
    case RegimeKind::L1: {
        double max_h = 0.0;
        double max_offset = 0.0;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            max_h = std::max(max_h, x[i + 1] - x[i]);
            max_offset = std::max(max_offset, std::abs(cw.xi[i] - 0.5 * (x[i] + x[i + 1])));
        }
        factor = std::max({left, 0.5 * max_h + max_offset, right});
        break;
    }
    case RegimeKind::Lp: {
        const double q = global.regime.q();
        CompensatedSum s;
        s.add(std::pow(left, q + 1.0));
        for (std::size_t i = 0; i + 1 < n; ++i) {
            s.add(std::pow(cw.xi[i] - x[i], q + 1.0));
            s.add(std::pow(x[i + 1] - cw.xi[i], q + 1.0));
        }
        s.add(std::pow(right, q + 1.0));
        factor = std::pow(s.value(), 1.0 / q) / std::pow(q + 1.0, 1.0 / q);
        break;
    }
    case RegimeKind::Linf: {
        CompensatedSum s;
        s.add(0.5 * left * left);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const double h = x[i + 1] - x[i];
            const double offset = cw.xi[i] - 0.5 * (x[i] + x[i + 1]);
            s.add(0.25 * h * h + offset * offset);
        }
        s.add(0.5 * right * right);
        factor = s.value();
        break;
    }
    }
    cert.geometry_factor = factor;
    cert.bound = product(factor, global.value);
    return cert;
}

double closed_form_constant(const std::string& rule_name, const NormRegime& regime)
{
    const RegimeKind kind = regime.kind();
    if (rule_name == "trapezoid") {
        if (kind == RegimeKind::L1)
            return 0.5;
        if (kind == RegimeKind::Linf)
            return 0.25;
        const double q = regime.q();
        return 1.0 / (2.0 * std::pow(q + 1.0, 1.0 / q));
    }
    if (rule_name == "qt") {
        if (kind == RegimeKind::L1)
            return 0.25;
        if (kind == RegimeKind::Linf)
            return 0.125;
        const double q = regime.q();
        return 1.0 / (4.0 * std::pow(q + 1.0, 1.0 / q));
    }
    if (rule_name == "qs") {
        if (kind == RegimeKind::L1)
            return 0.25;
        if (kind == RegimeKind::Linf)
            return 0.125;
        // Tabulated form; 2^(-1/q) times level3_geometry_factor.
        const double q = regime.q();
        return 1.0 / (std::pow(2.0, 2.0 + 1.0 / q) * std::pow(q + 1.0, 1.0 / q));
    }
    if (rule_name == "simpson") {
        if (kind == RegimeKind::L1)
            return 1.0 / 3.0;
        if (kind == RegimeKind::Linf)
            return 5.0 / 36.0;
        const double q = regime.q();
        return std::pow(std::pow(2.0, q + 1.0) + 1.0, 1.0 / q) /
               (2.0 * std::pow(3.0, 1.0 + 1.0 / q) * std::pow(q + 1.0, 1.0 / q));
    }
    throw std::invalid_argument("no closed-form constant for rule: " + rule_name);
}

double closed_form_power(const NormRegime& regime)
{
    switch (regime.kind()) {
    case RegimeKind::L1:
        return 1.0;
    case RegimeKind::Lp:
        return 1.0 + 1.0 / regime.q();
    case RegimeKind::Linf:
        return 2.0;
    }
    throw std::logic_error("unreachable regime");
}

ErrorCertificate certify(const VectorFunction& fn, const QuadratureRule& rule, const Interval& interval,
                         const NormRegime& regime, int level, std::size_t resolution)
{
    switch (level) {
    case 1: {
        ErrorCertificate c = bound_level1(fn, rule, interval, resolution);
        c.regime = regime;
        return c;
    }
    case 2:
        return bound_level2(seminorm_profile(fn, rule, interval, regime, resolution), rule, interval);
    case 3:
        return bound_level3(seminorm(fn, interval, regime, resolution), rule, interval);
    default:
        throw std::invalid_argument("certificate level must be 1, 2 or 3");
    }
}

}  // namespace certquad
