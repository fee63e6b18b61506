// SPDX-License-Identifier: Apache-2.0
#include "certquad/derivative_norms.hpp"

#include "certquad/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace certquad {

std::vector<Interval> rule_segments(const QuadratureRule& rule, const Interval& interval)
{
    const auto x = rule.nodes(interval);
    std::vector<Interval> segs;
    segs.reserve(x.size() + 1);
    segs.emplace_back(interval.a(), x.front());
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
        segs.emplace_back(x[i], x[i + 1]);
    segs.emplace_back(x.back(), interval.b());
    return segs;
}

SeminormEstimate seminorm(const VectorFunction& fn, const Interval& interval, const NormRegime& regime,
                          std::size_t resolution)
{
    if (resolution < 2)
        throw std::invalid_argument("seminorm resolution must be >= 2");
    const bool pointwise = fn.has_pointwise_derivative();
    const bool envelope = static_cast<bool>(fn.norm_envelope);
    if (!pointwise && !envelope)
        throw std::invalid_argument("no derivative source available");

    SeminormEstimate est{0.0, regime, interval, false, resolution};
    if (interval.degenerate()) {
        est.certified = true;
        return est;
    }

    if (regime.kind() == RegimeKind::Linf) {
        if (envelope) {
            est.value = fn.norm_envelope(interval);
            if (!(est.value >= 0.0) || !std::isfinite(est.value))
                throw std::domain_error("norm envelope must be finite and nonnegative");
            est.certified = true;
            return est;
        }
        const double h = interval.length() / static_cast<double>(resolution);
        double m = 0.0;
        for (std::size_t k = 0; k <= resolution; ++k) {
            const double t = k == resolution ? interval.b() : interval.a() + static_cast<double>(k) * h;
            m = std::max(m, fn.derivative_norm(t));
        }
        est.value = m;
        return est;
    }

    const double p = regime.p();
    if (!pointwise) {
        const double env = fn.norm_envelope(interval);
        if (!(env >= 0.0) || !std::isfinite(env))
            throw std::domain_error("norm envelope must be finite and nonnegative");
        est.value = env * std::pow(interval.length(), 1.0 / p);
        est.certified = true;
        return est;
    }
    const double integral =
        p == 1.0 ? simpson([&](double t) { return fn.derivative_norm(t); }, interval.a(), interval.b(), resolution)
                 : simpson([&](double t) { return std::pow(fn.derivative_norm(t), p); }, interval.a(),
                           interval.b(), resolution);
    est.value = p == 1.0 ? integral : std::pow(std::max(integral, 0.0), 1.0 / p);
    return est;
}

SeminormProfile seminorm_profile(const VectorFunction& fn, const QuadratureRule& rule, const Interval& interval,
                                 const NormRegime& regime, std::size_t resolution)
{
    SeminormProfile profile;
    for (const Interval& seg : rule_segments(rule, interval))
        profile.segments.push_back(seminorm(fn, seg, regime, resolution));
    profile.global = seminorm(fn, interval, regime, resolution);
    return profile;
}

}  // namespace certquad
