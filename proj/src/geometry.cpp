// SPDX-License-Identifier: Apache-2.0
#include "certquad/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace certquad {

Interval::Interval(double a, double b) : a_(a), b_(b)
{
    if (!std::isfinite(a) || !std::isfinite(b))
        throw std::invalid_argument("interval endpoints must be finite");
    if (a > b)
        throw std::invalid_argument("interval requires a <= b");
}

double Interval::at(double u) const noexcept
{
    if (u == 1.0)
        return b_;
    return a_ + u * (b_ - a_);
}

Partition::Partition(std::vector<double> breakpoints) : breakpoints_(std::move(breakpoints))
{
    if (breakpoints_.size() < 2)
        throw std::invalid_argument("partition needs at least two breakpoints");
    if (!std::is_sorted(breakpoints_.begin(), breakpoints_.end()))
        throw std::invalid_argument("partition breakpoints must be nondecreasing");
    for (double t : breakpoints_)
        if (!std::isfinite(t))
            throw std::invalid_argument("partition breakpoints must be finite");
}

Interval Partition::segment(std::size_t i) const
{
    if (i >= segment_count())
        throw std::out_of_range("partition segment index");
    return {breakpoints_[i], breakpoints_[i + 1]};
}

std::vector<double> Partition::lengths() const
{
    std::vector<double> h(segment_count());
    for (std::size_t i = 0; i < h.size(); ++i)
        h[i] = breakpoints_[i + 1] - breakpoints_[i];
    return h;
}

Partition uniform_partition(const Interval& interval, std::size_t m)
{
    if (m == 0)
        throw std::invalid_argument("uniform partition needs m >= 1");
    std::vector<double> t(m + 1);
    const double h = interval.length() / static_cast<double>(m);
    for (std::size_t i = 0; i < m; ++i)
        t[i] = interval.a() + static_cast<double>(i) * h;
    t[m] = interval.b();
    return Partition{std::move(t)};
}

Exponent Exponent::finite(double p)
{
    if (!(p >= 1.0) || !std::isfinite(p))
        throw std::invalid_argument("exponent must be a finite real >= 1");
    Exponent e;
    e.infinite_ = false;
    e.p_ = p;
    return e;
}

double Exponent::value() const
{
    if (infinite_)
        throw std::logic_error("infinite exponent has no finite value");
    return p_;
}

NormRegime NormRegime::lp(double p)
{
    if (!(p > 1.0) || !std::isfinite(p))
        throw std::invalid_argument("Lp regime requires finite p > 1");
    return NormRegime{RegimeKind::Lp, p};
}

NormRegime NormRegime::parse(const std::string& text)
{
    if (text == "l1" || text == "L1")
        return l1();
    if (text == "linf" || text == "Linf" || text == "LINF")
        return linf();
    if (text == "l2" || text == "L2")
        return lp(2.0);
    if (text.rfind("lp:", 0) == 0 || text.rfind("Lp:", 0) == 0) {
        const std::string number = text.substr(3);
        std::size_t used = 0;
        double p = 0.0;
        try {
            p = std::stod(number, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad Lp exponent: " + number);
        }
        if (used != number.size())
            throw std::invalid_argument("bad Lp exponent: " + number);
        return lp(p);
    }
    throw std::invalid_argument("unknown regime: " + text);
}

double NormRegime::p() const
{
    if (kind_ == RegimeKind::Linf)
        throw std::logic_error("L-infinity regime has no finite p");
    return p_;
}

double NormRegime::q() const
{
    if (kind_ != RegimeKind::Lp)
        throw std::logic_error("conjugate exponent only defined for Lp");
    return conjugate_exponent(p_);
}

Exponent NormRegime::exponent() const
{
    return kind_ == RegimeKind::Linf ? Exponent::infinity() : Exponent::finite(p_);
}

std::string NormRegime::label() const
{
    switch (kind_) {
    case RegimeKind::L1:
        return "l1";
    case RegimeKind::Linf:
        return "linf";
    case RegimeKind::Lp: {
        char buf[64];
        std::snprintf(buf, sizeof buf, "lp:%.17g", p_);
        return buf;
    }
    }
    return "?";
}

double conjugate_exponent(double p)
{
    if (!(p > 1.0) || !std::isfinite(p))
        throw std::invalid_argument("conjugate exponent requires p > 1");
    return p / (p - 1.0);
}

namespace {

void check_mu_args(double a, double c, double b)
{
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c))
        throw std::invalid_argument("mu: arguments must be finite");
    if (a > b)
        throw std::invalid_argument("mu: requires a <= b");
}

}  // namespace

double mu(Exponent exponent, double a, double c, double b)
{
    check_mu_args(a, c, b);
    if (a == b)
        return 0.0;
    if (exponent.is_infinite()) {
        if (c < a)
            return b - c;
        if (c <= b)
            return 0.5 * (b - a) + std::abs(c - 0.5 * (a + b));
        return c - a;
    }
    const double p = exponent.value();
    const double k = p + 1.0;
    if (c < a)
        return (std::pow(b - c, k) - std::pow(a - c, k)) / k;
    if (c <= b)
        return (std::pow(c - a, k) + std::pow(b - c, k)) / k;
    return (std::pow(c - a, k) - std::pow(c - b, k)) / k;
}

double mu(double p, double a, double c, double b)
{
    return mu(Exponent::finite(p), a, c, b);
}

double log_mu(double p, double a, double c, double b)
{
    const Exponent e = Exponent::finite(p);
    check_mu_args(a, c, b);
    constexpr double neg_inf = -std::numeric_limits<double>::infinity();
    if (a == b)
        return neg_inf;
    const double k = e.value() + 1.0;
    const double log_k = std::log(k);
    if (c < a) {
        const double r = (a - c) / (b - c);
        return k * std::log(b - c) + std::log1p(-std::pow(r, k)) - log_k;
    }
    if (c > b) {
        const double r = (c - b) / (c - a);
        return k * std::log(c - a) + std::log1p(-std::pow(r, k)) - log_k;
    }
    const double left = c > a ? k * std::log(c - a) : neg_inf;
    const double right = b > c ? k * std::log(b - c) : neg_inf;
    const double hi = std::max(left, right);
    const double lo = std::min(left, right);
    return hi + std::log1p(std::exp(lo - hi)) - log_k;
}

}  // namespace certquad
