// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace certquad {

/// Closed interval [a, b] with a <= b. A zero-length interval is allowed;
/// every integral and bound over it is zero.
class Interval {
public:
    Interval(double a, double b);

    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    double length() const noexcept { return b_ - a_; }
    double midpoint() const noexcept { return 0.5 * (a_ + b_); }
    bool degenerate() const noexcept { return a_ == b_; }
    bool contains(double t) const noexcept { return a_ <= t && t <= b_; }

    /// Point at relative position u in [0, 1]; u = 1 maps to b exactly.
    double at(double u) const noexcept;

    friend bool operator==(const Interval&, const Interval&) = default;

private:
    double a_;
    double b_;
};

/// Ordered breakpoints t_0 = a <= t_1 <= ... <= t_m = b.
class Partition {
public:
    explicit Partition(std::vector<double> breakpoints);

    std::span<const double> breakpoints() const noexcept { return breakpoints_; }
    std::size_t segment_count() const noexcept { return breakpoints_.size() - 1; }
    Interval segment(std::size_t i) const;
    Interval interval() const { return {breakpoints_.front(), breakpoints_.back()}; }
    std::vector<double> lengths() const;

private:
    std::vector<double> breakpoints_;
};

Partition uniform_partition(const Interval& interval, std::size_t m);

/// Exponent of a Lebesgue-type quantity: a finite real >= 1, or the
/// distinct infinity marker.
class Exponent {
public:
    static Exponent finite(double p);
    static Exponent infinity() noexcept { return Exponent{}; }

    bool is_infinite() const noexcept { return infinite_; }
    /// Finite value; throws std::logic_error for the infinity marker.
    double value() const;

    friend bool operator==(const Exponent&, const Exponent&) = default;

private:
    Exponent() noexcept = default;
    bool infinite_ = true;
    double p_ = 0.0;
};

enum class RegimeKind { L1, Lp, Linf };

/// Which seminorm of the derivative a bound consumes. For Lp the conjugate
/// exponent q = p / (p - 1) is carried alongside p.
class NormRegime {
public:
    static NormRegime l1() noexcept { return NormRegime{RegimeKind::L1, 1.0}; }
    static NormRegime lp(double p);
    static NormRegime linf() noexcept { return NormRegime{RegimeKind::Linf, 0.0}; }

    /// Accepts "l1", "linf", "lp:P" (and "l2" as shorthand for lp:2).
    static NormRegime parse(const std::string& text);

    RegimeKind kind() const noexcept { return kind_; }
    /// Derivative exponent; 1 for L1, p for Lp. Throws for Linf.
    double p() const;
    /// Conjugate exponent; only meaningful for Lp.
    double q() const;
    /// Exponent of the seminorm as an Exponent value (L∞ -> infinity).
    Exponent exponent() const;

    std::string label() const;

    friend bool operator==(const NormRegime&, const NormRegime&) = default;

private:
    NormRegime(RegimeKind kind, double p) noexcept : kind_(kind), p_(p) {}
    RegimeKind kind_;
    double p_;
};

double conjugate_exponent(double p);

/// mu_p(a, c, b): the integral of |t - c|^p over [a, b] for finite p, or the
/// maximum of |t - c| over [a, b] for the infinity marker. Branch c in [a, b]
/// is inclusive at both ends.
double mu(Exponent exponent, double a, double c, double b);
double mu(double p, double a, double c, double b);

/// log(mu_p(a, c, b)) for finite p, evaluated without forming (.)^(p+1).
/// Returns -inf when mu is zero.
double log_mu(double p, double a, double c, double b);

}  // namespace certquad
