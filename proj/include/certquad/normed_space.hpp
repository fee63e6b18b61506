// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "certquad/geometry.hpp"

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace certquad {

enum class SpaceKind {
    Scalar,            // R with |.|
    Euclidean,         // R^d with the 2-norm
    Max,               // R^d with the max-norm
    ComplexEuclidean,  // C^d with the modulus-based 2-norm
    Frobenius,         // R^{m x n} with the Frobenius norm
};

/// A finite-dimensional real normed space. Elements store their real
/// coordinates contiguously; complex entries are interleaved (re, im) and
/// matrices are row-major.
class Space {
public:
    static Space scalar() noexcept { return {SpaceKind::Scalar, 1, 1}; }
    static Space euclidean(std::size_t d);
    static Space max_norm(std::size_t d);
    static Space complex_euclidean(std::size_t d);
    static Space frobenius(std::size_t rows, std::size_t cols);

    /// "scalar", "R3", "R3max", "C2", "M2x2".
    static Space parse(const std::string& label);

    SpaceKind kind() const noexcept { return kind_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    /// Number of real coordinates.
    std::size_t real_dimension() const noexcept;
    std::string label() const;

    friend bool operator==(const Space&, const Space&) = default;

private:
    Space(SpaceKind kind, std::size_t rows, std::size_t cols) noexcept
        : kind_(kind), rows_(rows), cols_(cols) {}
    SpaceKind kind_;
    std::size_t rows_;
    std::size_t cols_;
};

/// Immutable value in a Space.
class Element {
public:
    Element(Space space, std::vector<double> coords);

    static Element zero(const Space& space);
    static Element scalar(double x) { return {Space::scalar(), {x}}; }
    static Element vector(std::vector<double> x) { return {Space::euclidean(x.size()), std::move(x)}; }
    static Element max_vector(std::vector<double> x) { return {Space::max_norm(x.size()), std::move(x)}; }
    static Element complex_vector(std::span<const std::complex<double>> z);
    static Element matrix(std::size_t rows, std::size_t cols, std::vector<double> row_major);

    const Space& space() const noexcept { return space_; }
    std::span<const double> coords() const noexcept { return coords_; }
    double norm() const noexcept;

    friend bool operator==(const Element&, const Element&) = default;

private:
    Space space_;
    std::vector<double> coords_;
};

double norm(const Element& x) noexcept;
Element add(const Element& x, const Element& y);
Element subtract(const Element& x, const Element& y);
Element scale(double lambda, const Element& x);

/// Sum of coefficient * element, accumulated strictly left to right. An empty
/// list needs the space to produce its zero.
Element linear_combination(std::span<const std::pair<double, Element>> terms,
                           const std::optional<Space>& space = std::nullopt);

/// Integrand f : [a, b] -> X with optional derivative information.
///
/// Derivative access has three tiers: an analytic `derivative`, a central
/// finite difference with `fd_step` (never certified), or a `norm_envelope`
/// giving an upper bound for ess sup ||f'|| on a subinterval. All callables
/// must be safe to invoke concurrently.
struct VectorFunction {
    Space space = Space::scalar();
    std::function<Element(double)> value;
    std::function<Element(double)> derivative;
    std::function<double(const Interval&)> norm_envelope;
    std::optional<double> fd_step;

    bool has_pointwise_derivative() const noexcept
    {
        return static_cast<bool>(derivative) || fd_step.has_value();
    }
    /// True when pointwise derivative values come from an analytic evaluator.
    bool analytic_derivative() const noexcept { return static_cast<bool>(derivative); }

    Element eval(double t) const;
    /// f'(t) from the analytic evaluator, or the finite-difference fallback.
    Element derivative_at(double t) const;
    /// ||f'(t)||; throws std::domain_error on a nonfinite value.
    double derivative_norm(double t) const;
};

}  // namespace certquad
