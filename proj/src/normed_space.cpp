// SPDX-License-Identifier: Apache-2.0
#include "certquad/normed_space.hpp"

#include <algorithm>
#include <cmath>
#include <regex>
#include <stdexcept>

namespace certquad {

namespace {

std::size_t positive_dim(std::size_t d)
{
    if (d == 0)
        throw std::invalid_argument("space dimension must be positive");
    return d;
}

void require_same_space(const Element& x, const Element& y)
{
    if (x.space() != y.space())
        throw std::invalid_argument("elements belong to different spaces: " + x.space().label() +
                                    " vs " + y.space().label());
}

}  // namespace

Space Space::euclidean(std::size_t d) { return {SpaceKind::Euclidean, positive_dim(d), 1}; }
Space Space::max_norm(std::size_t d) { return {SpaceKind::Max, positive_dim(d), 1}; }
Space Space::complex_euclidean(std::size_t d) { return {SpaceKind::ComplexEuclidean, positive_dim(d), 1}; }
Space Space::frobenius(std::size_t rows, std::size_t cols)
{
    return {SpaceKind::Frobenius, positive_dim(rows), positive_dim(cols)};
}

Space Space::parse(const std::string& label)
{
    if (label == "scalar" || label == "R" || label == "R1")
        return scalar();
    std::smatch m;
    static const std::regex real_re{R"(R([0-9]+)(max)?)"};
    static const std::regex complex_re{R"(C([0-9]+))"};
    static const std::regex matrix_re{R"(M([0-9]+)x([0-9]+))"};
    if (std::regex_match(label, m, real_re)) {
        const auto d = std::stoul(m[1].str());
        return m[2].matched ? max_norm(d) : euclidean(d);
    }
    if (std::regex_match(label, m, complex_re))
        return complex_euclidean(std::stoul(m[1].str()));
    if (std::regex_match(label, m, matrix_re))
        return frobenius(std::stoul(m[1].str()), std::stoul(m[2].str()));
    throw std::invalid_argument("unknown space: " + label);
}

std::size_t Space::real_dimension() const noexcept
{
    switch (kind_) {
    case SpaceKind::Scalar:
        return 1;
    case SpaceKind::ComplexEuclidean:
        return 2 * rows_;
    case SpaceKind::Frobenius:
        return rows_ * cols_;
    default:
        return rows_;
    }
}

std::string Space::label() const
{
    switch (kind_) {
    case SpaceKind::Scalar:
        return "scalar";
    case SpaceKind::Euclidean:
        return "R" + std::to_string(rows_);
    case SpaceKind::Max:
        return "R" + std::to_string(rows_) + "max";
    case SpaceKind::ComplexEuclidean:
        return "C" + std::to_string(rows_);
    case SpaceKind::Frobenius:
        return "M" + std::to_string(rows_) + "x" + std::to_string(cols_);
    }
    return "?";
}

Element::Element(Space space, std::vector<double> coords) : space_(space), coords_(std::move(coords))
{
    if (coords_.size() != space_.real_dimension())
        throw std::invalid_argument("coordinate count does not match space " + space_.label());
}

Element Element::zero(const Space& space) { return {space, std::vector<double>(space.real_dimension(), 0.0)}; }

Element Element::complex_vector(std::span<const std::complex<double>> z)
{
    std::vector<double> c;
    c.reserve(2 * z.size());
    for (const auto& v : z) {
        c.push_back(v.real());
        c.push_back(v.imag());
    }
    return {Space::complex_euclidean(z.size()), std::move(c)};
}

Element Element::matrix(std::size_t rows, std::size_t cols, std::vector<double> row_major)
{
    return {Space::frobenius(rows, cols), std::move(row_major)};
}

double Element::norm() const noexcept
{
    switch (space_.kind()) {
    case SpaceKind::Scalar:
        return std::abs(coords_[0]);
    case SpaceKind::Max: {
        double m = 0.0;
        for (double x : coords_)
            m = std::max(m, std::abs(x));
        return m;
    }
    default: {
        // Scaled 2-norm so large or tiny coordinates do not overflow.
        double scale = 0.0;
        for (double x : coords_)
            scale = std::max(scale, std::abs(x));
        if (scale == 0.0 || !std::isfinite(scale))
            return scale;
        double ssq = 0.0;
        for (double x : coords_) {
            const double r = x / scale;
            ssq += r * r;
        }
        return scale * std::sqrt(ssq);
    }
    }
}

double norm(const Element& x) noexcept { return x.norm(); }

Element add(const Element& x, const Element& y)
{
    require_same_space(x, y);
    std::vector<double> c(x.coords().begin(), x.coords().end());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] += y.coords()[i];
    return {x.space(), std::move(c)};
}

Element subtract(const Element& x, const Element& y) { return add(x, scale(-1.0, y)); }

Element scale(double lambda, const Element& x)
{
    std::vector<double> c(x.coords().begin(), x.coords().end());
    for (double& v : c)
        v *= lambda;
    return {x.space(), std::move(c)};
}

Element linear_combination(std::span<const std::pair<double, Element>> terms, const std::optional<Space>& space)
{
    if (terms.empty()) {
        if (!space)
            throw std::invalid_argument("empty linear combination needs a space");
        return Element::zero(*space);
    }
    const Space& s = terms.front().second.space();
    if (space && *space != s)
        throw std::invalid_argument("linear combination term outside requested space");
    std::vector<double> acc(s.real_dimension(), 0.0);
    for (const auto& [lambda, x] : terms) {
        if (x.space() != s)
            throw std::invalid_argument("linear combination mixes spaces");
        for (std::size_t i = 0; i < acc.size(); ++i)
            acc[i] += lambda * x.coords()[i];
    }
    return {s, std::move(acc)};
}

Element VectorFunction::eval(double t) const
{
    if (!value)
        throw std::logic_error("function has no value evaluator");
    Element y = value(t);
    if (y.space() != space)
        throw std::logic_error("function returned an element outside its space");
    return y;
}

Element VectorFunction::derivative_at(double t) const
{
    if (derivative) {
        Element d = derivative(t);
        if (d.space() != space)
            throw std::logic_error("derivative returned an element outside its space");
        return d;
    }
    if (fd_step) {
        const double h = *fd_step;
        return scale(1.0 / (2.0 * h), subtract(eval(t + h), eval(t - h)));
    }
    throw std::invalid_argument("no derivative source available");
}

double VectorFunction::derivative_norm(double t) const
{
    const double n = derivative_at(t).norm();
    if (!std::isfinite(n))
        throw std::domain_error("nonfinite derivative sample");
    return n;
}

}  // namespace certquad
