// SPDX-License-Identifier: Apache-2.0
#include "certquad/cli/registry.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace certquad::cli {

namespace {

double max_abs_endpoint(const Interval& i) { return std::max(std::abs(i.a()), std::abs(i.b())); }

VectorFunction constant(const Space& space)
{
    std::vector<double> c(space.real_dimension());
    for (std::size_t j = 0; j < c.size(); ++j)
        c[j] = static_cast<double>(j + 1);
    const Element value{space, c};
    const Element zero = Element::zero(space);
    VectorFunction f;
    f.space = space;
    f.value = [value](double) { return value; };
    f.derivative = [zero](double) { return zero; };
    f.norm_envelope = [](const Interval&) { return 0.0; };
    return f;
}

VectorFunction affine(const Space&)
{
    VectorFunction f;
    f.value = [](double t) { return Element::scalar(1.0 + 2.0 * t); };
    f.derivative = [](double) { return Element::scalar(2.0); };
    f.norm_envelope = [](const Interval&) { return 2.0; };
    return f;
}

VectorFunction quadratic(const Space&)
{
    VectorFunction f;
    f.value = [](double t) { return Element::scalar(t * t); };
    f.derivative = [](double t) { return Element::scalar(2.0 * t); };
    f.norm_envelope = [](const Interval& i) { return 2.0 * max_abs_endpoint(i); };
    return f;
}

VectorFunction exponential(const Space&)
{
    VectorFunction f;
    f.value = [](double t) { return Element::scalar(std::exp(t)); };
    f.derivative = [](double t) { return Element::scalar(std::exp(t)); };
    f.norm_envelope = [](const Interval& i) { return std::exp(i.b()); };
    return f;
}

VectorFunction trig_circle(const Space&)
{
    VectorFunction f;
    f.space = Space::euclidean(2);
    f.value = [](double t) { return Element::vector({std::cos(t), std::sin(t)}); };
    f.derivative = [](double t) { return Element::vector({-std::sin(t), std::cos(t)}); };
    f.norm_envelope = [](const Interval&) { return 1.0; };
    return f;
}

// (t, t^3, t^4); every derivative component grows with |t|, so both norms
// peak at the endpoint farthest from zero.
VectorFunction poly_r3(const Space& space)
{
    VectorFunction f;
    f.space = space;
    f.value = [space](double t) { return Element{space, {t, t * t * t, t * t * t * t}}; };
    f.derivative = [space](double t) { return Element{space, {1.0, 3.0 * t * t, 4.0 * t * t * t}}; };
    f.norm_envelope = [space](const Interval& i) {
        const double s = max_abs_endpoint(i);
        return Element{space, {1.0, 3.0 * s * s, 4.0 * s * s * s}}.norm();
    };
    return f;
}

// (1 + t/2) R(t) with R(t) the rotation by t. R and R' are Frobenius-
// orthogonal, so ||M'||_F = sqrt(2) sqrt((1 + t/2)^2 + 1/4), convex in t.
VectorFunction matrix_path(const Space&)
{
    VectorFunction f;
    f.space = Space::frobenius(2, 2);
    f.value = [](double t) {
        const double r = 1.0 + 0.5 * t;
        const double c = std::cos(t), s = std::sin(t);
        return Element::matrix(2, 2, {r * c, -r * s, r * s, r * c});
    };
    f.derivative = [](double t) {
        const double r = 1.0 + 0.5 * t;
        const double c = std::cos(t), s = std::sin(t);
        return Element::matrix(2, 2, {0.5 * c - r * s, -0.5 * s - r * c, 0.5 * s + r * c, 0.5 * c - r * s});
    };
    f.norm_envelope = [](const Interval& i) {
        auto g = [](double t) {
            const double r = 1.0 + 0.5 * t;
            return std::numbers::sqrt2 * std::sqrt(r * r + 0.25);
        };
        return std::max(g(i.a()), g(i.b()));
    };
    return f;
}

VectorFunction abs_kink(const Space&)
{
    VectorFunction f;
    f.value = [](double t) { return Element::scalar(std::abs(t - abs_kink_center)); };
    // Right derivative at the kink, so ||f'|| = 1 at every sample.
    f.derivative = [](double t) { return Element::scalar(t >= abs_kink_center ? 1.0 : -1.0); };
    f.norm_envelope = [](const Interval&) { return 1.0; };
    return f;
}

// (e^{it}, e^{2it}) in C^2; ||f'|| = sqrt(5) everywhere.
VectorFunction complex_helix(const Space&)
{
    VectorFunction f;
    f.space = Space::complex_euclidean(2);
    f.value = [](double t) {
        const std::complex<double> z[2] = {std::polar(1.0, t), std::polar(1.0, 2.0 * t)};
        return Element::complex_vector(z);
    };
    f.derivative = [](double t) {
        const std::complex<double> i{0.0, 1.0};
        const std::complex<double> z[2] = {i * std::polar(1.0, t), 2.0 * i * std::polar(1.0, 2.0 * t)};
        return Element::complex_vector(z);
    };
    f.norm_envelope = [](const Interval&) { return std::sqrt(5.0); };
    return f;
}

std::vector<RegisteredFunction> build_registry()
{
    const auto native_only = [](Space native) { return [native](const Space& s) { return s == native; }; };
    std::vector<RegisteredFunction> r;
    r.push_back({"const", "constant (1, 2, ..., d) in any space", Space::scalar(), [](const Space&) { return true; },
                 constant});
    r.push_back({"affine", "1 + 2t", Space::scalar(), native_only(Space::scalar()), affine});
    r.push_back({"quadratic", "t^2", Space::scalar(), native_only(Space::scalar()), quadratic});
    r.push_back({"exp", "e^t", Space::scalar(), native_only(Space::scalar()), exponential});
    r.push_back({"trig_circle", "(cos t, sin t) in R2", Space::euclidean(2), native_only(Space::euclidean(2)),
                 trig_circle});
    r.push_back({"poly_R3", "(t, t^3, t^4) in R3 or R3max", Space::euclidean(3),
                 [](const Space& s) { return s == Space::euclidean(3) || s == Space::max_norm(3); }, poly_r3});
    r.push_back({"matrix_path", "(1 + t/2) * rotation(t) in M2x2", Space::frobenius(2, 2),
                 native_only(Space::frobenius(2, 2)), matrix_path});
    r.push_back({"abs_kink", "|t - 3/8|", Space::scalar(), native_only(Space::scalar()), abs_kink, false});
    r.push_back({"complex_helix", "(e^{it}, e^{2it}) in C2", Space::complex_euclidean(2),
                 native_only(Space::complex_euclidean(2)), complex_helix});
    return r;
}

}  // namespace

const std::vector<RegisteredFunction>& registry()
{
    static const std::vector<RegisteredFunction> r = build_registry();
    return r;
}

const RegisteredFunction& find_function(const std::string& name)
{
    for (const auto& f : registry())
        if (f.name == name)
            return f;
    throw std::invalid_argument("unknown function: " + name);
}

VectorFunction make_function(const std::string& name, const std::optional<std::string>& space)
{
    const RegisteredFunction& entry = find_function(name);
    const Space s = space ? Space::parse(*space) : entry.native_space;
    if (!entry.accepts(s))
        throw std::invalid_argument("function " + name + " is not available in space " + s.label());
    VectorFunction f = entry.build(s);
    f.space = s;
    return f;
}

}  // namespace certquad::cli
