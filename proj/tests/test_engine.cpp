// SPDX-License-Identifier: Apache-2.0
#include "certquad/cli/registry.hpp"
#include "certquad/engine.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace certquad;
using certquad::testing::close_rel;

namespace {

const Interval unit{0.0, 1.0};

double scalar(const Element& e) { return e.coords()[0]; }

bool same_bits(const QuadratureResult& x, const QuadratureResult& y)
{
    if (!(x.approximation == y.approximation) || x.certificate.bound != y.certificate.bound ||
        x.panels.size() != y.panels.size())
        return false;
    for (std::size_t i = 0; i < x.panels.size(); ++i)
        if (x.panels[i].interval != y.panels[i].interval || x.panels[i].certificate.bound != y.panels[i].certificate.bound ||
            !(x.panels[i].approximation == y.panels[i].approximation))
            return false;
    return true;
}

}  // namespace

TEST_SUITE("engine")
{
TEST_CASE("apply_rule examples")
{
    VectorFunction id;
    id.value = [](double t) { return Element::scalar(t); };
    CHECK(scalar(apply_rule(id, preset("trapezoid"), unit)) == 0.5);
    const VectorFunction sq = cli::make_function("quadratic");
    CHECK(scalar(apply_rule(sq, preset("qs"), unit)) == 0.375);
    CHECK(scalar(apply_rule(sq, preset("simpson"), unit)) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(scalar(apply_rule(sq, preset("simpson"), Interval{0.5, 0.5})) == 0.0);
}

TEST_CASE("composite examples")
{
    const VectorFunction e = cli::make_function("exp");
    const QuadratureResult r =
        integrate_composite(e, preset("trapezoid"), uniform_partition(unit, 2), NormRegime::linf(), 3);
    const double h = std::exp(0.5);
    CHECK(close_rel(scalar(r.approximation), 0.5 * ((1.0 + h) / 2.0 + (h + std::exp(1.0)) / 2.0), 1e-15));
    CHECK(close_rel(r.certificate.bound, 0.25 * 0.25 * h + 0.25 * 0.25 * std::exp(1.0), 1e-15));
    CHECK(r.certificate.certified);
    CHECK(r.panels.size() == 2);
    CHECK(r.evaluations == 4);
    CHECK(std::abs(scalar(r.approximation) - (std::exp(1.0) - 1.0)) <= r.certificate.bound);

    for (const char* name : {"trapezoid", "simpson", "quarter_three_point:0.3,0.3"}) {
        const QuadratureRule rule = parse_rule(name);
        const QuadratureResult one = integrate_composite(e, rule, uniform_partition(unit, 1), NormRegime::l1(), 2);
        CHECK(one.approximation == apply_rule(e, rule, unit));
        CHECK(one.certificate.bound == certify(e, rule, unit, NormRegime::l1(), 2).bound);
    }

    const VectorFunction c = cli::make_function("const", "M2x2");
    const QuadratureResult cr = integrate_composite(c, preset("qs"), Partition({-1.0, 0.0, 0.25, 3.0}),
                                                    NormRegime::lp(2.0), 2);
    CHECK(cr.approximation == Element::matrix(2, 2, {4.0, 8.0, 12.0, 16.0}));
    CHECK(cr.certificate.bound == 0.0);
}

TEST_CASE("composite bound is the ordered fold of panel bounds")
{
    const VectorFunction f = cli::make_function("poly_R3");
    const QuadratureResult r =
        integrate_composite(f, preset("qt"), uniform_partition(Interval{-1.0, 1.5}, 7), NormRegime::lp(2.0), 2);
    double s = 0.0;
    for (const Panel& p : r.panels)
        s += p.certificate.bound;
    CHECK(close_rel(r.certificate.bound, s, 1e-15));
    for (std::size_t i = 1; i < r.panels.size(); ++i)
        CHECK(r.panels[i].interval.a() == r.panels[i - 1].interval.b());
}

TEST_CASE("doubling a partition halves the level 3 certificate")
{
    for (const char* name : {"trig_circle", "affine", "complex_helix"}) {
        const VectorFunction f = cli::make_function(name);
        for (const char* rule : {"trapezoid", "qt", "simpson"}) {
            double prev = integrate_composite(f, parse_rule(rule), uniform_partition(unit, 1), NormRegime::linf(), 3)
                              .certificate.bound;
            for (std::size_t m = 2; m <= 64; m *= 2) {
                const double cur =
                    integrate_composite(f, parse_rule(rule), uniform_partition(unit, m), NormRegime::linf(), 3)
                        .certificate.bound;
                CHECK(cur <= prev);
                CHECK(close_rel(cur, 0.5 * prev, 1e-12));
                prev = cur;
            }
        }
    }
}

TEST_CASE("threads do not change results")
{
    const VectorFunction f = cli::make_function("matrix_path");
    for (int level : {1, 2, 3}) {
        const Partition part = uniform_partition(Interval{-1.0, 2.0}, 37);
        const QuadratureResult seq = integrate_composite(f, preset("simpson"), part, NormRegime::lp(3.0), level, {512, 1});
        const QuadratureResult par = integrate_composite(f, preset("simpson"), part, NormRegime::lp(3.0), level, {512, 4});
        CHECK(same_bits(seq, par));
    }
    const VectorFunction e = cli::make_function("exp");
    const QuadratureResult a1 = integrate_adaptive(e, preset("qt"), unit, NormRegime::linf(), 1e-3, 512, {4096, 1});
    const QuadratureResult a4 = integrate_adaptive(e, preset("qt"), unit, NormRegime::linf(), 1e-3, 512, {4096, 3});
    CHECK(same_bits(a1, a4));
}

TEST_CASE("parallel failures propagate")
{
    VectorFunction bad = cli::make_function("exp");
    bad.derivative = [](double t) { return Element::scalar(t > 0.5 ? std::nan("") : 1.0); };
    bad.norm_envelope = nullptr;
    CHECK_THROWS_AS(integrate_composite(bad, preset("qt"), uniform_partition(unit, 8), NormRegime::l1(), 2, {64, 4}),
                    std::domain_error);
}

TEST_CASE("adaptive examples")
{
    const VectorFunction e = cli::make_function("exp");
    const QuadratureResult r = integrate_adaptive(e, preset("qt"), unit, NormRegime::linf(), 1e-3, 4096);
    CHECK(r.converged);
    CHECK(r.certificate.bound <= 1e-3);
    CHECK(std::abs(scalar(r.approximation) - (std::exp(1.0) - 1.0)) <= r.certificate.bound);
    CHECK(r.panels.size() <= 512);
    CHECK(r.panels.front().interval.a() == 0.0);
    CHECK(r.panels.back().interval.b() == 1.0);
    for (std::size_t i = 1; i < r.panels.size(); ++i)
        CHECK(r.panels[i].interval.a() == r.panels[i - 1].interval.b());
    const QuadratureResult again = integrate_adaptive(e, preset("qt"), unit, NormRegime::linf(), 1e-3, 4096);
    CHECK(same_bits(r, again));

    const VectorFunction aff = cli::make_function("affine");
    const double one_panel = certify(aff, preset("qt"), unit, NormRegime::linf(), 2).bound;
    const QuadratureResult loose = integrate_adaptive(aff, preset("qt"), unit, NormRegime::linf(), one_panel, 64);
    CHECK(loose.panels.size() == 1);
    CHECK(loose.converged);
    const QuadratureResult tight = integrate_adaptive(aff, preset("qt"), unit, NormRegime::linf(), one_panel / 3, 64);
    CHECK(tight.panels.size() > 1);
    CHECK(tight.converged);
    CHECK(tight.certificate.bound <= one_panel / 3);

    const QuadratureResult huge = integrate_adaptive(e, preset("simpson"), unit, NormRegime::l1(), 1e300, 64);
    CHECK(huge.panels.size() == 1);
    CHECK(huge.converged);
}

TEST_CASE("adaptive budget and validation")
{
    const VectorFunction e = cli::make_function("exp");
    const QuadratureResult capped = integrate_adaptive(e, preset("trapezoid"), unit, NormRegime::linf(), 1e-9, 16);
    CHECK_FALSE(capped.converged);
    CHECK(capped.panels.size() == 16);
    CHECK(capped.certificate.bound > 1e-9);
    CHECK_THROWS_AS(integrate_adaptive(e, preset("qt"), unit, NormRegime::linf(), 0.0, 16), std::invalid_argument);
    CHECK_THROWS_AS(integrate_adaptive(e, preset("qt"), unit, NormRegime::linf(), 1e-3, 0), std::invalid_argument);
}

TEST_CASE("adaptive refinement concentrates near the kink")
{
    const VectorFunction k = cli::make_function("abs_kink");
    const QuadratureResult r = integrate_adaptive(k, preset("trapezoid"), unit, NormRegime::linf(), 1e-4, 4096);
    CHECK(r.converged);
    const double exact = 0.5 * (0.375 * 0.375 + 0.625 * 0.625);
    CHECK(std::abs(scalar(r.approximation) - exact) <= r.certificate.bound);
}

TEST_CASE("oracle examples")
{
    const VectorFunction sq = cli::make_function("quadratic");
    CHECK(scalar(oracle_integral(sq, unit, 2)) == doctest::Approx(1.0 / 3.0).epsilon(1e-16));
    const Element circle = oracle_integral(cli::make_function("trig_circle"), Interval{0.0, std::numbers::pi}, 1 << 14);
    CHECK(std::abs(circle.coords()[0]) <= 1e-10);
    CHECK(std::abs(circle.coords()[1] - 2.0) <= 1e-10);
    const Element c = oracle_integral(cli::make_function("const", "R3"), Interval{-1.0, 1.5}, 64);
    CHECK(c == Element::vector({2.5, 5.0, 7.5}));
    CHECK_THROWS_AS(oracle_integral(sq, unit, 3), std::invalid_argument);
}

TEST_CASE("oracle is self-consistent at its default resolution")
{
    for (const cli::RegisteredFunction& rf : cli::registry()) {
        CAPTURE(rf.name);
        const VectorFunction f = rf.build(rf.native_space);
        const Element coarse = oracle_integral(f, unit, 1 << 15);
        const Element fine = oracle_integral(f, unit);
        CHECK(norm(subtract(coarse, fine)) <= 1e-11);
    }
}

TEST_CASE("soundness on shifted intervals")
{
    for (const cli::RegisteredFunction& rf : cli::registry()) {
        const VectorFunction f = rf.build(rf.native_space);
        for (const Interval& iv : {Interval{-2.0, -0.5}, Interval{0.2, 3.0}}) {
            const Element exact = oracle_integral(f, iv, 1 << 14);
            for (const char* name : {"trapezoid", "qt", "qs", "simpson", "ostrowski:0.1"}) {
                const QuadratureRule rule = parse_rule(name);
                const double err = norm(subtract(apply_rule(f, rule, iv), exact));
                for (const NormRegime& r : {NormRegime::l1(), NormRegime::lp(2.0), NormRegime::linf()})
                    for (int level : {1, 2, 3}) {
                        CAPTURE(rf.name);
                        CAPTURE(level);
                        CHECK(err <= certify(f, rule, iv, r, level).bound + 1e-9);
                    }
            }
        }
    }
}
}
