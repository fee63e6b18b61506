// SPDX-License-Identifier: Apache-2.0
#include "certquad/cli/app.hpp"
#include "certquad/cli/registry.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <sstream>

using namespace certquad;
using namespace certquad::cli;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

RunConfig config(const std::string& fn, const std::string& rule, const std::string& regime, int level)
{
    RunConfig c;
    c.function = fn;
    c.rule = rule;
    c.regime = regime;
    c.level = level;
    c.oracle_resolution = 1 << 14;
    return c;
}

}  // namespace

TEST_SUITE("cli")
{
TEST_CASE("run examples")
{
    const Report qt = run(config("exp", "qt", "linf", 3));
    const double approx = (std::exp(0.25) + std::exp(0.75)) / 2.0;
    CHECK(qt.approximation.size() == 1);
    CHECK(qt.approximation[0] == doctest::Approx(approx).epsilon(1e-15));
    CHECK(std::abs(qt.actual_error - std::abs(std::exp(1.0) - 1.0 - approx)) <= 1e-12);
    CHECK(qt.certificate.bound == doctest::Approx(std::exp(1.0) / 8.0).epsilon(1e-15));
    CHECK(qt.certificate.certified);

    const Report simp = run(config("quadratic", "simpson", "linf", 3));
    CHECK(simp.actual_error <= 1e-14);
    CHECK(simp.certificate.bound == doctest::Approx(5.0 / 18.0).epsilon(1e-15));

    RunConfig c = config("const", "trapezoid", "l1", 2);
    c.space = "R3";
    c.a = 0.0;
    c.b = 2.0;
    const Report k = run(c);
    CHECK(k.actual_error == 0.0);
    CHECK(k.certificate.bound == 0.0);
    CHECK(k.approximation == std::vector<double>{2.0, 4.0, 6.0});
    CHECK(k.space == "R3");
}

TEST_CASE("run validation")
{
    CHECK_THROWS_AS(run(config("nope", "qt", "linf", 3)), ValidationError);
    CHECK_THROWS_AS(run(config("exp", "nope", "linf", 3)), ValidationError);
    CHECK_THROWS_AS(run(config("exp", "qt", "l9", 3)), ValidationError);
    CHECK_THROWS_AS(run(config("exp", "qt", "linf", 4)), ValidationError);
    RunConfig bad = config("exp", "qt", "linf", 3);
    bad.a = 2.0;
    CHECK_THROWS_AS(run(bad), ValidationError);
    bad = config("exp", "qt", "linf", 3);
    bad.mode = "composite:0";
    CHECK_THROWS_AS(run(bad), ValidationError);
    bad.mode = "adaptive:-1";
    CHECK_THROWS_AS(run(bad), ValidationError);
    bad = config("trig_circle", "qt", "linf", 3);
    bad.space = "R3";
    CHECK_THROWS_AS(run(bad), ValidationError);
    bad = config("exp", "qt", "linf", 3);
    bad.output = "xml";
    CHECK_THROWS_AS(run(bad), ValidationError);
}

TEST_CASE("report json round trip")
{
    for (const std::string mode : {"single", "composite:5", "adaptive:1e-2"}) {
        RunConfig c = config("matrix_path", "simpson", "lp:3", 2);
        c.mode = mode;
        c.timing = mode == "single";
        const Report r = run(c);
        CHECK(parse_json(emit_json(r)) == r);
    }
    const Report r = run(config("exp", "qt", "linf", 3));
    CHECK_FALSE(r.timing_ms.has_value());
    nlohmann::json j = nlohmann::json::parse(emit_json(r));
    CHECK(j.at("schema") == 1);
    j["schema"] = 2;
    CHECK_THROWS_AS(parse_json(j.dump()), std::invalid_argument);
}

TEST_CASE("csv and table output")
{
    RunConfig c = config("exp", "qt", "linf", 3);
    c.mode = "composite:4";
    const Report r = run(c);
    const std::string csv = emit_csv(r);
    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "panel,a,b,approximation_norm,bound");
    int rows = 0;
    while (std::getline(lines, line))
        ++rows;
    CHECK(rows == 4);
    CHECK(emit_table(r).find("bound") != std::string::npos);
}

TEST_CASE("compare rankings")
{
    const auto two = compare_rules("exp", 0.0, 1.0, "linf", {"trapezoid", "qt"}, 4096, 1 << 12);
    REQUIRE(two.size() == 2);
    CHECK(two[0].rule == "qt");
    CHECK(two[0].constant == 0.125);
    CHECK(two[1].rule == "trapezoid");
    CHECK(two[1].constant == 0.25);

    const auto three = compare_rules("exp", 0.0, 1.0, "linf", {"simpson", "qs"}, 4096, 1 << 12);
    REQUIRE(three.size() == 2);
    CHECK(three[0].rule == "qs");
    CHECK(three[0].constant == 0.125);
    CHECK(three[1].rule == "simpson");
    CHECK(three[1].constant == doctest::Approx(5.0 / 36.0).epsilon(1e-15));

    CHECK(compare_rules("exp", 0.0, 1.0, "linf", {"simpson"}, 4096, 1 << 12).size() == 1);

    // Equal bounds keep their input order.
    const auto tie = compare_rules("exp", 0.0, 1.0, "linf", {"qs", "qt"}, 4096, 1 << 12);
    CHECK(tie[0].rule == "qs");
    const auto tie2 = compare_rules("exp", 0.0, 1.0, "linf", {"qt", "qs"}, 4096, 1 << 12);
    CHECK(tie2[0].rule == "qt");
    CHECK_THROWS_AS(compare_rules("exp", 0.0, 1.0, "linf", {}, 4096, 1 << 12), ValidationError);
}

TEST_CASE("command line exit codes")
{
    const Outcome ok = invoke({"run", "--function", "exp", "--rule", "qt", "--oracle-resolution", "4096"});
    CHECK(ok.code == exit_ok);
    CHECK(nlohmann::json::parse(ok.out).at("certificate").at("certified") == true);

    CHECK(invoke({"--function", "exp", "--oracle-resolution", "1024"}).code == exit_ok);
    CHECK(invoke({"run", "--function", "nope"}).code == exit_validation);
    CHECK(invoke({"run", "--bogus"}).code == exit_validation);
    CHECK(invoke({"run", "--level", "7"}).code == exit_validation);
    CHECK(invoke({"run", "--interval", "1", "0"}).code == exit_validation);
    CHECK(invoke({"frobnicate"}).code == exit_validation);

    const Outcome capped = invoke({"run", "--function", "exp", "--mode", "adaptive:1e-12", "--max-panels", "8",
                                   "--oracle-resolution", "1024"});
    CHECK(capped.code == exit_not_converged);
    CHECK(nlohmann::json::parse(capped.out).at("converged") == false);

    const Outcome sampled = invoke({"run", "--function", "exp", "--regime", "l2", "--oracle-resolution", "1024"});
    CHECK(sampled.code == exit_ok);
    CHECK(sampled.err.find("not certified") != std::string::npos);

    const Outcome neg = invoke({"run", "--function", "trig_circle", "--interval", "-1", "2.5", "--rule", "simpson",
                                "--self-check", "--oracle-resolution", "2048"});
    CHECK(neg.code == exit_ok);
    CHECK(nlohmann::json::parse(neg.out).at("config").at("interval").at(0) == -1.0);

    const Outcome list = invoke({"list"});
    CHECK(list.code == exit_ok);
    for (const auto& f : registry())
        CHECK(list.out.find(f.name) != std::string::npos);

    const Outcome cmp = invoke({"compare", "--function", "exp", "--rules", "simpson,qs", "--output", "json"});
    CHECK(cmp.code == exit_ok);
    CHECK(nlohmann::json::parse(cmp.out).at(0).at("rule") == "qs");
}

TEST_CASE("self-check status")
{
    Report r = run(config("exp", "qt", "linf", 3));
    std::ostringstream sink;
    CHECK(exit_status(r, true, sink) == exit_ok);
    CHECK(sink.str().empty());

    Report forged = r;
    forged.actual_error = 2.0 * r.certificate.bound;
    CHECK(exit_status(forged, false, sink) == exit_ok);
    CHECK(exit_status(forged, true, sink) == exit_self_check);

    forged.certificate.certified = false;
    std::ostringstream warn;
    CHECK(exit_status(forged, true, warn) == exit_ok);
    CHECK(warn.str().find("uncertified") != std::string::npos);

    forged.converged = false;
    CHECK(exit_status(forged, true, warn) == exit_not_converged);

    const Outcome kink = invoke({"run", "--function", "abs_kink", "--rule", "ostrowski:0.375", "--self-check",
                                 "--oracle-resolution", "1024"});
    CHECK(kink.code == exit_ok);
}

TEST_CASE("oracle resolution from the environment")
{
    ::unsetenv("QUAD_ORACLE_RESOLUTION");
    CHECK(oracle_resolution_from_env() == default_oracle_resolution);
    ::setenv("QUAD_ORACLE_RESOLUTION", "512", 1);
    CHECK(oracle_resolution_from_env() == 512);
    const Outcome o = invoke({"run", "--function", "exp"});
    CHECK(nlohmann::json::parse(o.out).at("config").at("oracle_resolution") == 512);
    ::setenv("QUAD_ORACLE_RESOLUTION", "513", 1);
    CHECK_THROWS_AS(oracle_resolution_from_env(), ValidationError);
    CHECK(invoke({"run", "--function", "exp"}).code == exit_validation);
    ::unsetenv("QUAD_ORACLE_RESOLUTION");
}

TEST_CASE("json output is deterministic")
{
    const std::vector<std::string> args = {"run", "--function", "exp", "--rule", "qt", "--mode", "adaptive:1e-3",
                                           "--oracle-resolution", "8192"};
    const Outcome a = invoke(args);
    const Outcome b = invoke(args);
    CHECK(a.code == exit_ok);
    CHECK(a.out == b.out);
}

TEST_CASE("installed binary matches the in-process entry point")
{
    const std::string cmd = std::string(CERTQUAD_CLI_PATH) + " run --function nope >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    REQUIRE(WIFEXITED(status));
    CHECK(WEXITSTATUS(status) == exit_validation);
}
}
