// SPDX-License-Identifier: Apache-2.0
#include "certquad/cli/app.hpp"

#include "certquad/cli/registry.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace certquad::cli {

namespace {

struct Mode {
    enum Kind { Single, Composite, Adaptive } kind = Single;
    std::size_t panels = 1;
    double tol = 0.0;
};

Mode parse_mode(const std::string& text)
{
    if (text == "single")
        return {};
    const auto colon = text.find(':');
    const std::string head = text.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
    try {
        std::size_t used = 0;
        if (head == "composite") {
            const long long m = std::stoll(arg, &used);
            if (used == arg.size() && m >= 1)
                return {Mode::Composite, static_cast<std::size_t>(m), 0.0};
        } else if (head == "adaptive") {
            const double tol = std::stod(arg, &used);
            if (used == arg.size() && tol > 0.0 && std::isfinite(tol))
                return {Mode::Adaptive, 1, tol};
        }
    } catch (const std::exception&) {
    }
    throw ValidationError("bad mode: " + text + " (single | composite:M | adaptive:TOL)");
}

// Resolves a label, mapping any std::invalid_argument into ValidationError.
template <class F>
auto resolve(F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const ValidationError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw ValidationError(e.what());
    }
}

std::vector<double> coords(const Element& x) { return {x.coords().begin(), x.coords().end()}; }

void validate(const RunConfig& c)
{
    if (c.level < 1 || c.level > 3)
        throw ValidationError("level must be 1, 2 or 3");
    if (c.resolution < 2)
        throw ValidationError("resolution must be >= 2");
    if (c.oracle_resolution < 2 || c.oracle_resolution % 2 != 0)
        throw ValidationError("oracle resolution must be even and >= 2");
    if (c.threads < 1)
        throw ValidationError("threads must be >= 1");
    if (c.max_panels < 1)
        throw ValidationError("max panels must be >= 1");
    if (c.output != "json" && c.output != "csv" && c.output != "table")
        throw ValidationError("output must be json, csv or table");
}

}  // namespace

std::size_t oracle_resolution_from_env()
{
    const char* env = std::getenv("QUAD_ORACLE_RESOLUTION");
    if (!env || !*env)
        return default_oracle_resolution;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0' || v < 2 || v % 2 != 0)
        throw ValidationError("QUAD_ORACLE_RESOLUTION must be an even integer >= 2");
    return static_cast<std::size_t>(v);
}

Report run(const RunConfig& config)
{
    validate(config);
    const VectorFunction fn = resolve([&] { return make_function(config.function, config.space); });
    const Interval interval = resolve([&] { return Interval{config.a, config.b}; });
    const QuadratureRule rule = resolve([&] { return parse_rule(config.rule); });
    const NormRegime regime = resolve([&] { return NormRegime::parse(config.regime); });
    const Mode mode = parse_mode(config.mode);
    const EngineOptions options{config.resolution, config.threads};

    const auto started = std::chrono::steady_clock::now();
    QuadratureResult result{Element::zero(fn.space), {}, {}, 0, true};
    switch (mode.kind) {
    case Mode::Single: {
        result.approximation = apply_rule(fn, rule, interval);
        result.certificate = certify(fn, rule, interval, regime, config.level, config.resolution);
        result.panels.push_back({interval, result.approximation, result.certificate});
        result.evaluations = rule.size();
        break;
    }
    case Mode::Composite:
        result = integrate_composite(fn, rule, uniform_partition(interval, mode.panels), regime, config.level, options);
        break;
    case Mode::Adaptive:
        result = integrate_adaptive(fn, rule, interval, regime, mode.tol, config.max_panels, options);
        break;
    }
    const auto finished = std::chrono::steady_clock::now();

    const Element oracle = oracle_integral(fn, interval, config.oracle_resolution);

    Report r;
    r.function = config.function;
    r.space = fn.space.label();
    r.a = interval.a();
    r.b = interval.b();
    r.rule = rule.name();
    r.regime = regime.label();
    r.level = result.certificate.level;
    r.mode = config.mode;
    r.resolution = config.resolution;
    r.oracle_resolution = config.oracle_resolution;
    r.approximation = coords(result.approximation);
    r.oracle = coords(oracle);
    r.actual_error = subtract(result.approximation, oracle).norm();
    r.certificate = {result.certificate.bound, result.certificate.level, regime.label(), result.certificate.certified,
                     result.certificate.segment_contributions};
    for (const Panel& p : result.panels)
        r.panels.push_back({p.interval.a(), p.interval.b(), p.approximation.norm(), p.certificate.bound});
    r.evaluations = result.evaluations;
    r.converged = result.converged;
    if (config.timing)
        r.timing_ms = std::chrono::duration<double, std::milli>(finished - started).count();
    return r;
}

int exit_status(const Report& report, bool self_check, std::ostream& err)
{
    if (!report.certificate.certified)
        err << "warning: certificate is not certified (sampled or numerically integrated seminorms)\n";
    if (self_check && report.actual_error > report.certificate.bound) {
        if (report.certificate.certified) {
            err << "self-check failed: actual error " << report.actual_error << " exceeds certified bound "
                << report.certificate.bound << '\n';
            return exit_self_check;
        }
        err << "self-check: actual error exceeds the uncertified bound\n";
    }
    return report.converged ? exit_ok : exit_not_converged;
}

std::vector<CompareRow> compare_rules(const std::string& function, double a, double b, const std::string& regime_label,
                                      const std::vector<std::string>& rules, std::size_t resolution,
                                      std::size_t oracle_resolution)
{
    if (rules.empty())
        throw ValidationError("compare needs at least one rule");
    const VectorFunction fn = resolve([&] { return make_function(function); });
    const Interval interval = resolve([&] { return Interval{a, b}; });
    const NormRegime regime = resolve([&] { return NormRegime::parse(regime_label); });
    const Element oracle = oracle_integral(fn, interval, oracle_resolution);
    const SeminormEstimate global = seminorm(fn, interval, regime, resolution);

    std::vector<CompareRow> rows;
    for (const std::string& label : rules) {
        const QuadratureRule rule = resolve([&] { return parse_rule(label); });
        const ErrorCertificate cert = bound_level3(global, rule, interval);
        const Element approx = apply_rule(fn, rule, interval);
        rows.push_back({rule.name(), level3_geometry_factor(rule, Interval{0.0, 1.0}, regime), cert.bound,
                        subtract(approx, oracle).norm(), cert.certified});
    }
    std::stable_sort(rows.begin(), rows.end(),
                     [](const CompareRow& l, const CompareRow& r) { return l.bound < r.bound; });
    return rows;
}

std::string format_compare_table(const std::vector<CompareRow>& rows)
{
    std::ostringstream os;
    os << std::left << std::setw(28) << "rule" << std::setw(26) << "constant" << std::setw(26) << "bound"
       << std::setw(26) << "actual_error"
       << "certified\n";
    os << std::setprecision(17);
    for (const auto& r : rows)
        os << std::setw(28) << r.rule << std::setw(26) << r.constant << std::setw(26) << r.bound << std::setw(26)
           << r.actual_error << (r.certified ? "yes" : "no") << '\n';
    return os.str();
}

int run_cli(const std::vector<std::string>& args_in, std::ostream& out, std::ostream& err)
{
    std::vector<std::string> args = args_in;
    if (args.empty() || args.front().rfind("--", 0) == 0)
        args.insert(args.begin(), "run");

    CLI::App app{"Certified quadrature for vector-valued integrands", "certquad"};
    app.require_subcommand(1, 1);

    RunConfig config;
    std::vector<double> interval{0.0, 1.0};
    std::optional<std::size_t> oracle_override;

    auto* run_cmd = app.add_subcommand("run", "integrate one registered function and report a certificate");
    run_cmd->add_option("--function", config.function, "registered function name");
    run_cmd->add_option("--space", config.space, "space label: scalar, R<d>, R<d>max, C<d>, M<r>x<c>");
    run_cmd->add_option("--interval", interval, "endpoints a b")->expected(2)->allow_extra_args(false);
    run_cmd->add_option("--rule", config.rule, "rule preset NAME[:params]");
    run_cmd->add_option("--regime", config.regime, "l1 | lp:P | linf");
    run_cmd->add_option("--level", config.level, "certificate level 1, 2 or 3");
    run_cmd->add_option("--mode", config.mode, "single | composite:M | adaptive:TOL");
    run_cmd->add_option("--resolution", config.resolution, "panels for seminorm and level-1 integrals");
    run_cmd->add_option("--output", config.output, "json | csv | table");
    run_cmd->add_option("--threads", config.threads, "worker threads for panel work");
    run_cmd->add_option("--max-panels", config.max_panels, "panel budget for adaptive mode");
    run_cmd->add_option("--oracle-resolution", oracle_override, "reference Simpson subintervals");
    run_cmd->add_flag("--self-check", config.self_check, "fail when a certified bound is below the oracle error");
    run_cmd->add_flag("--timing", config.timing, "include wall-clock timing in the report");

    std::string cmp_function = "exp";
    std::vector<double> cmp_interval{0.0, 1.0};
    std::string cmp_regime = "linf";
    std::vector<std::string> cmp_rules{"trapezoid", "qt"};
    std::string cmp_output = "table";
    std::size_t cmp_resolution = default_resolution;
    auto* cmp_cmd = app.add_subcommand("compare", "rank rules by their level-3 certificate");
    cmp_cmd->add_option("--function", cmp_function, "registered function name");
    cmp_cmd->add_option("--interval", cmp_interval, "endpoints a b")->expected(2)->allow_extra_args(false);
    cmp_cmd->add_option("--regime", cmp_regime, "l1 | lp:P | linf");
    cmp_cmd->add_option("--rules", cmp_rules, "comma-separated rule presets");
    cmp_cmd->add_option("--resolution", cmp_resolution, "panels for seminorm integrals");
    cmp_cmd->add_option("--output", cmp_output, "table | json");

    auto* list_cmd = app.add_subcommand("list", "list registered functions and rule presets");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_validation;
    }

    try {
        const std::size_t oracle_res = oracle_override ? *oracle_override : oracle_resolution_from_env();
        if (*list_cmd) {
            out << "functions:\n";
            for (const auto& f : registry())
                out << "  " << std::left << std::setw(14) << f.name << f.native_space.label() << "  " << f.description
                    << '\n';
            out << "rules:\n";
            for (const auto& name : preset_names())
                out << "  " << name << '\n';
            return exit_ok;
        }
        if (*cmp_cmd) {
            // Accept both "a,b" and repeated --rules.
            std::vector<std::string> labels;
            for (const auto& item : cmp_rules) {
                std::stringstream ss(item);
                std::string part;
                while (std::getline(ss, part, ','))
                    if (!part.empty())
                        labels.push_back(part);
            }
            const auto rows = compare_rules(cmp_function, cmp_interval[0], cmp_interval[1], cmp_regime, labels,
                                            cmp_resolution, oracle_res);
            if (cmp_output == "json") {
                nlohmann::json j = nlohmann::json::array();
                for (const auto& r : rows)
                    j.push_back({{"rule", r.rule},
                                 {"constant", r.constant},
                                 {"bound", r.bound},
                                 {"actual_error", r.actual_error},
                                 {"certified", r.certified}});
                out << j.dump(2) << '\n';
            } else if (cmp_output == "table") {
                out << format_compare_table(rows);
            } else {
                throw ValidationError("compare output must be table or json");
            }
            return exit_ok;
        }

        config.a = interval[0];
        config.b = interval[1];
        config.oracle_resolution = oracle_res;
        const Report report = run(config);
        if (config.output == "json")
            out << emit_json(report) << '\n';
        else if (config.output == "csv")
            out << emit_csv(report);
        else
            out << emit_table(report);

        return exit_status(report, config.self_check, err);
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return exit_validation;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_validation;
    }
}

}  // namespace certquad::cli
