// SPDX-License-Identifier: Apache-2.0
#include "certquad/cli/report.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace certquad::cli {

using nlohmann::json;

void to_json(json& j, const Report& r)
{
    json panels = json::array();
    for (const auto& p : r.panels)
        panels.push_back({{"a", p.a}, {"b", p.b}, {"approximation_norm", p.approximation_norm}, {"bound", p.bound}});
    j = json{
        {"schema", r.schema},
        {"config",
         {{"function", r.function},
          {"space", r.space},
          {"interval", {r.a, r.b}},
          {"rule", r.rule},
          {"regime", r.regime},
          {"level", r.level},
          {"mode", r.mode},
          {"resolution", r.resolution},
          {"oracle_resolution", r.oracle_resolution}}},
        {"approximation", r.approximation},
        {"oracle", r.oracle},
        {"actual_error", r.actual_error},
        {"certificate",
         {{"bound", r.certificate.bound},
          {"level", r.certificate.level},
          {"regime", r.certificate.regime},
          {"certified", r.certificate.certified},
          {"segments", r.certificate.segments}}},
        {"panels", panels},
        {"evaluations", r.evaluations},
        {"converged", r.converged},
    };
    if (r.timing_ms)
        j["timing_ms"] = *r.timing_ms;
}

void from_json(const json& j, Report& r)
{
    r.schema = j.at("schema").get<int>();
    if (r.schema != report_schema)
        throw std::invalid_argument("unsupported report schema " + std::to_string(r.schema));
    const json& c = j.at("config");
    r.function = c.at("function").get<std::string>();
    r.space = c.at("space").get<std::string>();
    r.a = c.at("interval").at(0).get<double>();
    r.b = c.at("interval").at(1).get<double>();
    r.rule = c.at("rule").get<std::string>();
    r.regime = c.at("regime").get<std::string>();
    r.level = c.at("level").get<int>();
    r.mode = c.at("mode").get<std::string>();
    r.resolution = c.at("resolution").get<std::size_t>();
    r.oracle_resolution = c.at("oracle_resolution").get<std::size_t>();
    r.approximation = j.at("approximation").get<std::vector<double>>();
    r.oracle = j.at("oracle").get<std::vector<double>>();
    r.actual_error = j.at("actual_error").get<double>();
    const json& cert = j.at("certificate");
    r.certificate.bound = cert.at("bound").get<double>();
    r.certificate.level = cert.at("level").get<int>();
    r.certificate.regime = cert.at("regime").get<std::string>();
    r.certificate.certified = cert.at("certified").get<bool>();
    r.certificate.segments = cert.at("segments").get<std::vector<double>>();
    r.panels.clear();
    for (const json& p : j.at("panels"))
        r.panels.push_back({p.at("a").get<double>(), p.at("b").get<double>(), p.at("approximation_norm").get<double>(),
                            p.at("bound").get<double>()});
    r.evaluations = j.at("evaluations").get<std::size_t>();
    r.converged = j.at("converged").get<bool>();
    r.timing_ms = j.contains("timing_ms") ? std::optional<double>(j.at("timing_ms").get<double>()) : std::nullopt;
}

std::string emit_json(const Report& r) { return json(r).dump(2); }

Report parse_json(const std::string& text) { return json::parse(text).get<Report>(); }

std::string emit_csv(const Report& r)
{
    std::ostringstream os;
    os << std::setprecision(17);
    os << "panel,a,b,approximation_norm,bound\n";
    for (std::size_t i = 0; i < r.panels.size(); ++i) {
        const auto& p = r.panels[i];
        os << i << ',' << p.a << ',' << p.b << ',' << p.approximation_norm << ',' << p.bound << '\n';
    }
    return os.str();
}

std::string emit_table(const Report& r)
{
    std::ostringstream os;
    os << std::setprecision(17);
    auto list = [&os](const std::vector<double>& v) {
        os << '(';
        for (std::size_t i = 0; i < v.size(); ++i)
            os << (i ? ", " : "") << v[i];
        os << ')';
    };
    os << "function      " << r.function << " in " << r.space << " on [" << r.a << ", " << r.b << "]\n";
    os << "rule          " << r.rule << "  mode " << r.mode << '\n';
    os << "approximation ";
    list(r.approximation);
    os << "\noracle        ";
    list(r.oracle);
    os << "\nactual error  " << r.actual_error << '\n';
    os << "bound         " << r.certificate.bound << "  (level " << r.certificate.level << ", "
       << r.certificate.regime << ")\n";
    os << "certified     " << (r.certificate.certified ? "yes" : "NO (sampled seminorms)") << '\n';
    os << "panels        " << r.panels.size() << "  evaluations " << r.evaluations
       << "  converged " << (r.converged ? "yes" : "no") << '\n';
    if (r.timing_ms)
        os << "time          " << *r.timing_ms << " ms\n";
    return os.str();
}

}  // namespace certquad::cli
