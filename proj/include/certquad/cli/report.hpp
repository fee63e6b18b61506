// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "certquad/bounds.hpp"
#include "certquad/engine.hpp"

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace certquad::cli {

inline constexpr int report_schema = 1;

/// Parsed command-line run. Labels are resolved lazily by `run`.
struct RunConfig {
    std::string function = "exp";
    std::optional<std::string> space;
    double a = 0.0;
    double b = 1.0;
    std::string rule = "trapezoid";
    std::string regime = "linf";
    int level = 3;
    std::string mode = "single";
    std::size_t resolution = default_resolution;
    std::string output = "json";
    std::size_t threads = 1;
    bool self_check = false;
    bool timing = false;
    std::size_t oracle_resolution = default_oracle_resolution;
    std::size_t max_panels = 4096;
};

struct CertificateSummary {
    double bound = 0.0;
    int level = 3;
    std::string regime;
    bool certified = false;
    std::vector<double> segments;
    friend bool operator==(const CertificateSummary&, const CertificateSummary&) = default;
};

struct PanelSummary {
    double a = 0.0;
    double b = 0.0;
    double approximation_norm = 0.0;
    double bound = 0.0;
    friend bool operator==(const PanelSummary&, const PanelSummary&) = default;
};

struct Report {
    int schema = report_schema;
    // Config echo.
    std::string function;
    std::string space;
    double a = 0.0;
    double b = 0.0;
    std::string rule;
    std::string regime;
    int level = 3;
    std::string mode;
    std::size_t resolution = 0;
    std::size_t oracle_resolution = 0;
    // Results.
    std::vector<double> approximation;
    std::vector<double> oracle;
    double actual_error = 0.0;
    CertificateSummary certificate;
    std::vector<PanelSummary> panels;
    std::size_t evaluations = 0;
    bool converged = true;
    std::optional<double> timing_ms;

    friend bool operator==(const Report&, const Report&) = default;
};

void to_json(nlohmann::json& j, const Report& r);
void from_json(const nlohmann::json& j, Report& r);

std::string emit_json(const Report& r);
Report parse_json(const std::string& text);
std::string emit_csv(const Report& r);
std::string emit_table(const Report& r);

}  // namespace certquad::cli
