// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "certquad/cli/report.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace certquad::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_validation = 2,
    exit_not_converged = 3,
    exit_self_check = 4,
};

/// Thrown for unresolvable labels or out-of-range numeric settings.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Executes one configured integration and builds its report. Throws
/// ValidationError for bad configurations.
Report run(const RunConfig& config);

/// Exit code for a finished run, writing warnings to `err`. Self-check fails
/// only when a certified bound is below the oracle error.
int exit_status(const Report& report, bool self_check, std::ostream& err);

struct CompareRow {
    std::string rule;
    double constant = 0.0;  // level-3 geometry factor on [0, 1]
    double bound = 0.0;
    double actual_error = 0.0;
    bool certified = false;
};

/// One level-3 row per rule, sorted by bound ascending (stable).
std::vector<CompareRow> compare_rules(const std::string& function, double a, double b, const std::string& regime,
                                      const std::vector<std::string>& rules,
                                      std::size_t resolution = default_resolution,
                                      std::size_t oracle_resolution = default_oracle_resolution);

std::string format_compare_table(const std::vector<CompareRow>& rows);

/// Oracle resolution from QUAD_ORACLE_RESOLUTION, else the default.
std::size_t oracle_resolution_from_env();

/// Full command line (without the program name). Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace certquad::cli
