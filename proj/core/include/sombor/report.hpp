#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sombor/extremal.hpp"
#include "sombor/inequalities.hpp"

namespace sombor {

/// Echo of the command line a report came from, so the run can be
/// reproduced from the report alone. The timestamp is optional so that
/// repeated runs can be byte-identical.
struct Invocation {
    std::vector<std::string> argv;
    std::optional<std::string> timestamp;
};

std::string current_utc_timestamp();

/// Doubles rendered with 17 significant digits (round-trip exact).
std::string format_double(double x);

/// One line of a `compute` report.
struct ComputeRow {
    std::string graph6;
    IndexSpec index;
    double value = 0.0;
    std::string note;  // e.g. parameters outside the catalog's hypotheses
};

// JSON reports share the top-level shape {invocation, summary, rows} with
// fixed key order; identical invocations produce identical bytes when the
// timestamp is suppressed.
std::string suite_report_json(const SuiteReport& report, const Invocation& invocation);
std::string suite_report_csv(const SuiteReport& report);
std::string suite_report_text(const SuiteReport& report);

std::string compute_report_json(const std::vector<ComputeRow>& rows, const Invocation& invocation);
std::string compute_report_csv(const std::vector<ComputeRow>& rows);
std::string compute_report_text(const std::vector<ComputeRow>& rows);

std::string extremal_report_json(const ExtremalReport& report, const Invocation& invocation);
std::string extremal_report_text(const ExtremalReport& report);

/// Grid file: one "symbol: values" line per parameter (alpha, beta, lambda,
/// mu, p), values as decimals or simple fractions, '#' comments allowed.
/// Symbols left out fall back to the default grid.
ParameterGrid parse_grid(std::string_view text);
ParameterGrid load_grid_from_file(const std::string& path);
std::string grid_to_text(const ParameterGrid& grid);

}  // namespace sombor
