#pragma once
// Text and JSON (schema version "1") renderings of a CheckReport.

#include <optional>
#include <string>

#include "ecsk/cli/runner.hpp"

namespace ecsk::cli {

enum class ReportFormat { Text, Json };

Json report_to_json(const CheckReport& report);
CheckReport report_from_json(const Json& j);

// Aligned table: check, points, max, mean, max/scale, tol, PASS/FAIL, then
// any point errors.
std::string format_text(const CheckReport& report);

// Writes to `path`, or to stdout when no path is given.
void emit_report(const CheckReport& report, ReportFormat format, const std::optional<std::string>& path);

}  // namespace ecsk::cli
