#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "invsr/theorem_report.hpp"

namespace invsr {

inline constexpr std::string_view kToolVersion = "0.3.0";
/// Bumped whenever a JSON report field changes meaning or disappears.
inline constexpr int kReportSchemaVersion = 1;

std::uint64_t fnv1a64(std::string_view bytes);
/// "fnv1a64:" followed by 16 lowercase hex digits.
std::string input_digest(std::string_view bytes);

enum class ReportFormat { text, json };

struct RunReport {
  std::string command;
  std::string digest;
  nlohmann::json payload = nlohmann::json::object();
  /// body of the text rendering, one entry per line
  std::vector<std::string> text;
  /// wall-clock milliseconds; only set when the caller asked for timing
  std::optional<double> timing_ms;
};

/// Text: a header, then the body lines. JSON: sorted keys, two-space
/// indent. Both end in a single LF and contain no CR.
std::string emit_report(const RunReport& report, ReportFormat format);

nlohmann::json theorem_reports_json(const std::vector<TheoremReport>& reports);
/// One line per report: verdict, theorem id, instance, detail.
std::vector<std::string> theorem_reports_text(const std::vector<TheoremReport>& reports);

struct VerdictTally {
  std::size_t holds = 0;
  std::size_t fails = 0;
  std::size_t precondition_unmet = 0;
  std::size_t erratum = 0;
};

VerdictTally tally(const std::vector<TheoremReport>& reports);

}  // namespace invsr
