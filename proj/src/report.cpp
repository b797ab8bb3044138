#include "invsr/report.hpp"

#include <cstdio>

namespace invsr {

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string input_digest(std::string_view bytes) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(bytes)));
  return std::string("fnv1a64:") + buf;
}

std::string emit_report(const RunReport& report, ReportFormat format) {
  if (format == ReportFormat::json) {
    nlohmann::json doc = {
        {"tool", "invsr"},
        {"version", kToolVersion},
        {"schema", kReportSchemaVersion},
        {"command", report.command},
        {"input", report.digest},
        {"result", report.payload},
    };
    if (report.timing_ms) {
      doc["timing_ms"] = *report.timing_ms;
    }
    return doc.dump(2) + "\n";
  }
  std::string out = "invsr " + std::string(kToolVersion) + " " + report.command + "\n";
  out += "input: " + report.digest + "\n";
  for (const auto& line : report.text) {
    out += line;
    out += '\n';
  }
  if (report.timing_ms) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "time: %.3f ms\n", *report.timing_ms);
    out += buf;
  }
  return out;
}

nlohmann::json theorem_reports_json(const std::vector<TheoremReport>& reports) {
  auto out = nlohmann::json::array();
  for (const auto& r : reports) {
    out.push_back({{"theorem", r.theorem},
                   {"instance", r.instance},
                   {"verdict", verdict_name(r.verdict)},
                   {"detail", r.detail},
                   {"witness", r.witness}});
  }
  return out;
}

std::vector<std::string> theorem_reports_text(const std::vector<TheoremReport>& reports) {
  std::vector<std::string> out;
  out.reserve(reports.size());
  for (const auto& r : reports) {
    std::string line(verdict_name(r.verdict));
    line.resize(20, ' ');
    line += r.theorem;
    line += "  [" + r.instance + "]";
    if (!r.detail.empty()) {
      line += "  " + r.detail;
    }
    out.push_back(std::move(line));
  }
  return out;
}

VerdictTally tally(const std::vector<TheoremReport>& reports) {
  VerdictTally t;
  for (const auto& r : reports) {
    switch (r.verdict) {
      case Verdict::holds:
        ++t.holds;
        break;
      case Verdict::fails:
        ++t.fails;
        break;
      case Verdict::precondition_unmet:
        ++t.precondition_unmet;
        break;
      case Verdict::erratum:
        ++t.erratum;
        break;
    }
  }
  return t;
}

}  // namespace invsr
