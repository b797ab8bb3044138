#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace invsr {

enum class Verdict { holds, fails, precondition_unmet, erratum };

std::string_view verdict_name(Verdict v);

/// One checked statement on one instance. A `fails` or `erratum` verdict
/// always carries a non-empty witness.
struct TheoremReport {
  std::string theorem;
  std::string instance;
  Verdict verdict = Verdict::holds;
  std::string detail;
  nlohmann::json witness = nlohmann::json::object();
};

/// Image vector as a JSON array of element indices.
nlohmann::json images_json(std::span<const std::uint8_t> images);

/// Catalogue of checked statements in presentation order.
struct TheoremInfo {
  std::string_view id;
  std::string_view statement;
};

const std::vector<TheoremInfo>& theorem_catalogue();

/// Position of `id` in the catalogue; unknown ids sort last.
std::size_t theorem_rank(std::string_view id);

/// Stable order: catalogue rank, then instance label.
void sort_reports(std::vector<TheoremReport>& reports);

}  // namespace invsr
