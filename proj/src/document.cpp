#include "invsr/document.hpp"

#include <set>

#include <json.hpp>

#include "invsr/errors.hpp"

namespace invsr {
namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& pointer,
                               const std::string& message) {
  throw FormatError("schema violation at " + pointer + ": " + message);
}

std::string json_string(const std::string& s) { return json(s).dump(); }

void check_declared(const SemigroupDocument& doc,
                    const std::optional<std::string>& declared,
                    const char* field, bool identity) {
  if (!declared) {
    return;
  }
  const auto& els = doc.elements;
  std::size_t e = 0;
  while (e < els.size() && els[e] != *declared) {
    ++e;
  }
  if (e == els.size()) {
    schema_error(std::string("/") + field,
                 "label " + json_string(*declared) + " is not an element");
  }
  for (std::size_t x = 0; x < els.size(); ++x) {
    const auto ex = static_cast<std::size_t>(doc.table[e][x]);
    const auto xe = static_cast<std::size_t>(doc.table[x][e]);
    const std::size_t want = identity ? x : e;
    if (ex != want || xe != want) {
      throw FormatError(std::string("declared ") + field + " " +
                        json_string(*declared) + " mismatch: " + els[e] + " + " +
                        els[x] + " = " + els[ex]);
    }
  }
}

}  // namespace

SemigroupDocument parse_document(std::string_view bytes) {
  json root;
  try {
    root = json::parse(bytes.begin(), bytes.end());
  } catch (const json::parse_error& e) {
    throw FormatError("syntax error at byte " + std::to_string(e.byte) + ": " +
                      e.what());
  }
  if (!root.is_object()) {
    schema_error("/", "expected an object");
  }
  static const std::set<std::string> kKnown = {"name", "elements", "table",
                                                "identity", "absorbing"};
  for (const auto& [key, value] : root.items()) {
    if (!kKnown.contains(key)) {
      schema_error("/" + key, "unknown field");
    }
  }
  for (const char* required : {"name", "elements", "table"}) {
    if (!root.contains(required)) {
      schema_error(std::string("/") + required, "missing required field");
    }
  }

  SemigroupDocument doc;
  if (!root["name"].is_string()) {
    schema_error("/name", "expected a string");
  }
  doc.name = root["name"].get<std::string>();

  const json& elements = root["elements"];
  if (!elements.is_array() || elements.empty()) {
    schema_error("/elements", "expected a non-empty array of strings");
  }
  std::set<std::string> seen;
  for (std::size_t k = 0; k < elements.size(); ++k) {
    if (!elements[k].is_string()) {
      schema_error("/elements/" + std::to_string(k), "expected a string");
    }
    auto label = elements[k].get<std::string>();
    if (!seen.insert(label).second) {
      schema_error("/elements/" + std::to_string(k),
                   "duplicate label " + json_string(label));
    }
    doc.elements.push_back(std::move(label));
  }
  const std::size_t n = doc.elements.size();

  const json& table = root["table"];
  if (!table.is_array() || table.size() != n) {
    schema_error("/table", "expected an array of " + std::to_string(n) + " rows");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const std::string row_ptr = "/table/" + std::to_string(i);
    if (!table[i].is_array() || table[i].size() != n) {
      schema_error(row_ptr, "expected an array of " + std::to_string(n) +
                                " integers");
    }
    std::vector<std::int64_t> row;
    for (std::size_t j = 0; j < n; ++j) {
      const json& cell = table[i][j];
      if (!cell.is_number_integer()) {
        schema_error(row_ptr + "/" + std::to_string(j), "expected an integer");
      }
      const auto v = cell.get<std::int64_t>();
      if (v < 0 || static_cast<std::uint64_t>(v) >= n) {
        schema_error(row_ptr + "/" + std::to_string(j),
                     "index " + std::to_string(v) + " out of range");
      }
      row.push_back(v);
    }
    doc.table.push_back(std::move(row));
  }

  for (const char* field : {"identity", "absorbing"}) {
    if (!root.contains(field)) {
      continue;
    }
    if (!root[field].is_string()) {
      schema_error(std::string("/") + field, "expected a string label");
    }
    (field[0] == 'i' ? doc.identity : doc.absorbing) =
        root[field].get<std::string>();
  }
  check_declared(doc, doc.identity, "identity", true);
  check_declared(doc, doc.absorbing, "absorbing", false);
  return doc;
}

std::string emit_document(const SemigroupDocument& doc) {
  std::string out = "{\n";
  out += "  \"name\": " + json_string(doc.name) + ",\n";
  out += "  \"elements\": [";
  for (std::size_t k = 0; k < doc.elements.size(); ++k) {
    out += (k ? ", " : "") + json_string(doc.elements[k]);
  }
  out += "],\n  \"table\": [\n";
  for (std::size_t i = 0; i < doc.table.size(); ++i) {
    out += "    [";
    for (std::size_t j = 0; j < doc.table[i].size(); ++j) {
      out += (j ? ", " : "") + std::to_string(doc.table[i][j]);
    }
    out += i + 1 < doc.table.size() ? "],\n" : "]\n";
  }
  out += "  ]";
  if (doc.identity) {
    out += ",\n  \"identity\": " + json_string(*doc.identity);
  }
  if (doc.absorbing) {
    out += ",\n  \"absorbing\": " + json_string(*doc.absorbing);
  }
  out += "\n}\n";
  return out;
}

}  // namespace invsr
