#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace invsr {

/// On-disk description of a finite semigroup. Element identity is the
/// position in `elements`; `table[i][j]` is the index of elements[i] +
/// elements[j].
struct SemigroupDocument {
  std::string name;
  std::vector<std::string> elements;
  std::vector<std::vector<std::int64_t>> table;
  std::optional<std::string> identity;
  std::optional<std::string> absorbing;

  friend bool operator==(const SemigroupDocument&,
                         const SemigroupDocument&) = default;
};

/// Parses UTF-8 JSON with exactly the fields name, elements, table and the
/// optional identity / absorbing labels. Throws FormatError carrying the
/// byte offset (syntax) or JSON pointer (schema) of the problem. A declared
/// identity or absorbing label must behave as one on the table.
SemigroupDocument parse_document(std::string_view bytes);

/// Canonical text: fixed key order, one table row per line, LF endings.
/// parse_document(emit_document(d)) == d for every structurally valid d.
std::string emit_document(const SemigroupDocument& doc);

}  // namespace invsr
