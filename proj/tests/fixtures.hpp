#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "invsr/endomorphism.hpp"
#include "invsr/generators.hpp"
#include "invsr/semigroup.hpp"

namespace fixtures {

inline invsr::FiniteSemigroup builtin(const char* kind, std::size_t param = 0) {
  return invsr::FiniteSemigroup::from_document(invsr::builtin_semigroup(kind, param));
}

inline invsr::SemigroupPtr shared(const char* kind, std::size_t param = 0) {
  return invsr::share(builtin(kind, param));
}

inline invsr::FiniteSemigroup from_doc(const invsr::SemigroupDocument& doc) {
  return invsr::FiniteSemigroup::from_document(doc);
}

inline invsr::FiniteSemigroup example() { return from_doc(invsr::worked_example()); }

inline invsr::SemigroupDocument doc(std::string name, std::vector<std::string> elements,
                                    std::vector<std::vector<std::int64_t>> table) {
  invsr::SemigroupDocument d;
  d.name = std::move(name);
  d.elements = std::move(elements);
  d.table = std::move(table);
  return d;
}

/// Commutative inverse semigroups with at most six elements.
inline std::vector<invsr::SemigroupDocument> small_corpus() {
  using invsr::builtin_semigroup;
  std::vector<invsr::SemigroupDocument> out;
  for (std::size_t k = 1; k <= 6; ++k) {
    out.push_back(builtin_semigroup("chain", k));
    out.push_back(builtin_semigroup("group-cyclic", k));
  }
  for (std::size_t k = 1; k <= 5; ++k) {
    out.push_back(builtin_semigroup("antichain-top", k));
  }
  for (const std::size_t n : {1, 2, 3, 5, 6}) {
    out.push_back(builtin_semigroup("zmod-mul", n));
  }
  out.push_back(builtin_semigroup("boolean", 2));
  out.push_back(invsr::worked_example());
  out.push_back(invsr::product_document(builtin_semigroup("zmod-mul", 3),
                                        builtin_semigroup("chain", 2)));
  out.push_back(invsr::product_document(builtin_semigroup("group-cyclic", 2),
                                        builtin_semigroup("chain", 2)));
  out.push_back(invsr::product_document(builtin_semigroup("group-cyclic", 3),
                                        builtin_semigroup("chain", 2)));
  out.push_back(invsr::product_document(builtin_semigroup("chain", 2),
                                        builtin_semigroup("chain", 3)));
  return out;
}

}  // namespace fixtures
