#include "invsr/generators.hpp"

#include <algorithm>
#include <functional>

#include "invsr/errors.hpp"

namespace invsr {
namespace {

using Op = std::function<std::size_t(std::size_t, std::size_t)>;

SemigroupDocument tabulate(std::string name, std::vector<std::string> labels,
                           const Op& op, SizeGuard guard) {
  SemigroupDocument doc;
  doc.name = std::move(name);
  const std::size_t n = labels.size();
  doc.elements = std::move(labels);
  doc.table.assign(n, std::vector<std::int64_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      doc.table[i][j] = static_cast<std::int64_t>(op(i, j));
    }
  }
  // fills identity / absorbing
  return FiniteSemigroup::from_document(doc, guard).to_document();
}

std::vector<std::string> numeric_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(std::to_string(i));
  }
  return out;
}

bool squarefree(std::size_t n) {
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) {
      return false;
    }
  }
  return true;
}

void require(bool ok, const std::string& message) {
  if (!ok) {
    throw PreconditionError(message);
  }
}

void check_count(std::size_t n, SizeGuard guard) {
  if (n > kMaxElements || (n > kElementLimit && !guard.force)) {
    throw GuardError("generator would produce " + std::to_string(n) +
                     " elements; the limit is " + std::to_string(kElementLimit) +
                     " (use --force to override)");
  }
}

}  // namespace

std::vector<std::string> builtin_kinds() {
  return {"chain",    "boolean",      "diamond", "antichain-top",
          "zmod-mul", "group-cyclic", "example"};
}

SemigroupDocument builtin_semigroup(std::string_view kind, std::size_t param,
                                    SizeGuard guard) {
  const std::string k(kind);
  const std::string suffix = std::to_string(param);
  if (k == "chain") {
    require(param >= 1, "chain needs k >= 1");
    check_count(param, guard);
    return tabulate("chain" + suffix, numeric_labels(param),
                    [](std::size_t i, std::size_t j) { return std::max(i, j); },
                    guard);
  }
  if (k == "boolean") {
    require(param >= 1, "boolean needs k >= 1");
    require(param < 8, "boolean k must be below 8");
    const std::size_t n = std::size_t{1} << param;
    check_count(n, guard);
    std::vector<std::string> labels;
    for (std::size_t s = 0; s < n; ++s) {
      std::string label = "{";
      for (std::size_t bit = 0; bit < param; ++bit) {
        if (s & (std::size_t{1} << bit)) {
          label += (label.size() > 1 ? "," : "") + std::to_string(bit + 1);
        }
      }
      labels.push_back(label + "}");
    }
    return tabulate("boolean" + suffix, std::move(labels),
                    [](std::size_t i, std::size_t j) { return i | j; }, guard);
  }
  if (k == "diamond") {
    auto doc = builtin_semigroup("boolean", 2, guard);
    doc.name = "diamond";
    return doc;
  }
  if (k == "antichain-top") {
    require(param >= 1, "antichain-top needs k >= 1");
    check_count(param + 1, guard);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < param; ++i) {
      labels.push_back("a" + std::to_string(i + 1));
    }
    labels.emplace_back("top");
    const std::size_t top = param;
    return tabulate("antichain-top" + suffix, std::move(labels),
                    [top](std::size_t i, std::size_t j) { return i == j ? i : top; },
                    guard);
  }
  if (k == "zmod-mul") {
    require(param >= 1, "zmod-mul needs n >= 1");
    require(squarefree(param),
            "zmod-mul n is an inverse semigroup only for squarefree n");
    check_count(param, guard);
    return tabulate("zmod-mul" + suffix, numeric_labels(param),
                    [param](std::size_t i, std::size_t j) { return (i * j) % param; },
                    guard);
  }
  if (k == "group-cyclic") {
    require(param >= 1, "group-cyclic needs n >= 1");
    check_count(param, guard);
    return tabulate("group-cyclic" + suffix, numeric_labels(param),
                    [param](std::size_t i, std::size_t j) { return (i + j) % param; },
                    guard);
  }
  if (k == "example") {
    return worked_example();
  }
  throw PreconditionError("unknown generator kind \"" + k + "\"");
}

SemigroupDocument product_document(const SemigroupDocument& a,
                                   const SemigroupDocument& b,
                                   SizeGuard guard) {
  const auto ga = FiniteSemigroup::from_document(a, guard);
  const auto gb = FiniteSemigroup::from_document(b, guard);
  return direct_product(ga, gb, guard).to_document();
}

SemigroupDocument worked_example() {
  auto doc = product_document(builtin_semigroup("zmod-mul", 3),
                              builtin_semigroup("zmod-mul", 2));
  doc.name = "example";
  return doc;
}

std::vector<CorpusEntry> builtin_corpus() {
  return {
      {"example", worked_example()},
      {"chain2", builtin_semigroup("chain", 2)},
      {"chain3", builtin_semigroup("chain", 3)},
      {"diamond", builtin_semigroup("diamond", 0)},
      {"antichain-top2", builtin_semigroup("antichain-top", 2)},
      {"z3-group", builtin_semigroup("group-cyclic", 3)},
  };
}

}  // namespace invsr
