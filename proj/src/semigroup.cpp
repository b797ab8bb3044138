#include "invsr/semigroup.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>

#include "invsr/errors.hpp"

namespace invsr {
namespace {

std::size_t padded_stride(std::size_t n) {
  return std::max(n, kernels::kMaxSimdElements);
}

void check_size(std::size_t n, SizeGuard guard) {
  if (n == 0) {
    throw FormatError("semigroup has no elements");
  }
  if (n > kMaxElements) {
    throw GuardError("semigroup has " + std::to_string(n) +
                     " elements; at most " + std::to_string(kMaxElements) +
                     " are representable");
  }
  if (n > kElementLimit && !guard.force) {
    throw GuardError("semigroup has " + std::to_string(n) +
                     " elements; the limit is " + std::to_string(kElementLimit) +
                     " (use --force to override)");
  }
}

// Structural checks, then the padded byte table.
std::vector<std::uint8_t> checked_cells(const SemigroupDocument& doc,
                                        SizeGuard guard) {
  const std::size_t n = doc.elements.size();
  check_size(n, guard);
  std::set<std::string> seen;
  for (const auto& label : doc.elements) {
    if (!seen.insert(label).second) {
      throw FormatError("duplicate element label \"" + label + "\"");
    }
  }
  if (doc.table.size() != n) {
    throw FormatError("table has " + std::to_string(doc.table.size()) +
                      " rows, expected " + std::to_string(n));
  }
  const std::size_t stride = padded_stride(n);
  std::vector<std::uint8_t> cells(n * stride, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (doc.table[i].size() != n) {
      throw FormatError("table row " + std::to_string(i) + " has " +
                        std::to_string(doc.table[i].size()) +
                        " entries, expected " + std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t v = doc.table[i][j];
      if (v < 0 || static_cast<std::uint64_t>(v) >= n) {
        throw FormatError("table[" + std::to_string(i) + "][" +
                          std::to_string(j) + "] = " + std::to_string(v) +
                          " is out of range [0, " + std::to_string(n) + ")");
      }
      cells[i * stride + j] = static_cast<std::uint8_t>(v);
    }
  }
  return cells;
}

ValidationReport check_axioms(const std::vector<std::uint8_t>& cells,
                              std::size_t n) {
  const std::size_t stride = padded_stride(n);
  auto at = [&](std::size_t i, std::size_t j) { return cells[i * stride + j]; };
  ValidationReport report;

  if (auto v = kernels::assoc_violation({cells, n, stride})) {
    report.failures.push_back({"associativity", {(*v)[0], (*v)[1], (*v)[2]}});
  }

  [&] {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (at(i, j) != at(j, i)) {
          report.failures.push_back({"commutativity", {i, j}});
          return;
        }
      }
    }
  }();

  std::optional<std::size_t> missing;
  std::optional<std::array<std::size_t, 3>> ambiguous;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> candidates;
    for (std::size_t j = 0; j < n; ++j) {
      if (at(at(i, j), i) == i && at(at(j, i), j) == j) {
        candidates.push_back(j);
      }
    }
    if (candidates.empty() && !missing) {
      missing = i;
    }
    if (candidates.size() > 1 && !ambiguous) {
      ambiguous = {i, candidates[0], candidates[1]};
    }
  }
  if (missing) {
    report.failures.push_back({"inverse-existence", {*missing}});
  }
  if (ambiguous) {
    report.failures.push_back(
        {"inverse-uniqueness", {(*ambiguous)[0], (*ambiguous)[1], (*ambiguous)[2]}});
  }
  return report;
}

std::string describe(const ValidationReport& report) {
  std::string out = "semigroup axioms violated:";
  for (const auto& f : report.failures) {
    out += " " + f.axiom;
  }
  return out;
}

}  // namespace

AxiomError::AxiomError(ValidationReport report)
    : std::runtime_error(describe(report)), report_(std::move(report)) {}

ValidationReport validate_semigroup(const SemigroupDocument& doc,
                                    SizeGuard guard) {
  const auto cells = checked_cells(doc, guard);
  return check_axioms(cells, doc.elements.size());
}

FiniteSemigroup FiniteSemigroup::from_document(const SemigroupDocument& doc,
                                               SizeGuard guard) {
  FiniteSemigroup g;
  g.cells_ = checked_cells(doc, guard);
  const std::size_t n = doc.elements.size();
  if (auto report = check_axioms(g.cells_, n); !report.valid()) {
    throw AxiomError(std::move(report));
  }
  g.name_ = doc.name;
  g.labels_ = doc.elements;
  g.stride_ = padded_stride(n);

  g.inverse_.resize(n);
  g.zero_part_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (g.add(g.add(i, j), i) == i && g.add(g.add(j, i), j) == j) {
        g.inverse_[i] = static_cast<std::uint8_t>(j);
        break;
      }
    }
    g.zero_part_[i] = g.add(i, g.inverse_[i]);
    if (g.add(i, i) == i) {
      g.idempotents_.emplace_back(i);
    }
  }

  for (std::size_t e = 0; e < n; ++e) {
    bool is_identity = true;
    bool is_absorbing = true;
    for (std::size_t x = 0; x < n; ++x) {
      is_identity = is_identity && g.add(e, x) == x;
      is_absorbing = is_absorbing && g.add(e, x) == e;
    }
    if (is_identity) {
      g.identity_ = ElementId(e);
    }
    if (is_absorbing) {
      g.absorbing_ = ElementId(e);
    }
  }

  auto check_declared = [&](const std::optional<std::string>& declared,
                            std::optional<ElementId> actual,
                            const char* what) {
    if (!declared) {
      return;
    }
    if (!actual || g.label(*actual) != *declared) {
      throw FormatError(std::string("declared ") + what + " \"" + *declared +
                        "\" does not match the table");
    }
  };
  check_declared(doc.identity, g.identity_, "identity");
  check_declared(doc.absorbing, g.absorbing_, "absorbing element");
  return g;
}

std::optional<ElementId> FiniteSemigroup::find(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    return std::nullopt;
  }
  return ElementId(static_cast<std::size_t>(it - labels_.begin()));
}

SemigroupDocument FiniteSemigroup::to_document() const {
  SemigroupDocument doc;
  doc.name = name_;
  doc.elements = labels_;
  const std::size_t n = size();
  doc.table.assign(n, std::vector<std::int64_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      doc.table[i][j] = add(i, j);
    }
  }
  if (identity_) {
    doc.identity = label(*identity_);
  }
  if (absorbing_) {
    doc.absorbing = label(*absorbing_);
  }
  return doc;
}

ExtremalIdempotents extremal_idempotents(const FiniteSemigroup& g) {
  ExtremalIdempotents out;
  const auto& es = g.idempotents();
  auto below = [&](ElementId e, ElementId f) { return g.add(e, f) == f; };
  for (ElementId e : es) {
    if (std::all_of(es.begin(), es.end(), [&](ElementId f) { return below(e, f); })) {
      out.least = e;
    }
    if (std::all_of(es.begin(), es.end(), [&](ElementId f) { return below(f, e); })) {
      out.greatest = e;
    }
  }
  return out;
}

DistinguishedElements distinguished_elements(const FiniteSemigroup& g) {
  return {g.identity(), g.absorbing()};
}

std::vector<std::pair<ElementId, ElementId>> idempotent_hasse_pairs(
    const FiniteSemigroup& g) {
  const auto& es = g.idempotents();
  auto strictly_below = [&](ElementId e, ElementId f) {
    return e != f && g.add(e, f) == f;
  };
  std::vector<std::pair<ElementId, ElementId>> out;
  for (ElementId e : es) {
    for (ElementId f : es) {
      if (!strictly_below(e, f)) {
        continue;
      }
      const bool covered = std::none_of(es.begin(), es.end(), [&](ElementId h) {
        return strictly_below(e, h) && strictly_below(h, f);
      });
      if (covered) {
        out.emplace_back(e, f);
      }
    }
  }
  return out;
}

bool idempotents_form_lattice(const FiniteSemigroup& g) {
  const auto& es = g.idempotents();
  auto below = [&](ElementId e, ElementId f) { return g.add(e, f) == f; };
  for (ElementId e : es) {
    for (ElementId f : es) {
      std::vector<ElementId> lower;
      for (ElementId h : es) {
        if (below(h, e) && below(h, f)) {
          lower.push_back(h);
        }
      }
      const bool has_meet = std::any_of(lower.begin(), lower.end(), [&](ElementId m) {
        return std::all_of(lower.begin(), lower.end(),
                           [&](ElementId h) { return below(h, m); });
      });
      if (!has_meet) {
        return false;
      }
    }
  }
  return true;
}

FiniteSemigroup direct_product(const FiniteSemigroup& a,
                               const FiniteSemigroup& b, SizeGuard guard) {
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  check_size(na * nb, guard);
  SemigroupDocument doc;
  doc.name = a.name() + " x " + b.name();
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      doc.elements.push_back("(" + a.labels()[i] + "," + b.labels()[j] + ")");
    }
  }
  const std::size_t n = na * nb;
  doc.table.assign(n, std::vector<std::int64_t>(n));
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      doc.table[p][q] = static_cast<std::int64_t>(
          a.add(p / nb, q / nb) * nb + b.add(p % nb, q % nb));
    }
  }
  return FiniteSemigroup::from_document(doc, guard);
}

IdempotentSemilattice idempotent_semilattice(const FiniteSemigroup& g) {
  const auto& es = g.idempotents();
  std::vector<std::optional<ElementId>> position(g.size());
  for (std::size_t k = 0; k < es.size(); ++k) {
    position[es[k].value()] = ElementId(k);
  }
  SemigroupDocument doc;
  doc.name = "E(" + g.name() + ")";
  for (ElementId e : es) {
    doc.elements.push_back(g.label(e));
  }
  doc.table.assign(es.size(), std::vector<std::int64_t>(es.size()));
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = 0; j < es.size(); ++j) {
      doc.table[i][j] = position[g.add(es[i], es[j]).value()]->value();
    }
  }
  return {FiniteSemigroup::from_document(doc, SizeGuard{true}), es,
          std::move(position)};
}

std::optional<std::vector<std::uint8_t>> find_isomorphism(
    const FiniteSemigroup& a, const FiniteSemigroup& b) {
  const std::size_t n = a.size();
  if (n != b.size() || a.idempotents().size() != b.idempotents().size()) {
    return std::nullopt;
  }
  std::vector<std::uint8_t> phi(n);
  std::vector<bool> used(n, false);
  // phi is fixed on [0, k]; every product of fixed elements that lands on a
  // fixed element must be preserved.
  std::function<bool(std::size_t)> extend = [&](std::size_t k) -> bool {
    if (k == n) {
      return true;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v]) {
        continue;
      }
      phi[k] = static_cast<std::uint8_t>(v);
      bool ok = true;
      for (std::size_t i = 0; i <= k && ok; ++i) {
        for (std::size_t j = 0; j <= k; ++j) {
          const std::size_t p = a.add(i, j);
          if (p <= k && phi[p] != b.add(phi[i], phi[j])) {
            ok = false;
            break;
          }
        }
      }
      if (ok) {
        used[v] = true;
        if (extend(k + 1)) {
          return true;
        }
        used[v] = false;
      }
    }
    return false;
  };
  if (extend(0)) {
    return phi;
  }
  return std::nullopt;
}

}  // namespace invsr
