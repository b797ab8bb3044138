#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "invsr/document.hpp"
#include "invsr/kernels.hpp"

namespace invsr {

/// Index of an element in its owning semigroup.
struct ElementId {
  std::uint8_t index = 0;

  constexpr ElementId() = default;
  constexpr explicit ElementId(std::size_t i)
      : index(static_cast<std::uint8_t>(i)) {}
  [[nodiscard]] constexpr std::size_t value() const { return index; }

  friend constexpr auto operator<=>(ElementId, ElementId) = default;
};

/// Default ceiling on |G| for validation and the structural queries.
inline constexpr std::size_t kElementLimit = 12;
/// Hard ceiling: indices are stored as bytes.
inline constexpr std::size_t kMaxElements = 255;

/// Size guards throw GuardError when exceeded unless `force` is set.
struct SizeGuard {
  bool force = false;
};

struct AxiomFailure {
  std::string axiom;
  /// Element indices: (i, j, k) for associativity, (i, j) for
  /// commutativity, (i) for inverse existence, (i, j1, j2) for uniqueness.
  std::vector<std::size_t> witness;

  friend bool operator==(const AxiomFailure&, const AxiomFailure&) = default;
};

struct ValidationReport {
  std::vector<AxiomFailure> failures;

  [[nodiscard]] bool valid() const { return failures.empty(); }
};

/// Checks associativity, commutativity and existence/uniqueness of
/// inverses exhaustively, one lexicographically minimal witness per
/// violated axiom. Throws FormatError for a malformed table (non-square,
/// out-of-range index, wrong label count) and GuardError above the size
/// guard.
ValidationReport validate_semigroup(const SemigroupDocument& doc,
                                    SizeGuard guard = {});

/// Thrown by FiniteSemigroup::from_document when an axiom fails.
class AxiomError : public std::runtime_error {
 public:
  explicit AxiomError(ValidationReport report);
  [[nodiscard]] const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// A validated finite commutative inverse semigroup (G, +) given by its
/// Cayley table. Immutable; inverses, zero parts and idempotents are
/// precomputed.
class FiniteSemigroup {
 public:
  /// Validates and builds. Throws FormatError, GuardError or AxiomError.
  static FiniteSemigroup from_document(const SemigroupDocument& doc,
                                       SizeGuard guard = {});

  [[nodiscard]] std::size_t size() const { return labels_.size(); }
  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] const std::string& label(ElementId a) const {
    return labels_[a.value()];
  }
  [[nodiscard]] const std::vector<std::string>& labels() const {
    return labels_;
  }
  [[nodiscard]] std::optional<ElementId> find(const std::string& label) const;

  [[nodiscard]] ElementId add(ElementId a, ElementId b) const {
    return ElementId(cells_[a.value() * stride_ + b.value()]);
  }
  [[nodiscard]] std::uint8_t add(std::size_t a, std::size_t b) const {
    return cells_[a * stride_ + b];
  }

  /// The unique a' with a+a'+a = a and a'+a+a' = a'.
  [[nodiscard]] ElementId inverse_of(ElementId a) const {
    return ElementId(inverse_[a.value()]);
  }
  /// a⁰ = a + a', the identity of the group component containing a.
  [[nodiscard]] ElementId zero_part(ElementId a) const {
    return ElementId(zero_part_[a.value()]);
  }
  [[nodiscard]] std::uint8_t zero_part(std::size_t a) const {
    return zero_part_[a];
  }
  [[nodiscard]] bool is_idempotent(ElementId a) const {
    return add(a, a) == a;
  }
  /// a ≤_q b iff a + a' + b = b.
  [[nodiscard]] bool leq_q(ElementId a, ElementId b) const {
    return add(zero_part(a), b) == b;
  }
  [[nodiscard]] bool leq_q(std::size_t a, std::size_t b) const {
    return add(zero_part_[a], b) == b;
  }

  [[nodiscard]] const std::vector<ElementId>& idempotents() const {
    return idempotents_;
  }
  [[nodiscard]] std::optional<ElementId> identity() const { return identity_; }
  [[nodiscard]] std::optional<ElementId> absorbing() const {
    return absorbing_;
  }

  /// Padded view for the kernels (stride >= 16).
  [[nodiscard]] kernels::TableRef table() const {
    return {cells_, size(), stride_};
  }

  /// Round-trips to the document this semigroup was built from, with the
  /// identity/absorbing labels filled in when they exist.
  [[nodiscard]] SemigroupDocument to_document() const;

  friend bool operator==(const FiniteSemigroup& a, const FiniteSemigroup& b) {
    return a.labels_ == b.labels_ && a.cells_ == b.cells_;
  }

 private:
  FiniteSemigroup() = default;

  std::string name_;
  std::vector<std::string> labels_;
  std::size_t stride_ = 0;
  std::vector<std::uint8_t> cells_;
  std::vector<std::uint8_t> inverse_;
  std::vector<std::uint8_t> zero_part_;
  std::vector<ElementId> idempotents_;
  std::optional<ElementId> identity_;
  std::optional<ElementId> absorbing_;
};

inline ElementId inverse_of(const FiniteSemigroup& g, ElementId a) {
  return g.inverse_of(a);
}
inline ElementId zero_part(const FiniteSemigroup& g, ElementId a) {
  return g.zero_part(a);
}
inline bool leq_q(const FiniteSemigroup& g, ElementId a, ElementId b) {
  return g.leq_q(a, b);
}
inline const std::vector<ElementId>& idempotent_set(const FiniteSemigroup& g) {
  return g.idempotents();
}

struct ExtremalIdempotents {
  std::optional<ElementId> least;
  std::optional<ElementId> greatest;
};

/// Least and greatest of E(G) under e ≤ f iff e + f = f.
ExtremalIdempotents extremal_idempotents(const FiniteSemigroup& g);

struct DistinguishedElements {
  std::optional<ElementId> identity;
  std::optional<ElementId> absorbing;
};

DistinguishedElements distinguished_elements(const FiniteSemigroup& g);

/// Covering pairs (e, f), e < f, of the semilattice order on E(G).
std::vector<std::pair<ElementId, ElementId>> idempotent_hasse_pairs(
    const FiniteSemigroup& g);

/// True when every pair of idempotents has a greatest lower bound in E(G).
/// (Joins always exist: e + f.)
bool idempotents_form_lattice(const FiniteSemigroup& g);

/// Componentwise operation on pairs, labelled "(la,lb)", A-major order.
FiniteSemigroup direct_product(const FiniteSemigroup& a,
                               const FiniteSemigroup& b, SizeGuard guard = {});

/// E(G) as a semilattice in its own right, plus the index of each of its
/// elements in G.
struct IdempotentSemilattice {
  FiniteSemigroup semilattice;
  std::vector<ElementId> in_ambient;
  /// position in `semilattice` of each idempotent of G; absent for others
  std::vector<std::optional<ElementId>> position;
};

IdempotentSemilattice idempotent_semilattice(const FiniteSemigroup& g);

/// Image vector of an isomorphism a -> b, if one exists.
std::optional<std::vector<std::uint8_t>> find_isomorphism(
    const FiniteSemigroup& a, const FiniteSemigroup& b);

}  // namespace invsr
