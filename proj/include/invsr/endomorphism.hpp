#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "invsr/semigroup.hpp"

namespace invsr {

using SemigroupPtr = std::shared_ptr<const FiniteSemigroup>;

inline SemigroupPtr share(FiniteSemigroup g) {
  return std::make_shared<const FiniteSemigroup>(std::move(g));
}

/// A total self-map of G stored as its image vector. Equality and order
/// are those of the image vector.
class Endomorphism {
 public:
  Endomorphism() = default;
  explicit Endomorphism(std::vector<std::uint8_t> images)
      : images_(std::move(images)) {}

  [[nodiscard]] std::size_t size() const { return images_.size(); }
  [[nodiscard]] ElementId operator()(ElementId x) const {
    return ElementId(images_[x.value()]);
  }
  [[nodiscard]] std::uint8_t operator[](std::size_t x) const {
    return images_[x];
  }
  [[nodiscard]] std::span<const std::uint8_t> images() const {
    return images_;
  }
  [[nodiscard]] const std::vector<std::uint8_t>& vector() const {
    return images_;
  }

  friend auto operator<=>(const Endomorphism&, const Endomorphism&) = default;
  friend bool operator==(const Endomorphism&, const Endomorphism&) = default;

 private:
  std::vector<std::uint8_t> images_;
};

struct EndomorphismHash {
  std::size_t operator()(const Endomorphism& f) const noexcept;
};

/// First pair (x, y) with f(x+y) != f(x)+f(y), or nothing if f is an
/// endomorphism. Throws PreconditionError if f is not a map G -> G.
std::optional<std::pair<ElementId, ElementId>> endomorphism_violation(
    const FiniteSemigroup& g, std::span<const std::uint8_t> f);

inline bool is_endomorphism(const FiniteSemigroup& g,
                            std::span<const std::uint8_t> f) {
  return !endomorphism_violation(g, f);
}

// Semiring operations on End(G): pointwise addition, composition
// (f·g)(x) = f(g(x)), and the additive inverse f'(x) = f(x)'.
Endomorphism endo_add(const FiniteSemigroup& g, const Endomorphism& f,
                      const Endomorphism& h);
Endomorphism endo_compose(const Endomorphism& f, const Endomorphism& h);
Endomorphism endo_additive_inverse(const FiniteSemigroup& g,
                                   const Endomorphism& f);

Endomorphism identity_map(const FiniteSemigroup& g);
Endomorphism constant_map(const FiniteSemigroup& g, ElementId c);
bool is_constant(const Endomorphism& f);

/// λ_a: the constant map at a⁰.
Endomorphism lambda_map(const FiniteSemigroup& g, ElementId a);

/// μ_{a,b,c}(x) = a⁰ if x ≤_q c, else b⁰. Requires a ≤_q b; throws
/// PreconditionError otherwise.
Endomorphism mu_map(const FiniteSemigroup& g, ElementId a, ElementId b,
                    ElementId c);

/// τ_{a,b} = μ_{0,b,a} for the identity 0. Throws PreconditionError when G
/// has no identity.
Endomorphism tau_map(const FiniteSemigroup& g, ElementId a, ElementId b);

/// θ: the constant map at the identity, when G has one.
std::optional<Endomorphism> theta_map(const FiniteSemigroup& g);

/// Distinct λ_a over a ∈ G, sorted.
std::vector<Endomorphism> lambda_maps(const FiniteSemigroup& g);

struct MuTriple {
  ElementId a;
  ElementId b;
  ElementId c;
};

/// Every valid triple (a ≤_q b), lexicographic.
std::vector<MuTriple> mu_triples(const FiniteSemigroup& g);
/// Distinct μ maps, sorted.
std::vector<Endomorphism> mu_maps(const FiniteSemigroup& g);
/// Distinct τ maps, sorted. Empty when G has no identity.
std::vector<Endomorphism> tau_maps(const FiniteSemigroup& g);

/// Largest |G| for full endomorphism enumeration without force.
inline constexpr std::size_t kEnumerationLimit = 8;
/// Largest carrier for which m×m operation tables are built without force.
inline constexpr std::size_t kCarrierTableLimit = 4096;

/// All endomorphisms (or all with f(0) = 0), in image-vector order.
/// Depth-first over images in element order; each assignment propagates
/// f(x+y) = f(x)+f(y) to products not yet assigned.
std::vector<Endomorphism> enumerate_endomorphism_list(const FiniteSemigroup& g,
                                                      bool zero_fixing,
                                                      SizeGuard guard = {});

/// Finite semiring given by operation tables over {0, ..., m-1}.
class TableSemiring {
 public:
  TableSemiring() = default;
  /// Throws FormatError if the tables are not m×m with entries below m.
  TableSemiring(std::size_t m, std::vector<std::uint32_t> add,
                std::vector<std::uint32_t> mul);

  [[nodiscard]] std::size_t size() const { return size_; }
  [[nodiscard]] std::uint32_t add(std::size_t u, std::size_t v) const {
    return add_[u * size_ + v];
  }
  [[nodiscard]] std::uint32_t mul(std::size_t u, std::size_t v) const {
    return mul_[u * size_ + v];
  }

  /// Componentwise product semiring; index u * other.size() + v.
  [[nodiscard]] TableSemiring product(const TableSemiring& other) const;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint32_t> add_;
  std::vector<std::uint32_t> mul_;
};

/// A set of endomorphisms of G closed under + and ·, sorted by image
/// vector, with its operation tables. Immutable.
class EndoSemiring {
 public:
  /// Sorts and deduplicates `members`, builds the tables. Throws
  /// PreconditionError if the set is not closed or holds a non-endomorphism,
  /// GuardError above the carrier table limit.
  static EndoSemiring from_closed(SemigroupPtr ambient,
                                  std::vector<Endomorphism> members,
                                  SizeGuard guard = {});

  [[nodiscard]] const FiniteSemigroup& ambient() const { return *ambient_; }
  [[nodiscard]] const SemigroupPtr& ambient_ptr() const { return ambient_; }
  [[nodiscard]] std::size_t size() const { return carrier_.size(); }
  [[nodiscard]] const std::vector<Endomorphism>& carrier() const {
    return carrier_;
  }
  [[nodiscard]] const Endomorphism& operator[](std::size_t i) const {
    return carrier_[i];
  }
  [[nodiscard]] const TableSemiring& tables() const { return tables_; }
  [[nodiscard]] std::optional<std::size_t> index_of(
      const Endomorphism& f) const;
  [[nodiscard]] bool contains(const Endomorphism& f) const {
    return index_of(f).has_value();
  }

 private:
  EndoSemiring() = default;

  SemigroupPtr ambient_;
  std::vector<Endomorphism> carrier_;
  TableSemiring tables_;
};

/// End(G), or End_0(G) when `zero_fixing` (requires an identity).
EndoSemiring enumerate_endomorphisms(SemigroupPtr g, bool zero_fixing,
                                     SizeGuard guard = {});

/// Least set containing `generators` and closed under + and ·, computed
/// directly on maps by a worklist over pairs.
EndoSemiring close_subsemiring(SemigroupPtr g,
                               std::span<const Endomorphism> generators,
                               SizeGuard guard = {});

/// As close_subsemiring, additionally requiring generators ⊆ S.
EndoSemiring generate_closed_subsemiring(const EndoSemiring& s,
                                         std::span<const Endomorphism> generators);

/// M_G, T_G (requires identity) and L_G as closed subsemirings.
EndoSemiring mu_subsemiring(SemigroupPtr g);
EndoSemiring tau_subsemiring(SemigroupPtr g);

/// R_G: zero-fixing members of S with finite range. On a finite G every
/// range is finite, so this is S ∩ End_0(G). Requires an identity.
EndoSemiring finite_range_subset(const EndoSemiring& s);

struct SeparationResult {
  bool separated = true;
  /// fewer than two members: true only vacuously
  bool vacuous = false;
  /// indices into the checked set of two members that agree on E(G)
  std::optional<std::pair<std::size_t, std::size_t>> counterexample;
};

/// Whether any two distinct members differ at some idempotent.
SeparationResult separated_by_idempotents(const FiniteSemigroup& g,
                                          std::span<const Endomorphism> maps);

/// x ↦ h(x⁰) for an endomorphism h of the semilattice E(G) (given on
/// E(G)'s own indices). Throws PreconditionError if h is not one.
Endomorphism embed_idempotent_endo(const FiniteSemigroup& g,
                                   const IdempotentSemilattice& e,
                                   const Endomorphism& h);

/// The image of End(E(G)) in End(G).
EndoSemiring embedded_idempotent_endos(SemigroupPtr g, SizeGuard guard = {});

enum class IdealSide { left, right, two_sided };

struct IdealCheck {
  bool ok = true;
  /// "add", "left" or "right", with the carrier indices (u, s) whose
  /// result escapes I: u+s, s·u or u·s respectively.
  std::optional<std::string> law;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

/// I + I ⊆ I and the requested absorption law(s). `members` are carrier
/// indices of S.
IdealCheck is_ideal(const TableSemiring& s, std::span<const std::size_t> members,
                    IdealSide side);

/// Carrier indices of the given maps, which must all lie in S.
std::vector<std::size_t> indices_in(const EndoSemiring& s,
                                    std::span<const Endomorphism> maps);

}  // namespace invsr
