#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "invsr/endomorphism.hpp"
#include "invsr/semigroup.hpp"

namespace invsr {

/// Disjoint sets with path compression and union by size.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n);

  std::size_t find(std::size_t x);
  /// False if x and y were already joined.
  bool unite(std::size_t x, std::size_t y);

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

/// Equivalence relation on a carrier {0, ..., m-1}, stored as the smallest
/// member of each element's block. Equal relations compare equal.
class Congruence {
 public:
  static Congruence identity(std::size_t m);
  static Congruence universal(std::size_t m);
  /// Elements with equal labels share a block.
  static Congruence from_labels(std::span<const std::size_t> labels);
  static Congruence from_union_find(UnionFind& uf, std::size_t m);

  [[nodiscard]] std::size_t size() const { return rep_.size(); }
  [[nodiscard]] std::size_t representative(std::size_t u) const {
    return rep_[u];
  }
  [[nodiscard]] bool related(std::size_t u, std::size_t v) const {
    return rep_[u] == rep_[v];
  }
  [[nodiscard]] std::size_t block_count() const;
  /// Blocks in order of their smallest member; members ascending.
  [[nodiscard]] std::vector<std::vector<std::size_t>> blocks() const;
  [[nodiscard]] bool is_identity() const { return block_count() == size(); }
  [[nodiscard]] bool is_universal() const { return block_count() <= 1; }

  [[nodiscard]] Congruence meet(const Congruence& other) const;
  /// this ⊆ other as sets of pairs
  [[nodiscard]] bool refines(const Congruence& other) const;

  friend bool operator==(const Congruence&, const Congruence&) = default;

 private:
  explicit Congruence(std::vector<std::uint32_t> rep) : rep_(std::move(rep)) {}

  std::vector<std::uint32_t> rep_;
};

struct CompatibilityViolation {
  std::size_t u = 0;
  std::size_t v = 0;
  std::size_t s = 0;
  /// "u+s", "s+u", "u*s" or "s*u"
  std::string translation;
};

/// Independent checker: u ~ v must imply u+s ~ v+s, s+u ~ s+v, u·s ~ v·s
/// and s·u ~ s·v for every s.
std::optional<CompatibilityViolation> compatibility_violation(
    const TableSemiring& s, const Congruence& c);

inline bool is_congruence(const TableSemiring& s, const Congruence& c) {
  return !compatibility_violation(s, c);
}

/// Least congruence containing `pairs`: union-find seeded with the pairs;
/// each merge enqueues its four translates by every carrier element.
Congruence principal_congruence(
    const TableSemiring& s,
    std::span<const std::pair<std::size_t, std::size_t>> pairs);

inline Congruence principal_congruence(const TableSemiring& s, std::size_t u,
                                       std::size_t v) {
  const std::pair<std::size_t, std::size_t> p{u, v};
  return principal_congruence(s, std::span(&p, 1));
}

/// Carrier ceiling for the all-partitions oracle (Bell(8) = 4140).
inline constexpr std::size_t kPartitionOracleLimit = 8;

/// Every partition of the carrier that passes compatibility_violation, in
/// restricted-growth-string order. GuardError above the limit.
std::vector<Congruence> all_congruences(const TableSemiring& s,
                                        SizeGuard guard = {});

/// Intersection of Cg(u, v) over all distinct pairs; nothing if that is the
/// identity (S not subdirectly irreducible). PreconditionError if |S| < 2.
std::optional<Congruence> monolith(const TableSemiring& s);

/// Same answer from the partition oracle.
std::optional<Congruence> monolith_by_partitions(const TableSemiring& s,
                                                 SizeGuard guard = {});

bool is_subdirectly_irreducible(const TableSemiring& s);
/// Every principal congruence of a distinct pair is universal.
bool is_congruence_simple(const TableSemiring& s);
/// Exactly two congruences, from the partition oracle.
bool is_congruence_simple_by_partitions(const TableSemiring& s,
                                        SizeGuard guard = {});

/// Least subset containing `beta`, closed under + and under
/// multiplication by S on either side. Sorted indices.
std::vector<std::size_t> ideal_generated_by(const TableSemiring& s,
                                            std::size_t beta);

struct IdealSimplicity {
  bool simple = true;
  /// a generator whose ideal is proper
  std::optional<std::size_t> witness;
};

/// Every ideal generated by a non-zero element is all of S. Without a zero,
/// every singleton-generated ideal must be S.
IdealSimplicity is_ideal_simple(const TableSemiring& s,
                                std::optional<std::size_t> zero);

/// Index of θ in S, when G has an identity and θ is a member.
std::optional<std::size_t> zero_index(const EndoSemiring& s);

}  // namespace invsr
