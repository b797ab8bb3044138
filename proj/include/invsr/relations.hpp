#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "invsr/congruence.hpp"
#include "invsr/endomorphism.hpp"
#include "invsr/theorem_report.hpp"

namespace invsr {

/// f R_I g iff f + λ_a = g + λ_a for some a ∈ G.
bool r_i_related(const FiniteSemigroup& g, const Endomorphism& f,
                 const Endomorphism& h);

/// Some a with a ≤_q f(x) for every x, searched over all of G.
std::optional<ElementId> lower_bound(const FiniteSemigroup& g,
                                     const Endomorphism& f);

/// f R_L g iff f = g, or both ranges have a lower bound. The reflexive
/// closure makes this an equivalence on maps with unbounded range too.
bool r_l_related(const FiniteSemigroup& g, const Endomorphism& f,
                 const Endomorphism& h);

struct RelationPartition {
  /// blocks of the equivalence generated by the relation
  Congruence partition;
  /// the relation equals its generated equivalence (it was transitive)
  bool is_equivalence = true;
  std::optional<std::pair<std::size_t, std::size_t>> non_transitive_pair;
};

/// The relation `related` on the carrier of S as a partition, with a check
/// that no pair had to be added by transitive closure.
RelationPartition relation_partition(
    const EndoSemiring& s,
    const std::function<bool(const Endomorphism&, const Endomorphism&)>&
        related);

RelationPartition r_i_partition(const EndoSemiring& s);
RelationPartition r_l_partition(const EndoSemiring& s);

struct CandidateResult {
  /// unmet hypotheses, in a fixed order; empty when all hold
  std::vector<std::string> unmet;
  /// (R_I ∩ R_L) restricted to E
  RelationPartition relation;
  std::optional<CompatibilityViolation> violation;
};

/// R|_E for a subsemiring E. Always computed; the hypotheses (at least two
/// idempotents in G, M_G ⊆ E, E separated by idempotents) are reported
/// rather than enforced.
CandidateResult monolith_candidate(const EndoSemiring& e);

/// holds iff the oracle monolith of E exists and equals R|_E;
/// precondition-unmet when a hypothesis fails.
TheoremReport verify_monolith_theorem(const EndoSemiring& e,
                                      const std::string& instance);

}  // namespace invsr
