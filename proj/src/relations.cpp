#include "invsr/relations.hpp"

#include <algorithm>

namespace invsr {

bool r_i_related(const FiniteSemigroup& g, const Endomorphism& f,
                 const Endomorphism& h) {
  // f + λ_a depends on a only through a⁰, so idempotents suffice; the
  // search still runs over G to mirror the definition.
  for (std::size_t a = 0; a < g.size(); ++a) {
    const std::uint8_t e = g.zero_part(a);
    bool equal = true;
    for (std::size_t x = 0; x < g.size() && equal; ++x) {
      equal = g.add(f[x], e) == g.add(h[x], e);
    }
    if (equal) {
      return true;
    }
  }
  return false;
}

std::optional<ElementId> lower_bound(const FiniteSemigroup& g,
                                     const Endomorphism& f) {
  for (std::size_t a = 0; a < g.size(); ++a) {
    bool below_all = true;
    for (std::size_t x = 0; x < f.size() && below_all; ++x) {
      below_all = g.leq_q(a, f[x]);
    }
    if (below_all) {
      return ElementId(a);
    }
  }
  return std::nullopt;
}

bool r_l_related(const FiniteSemigroup& g, const Endomorphism& f,
                 const Endomorphism& h) {
  return f == h || (lower_bound(g, f) && lower_bound(g, h));
}

RelationPartition relation_partition(
    const EndoSemiring& s,
    const std::function<bool(const Endomorphism&, const Endomorphism&)>&
        related) {
  const std::size_t m = s.size();
  std::vector<bool> rel(m * m, false);
  UnionFind uf(m);
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t v = u; v < m; ++v) {
      if (related(s[u], s[v])) {
        rel[u * m + v] = true;
        rel[v * m + u] = true;
        uf.unite(u, v);
      }
    }
  }
  RelationPartition out{Congruence::from_union_find(uf, m), true, std::nullopt};
  for (std::size_t u = 0; u < m && out.is_equivalence; ++u) {
    for (std::size_t v = u + 1; v < m; ++v) {
      if (out.partition.related(u, v) && !rel[u * m + v]) {
        out.is_equivalence = false;
        out.non_transitive_pair = {u, v};
        break;
      }
    }
  }
  return out;
}

RelationPartition r_i_partition(const EndoSemiring& s) {
  const auto& g = s.ambient();
  return relation_partition(s, [&](const Endomorphism& f, const Endomorphism& h) {
    return r_i_related(g, f, h);
  });
}

RelationPartition r_l_partition(const EndoSemiring& s) {
  const auto& g = s.ambient();
  return relation_partition(s, [&](const Endomorphism& f, const Endomorphism& h) {
    return r_l_related(g, f, h);
  });
}

CandidateResult monolith_candidate(const EndoSemiring& e) {
  const auto& g = e.ambient();
  CandidateResult out{{}, relation_partition(e, [&](const Endomorphism& f,
                                                    const Endomorphism& h) {
                        return r_i_related(g, f, h) && r_l_related(g, f, h);
                      }),
                      std::nullopt};
  if (g.idempotents().size() < 2) {
    out.unmet.emplace_back("G has fewer than two idempotents");
  }
  const auto mus = mu_maps(g);
  if (!std::all_of(mus.begin(), mus.end(),
                   [&](const Endomorphism& f) { return e.contains(f); })) {
    out.unmet.emplace_back("M_G is not contained in E");
  }
  if (!separated_by_idempotents(g, e.carrier()).separated) {
    out.unmet.emplace_back("E is not separated by idempotents");
  }
  out.violation = compatibility_violation(e.tables(), out.relation.partition);
  return out;
}

namespace {

nlohmann::json blocks_json(const Congruence& c) {
  auto out = nlohmann::json::array();
  for (const auto& block : c.blocks()) {
    out.push_back(block);
  }
  return out;
}

}  // namespace

TheoremReport verify_monolith_theorem(const EndoSemiring& e,
                                      const std::string& instance) {
  TheoremReport report{"monolith-is-r", instance, Verdict::holds, "", {}};
  const auto cand = monolith_candidate(e);
  if (!cand.unmet.empty()) {
    report.verdict = Verdict::precondition_unmet;
    for (const auto& reason : cand.unmet) {
      report.detail += report.detail.empty() ? reason : "; " + reason;
    }
    return report;
  }
  if (!cand.relation.is_equivalence) {
    const auto [u, v] = *cand.relation.non_transitive_pair;
    report.verdict = Verdict::fails;
    report.detail = "R restricted to E is not transitive";
    report.witness = {{"pair", {images_json(e[u].images()),
                                images_json(e[v].images())}}};
    return report;
  }
  if (cand.violation) {
    const auto& w = *cand.violation;
    report.verdict = Verdict::fails;
    report.detail = "R restricted to E is not a congruence (" + w.translation + ")";
    report.witness = {{"u", images_json(e[w.u].images())},
                      {"v", images_json(e[w.v].images())},
                      {"s", images_json(e[w.s].images())}};
    return report;
  }
  const auto oracle = monolith(e.tables());
  if (!oracle) {
    report.verdict = Verdict::fails;
    report.detail = "E is not subdirectly irreducible";
    report.witness = {{"candidate_blocks", blocks_json(cand.relation.partition)}};
    return report;
  }
  if (*oracle != cand.relation.partition) {
    report.verdict = Verdict::fails;
    report.detail = "monolith differs from R restricted to E";
    for (std::size_t u = 0; u < e.size(); ++u) {
      for (std::size_t v = u + 1; v < e.size(); ++v) {
        if (oracle->related(u, v) != cand.relation.partition.related(u, v)) {
          report.witness = {
              {"pair", {images_json(e[u].images()), images_json(e[v].images())}},
              {"in_monolith", oracle->related(u, v)},
              {"in_r", cand.relation.partition.related(u, v)}};
          return report;
        }
      }
    }
    return report;
  }
  report.detail = "|E| = " + std::to_string(e.size()) + ", monolith has " +
                  std::to_string(oracle->block_count()) + " block(s)";
  report.witness = {{"blocks", blocks_json(*oracle)}};
  return report;
}

}  // namespace invsr
