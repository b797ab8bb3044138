#include <doctest.h>

#include "fixtures.hpp"
#include "invsr/congruence.hpp"
#include "invsr/relations.hpp"
#include "oracles.hpp"

using namespace invsr;

namespace {

// f R_I h straight from the definition: some a with f + λ_a = h + λ_a,
// with λ_a computed on the table.
bool r_i_oracle(const oracle::Table& t, const oracle::Map& f, const oracle::Map& h) {
  const int n = oracle::size(t);
  for (int a = 0; a < n; ++a) {
    const int a0 = t[a][oracle::inverse(t, a)];
    bool eq = true;
    for (int x = 0; x < n && eq; ++x) {
      eq = t[f[x]][a0] == t[h[x]][a0];
    }
    if (eq) {
      return true;
    }
  }
  return false;
}

bool bounded_oracle(const oracle::Table& t, const oracle::Map& f) {
  const int n = oracle::size(t);
  for (int a = 0; a < n; ++a) {
    bool all = true;
    for (int x = 0; x < n && all; ++x) {
      all = oracle::leq_q(t, a, f[x]);
    }
    if (all) {
      return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("relations agree with the definitions on End(G)") {
  for (const auto& d : fixtures::small_corpus()) {
    if (d.elements.size() > 4) {
      continue;
    }
    CAPTURE(d.name);
    const auto g = share(fixtures::from_doc(d));
    const auto t = oracle::table_of(d);
    const auto end = enumerate_endomorphisms(g, false);
    for (const auto& f : end.carrier()) {
      CHECK(lower_bound(*g, f).has_value() == bounded_oracle(t, oracle::to_map(f)));
      for (const auto& h : end.carrier()) {
        const auto fm = oracle::to_map(f);
        const auto hm = oracle::to_map(h);
        CHECK(r_i_related(*g, f, h) == r_i_oracle(t, fm, hm));
        CHECK(r_l_related(*g, f, h) ==
              (fm == hm || (bounded_oracle(t, fm) && bounded_oracle(t, hm))));
      }
    }
  }
}

TEST_CASE("on a finite semigroup with an absorbing element R_I is universal") {
  // f + λ_∞ = λ_∞ for every f.
  const auto g = fixtures::shared("chain", 3);
  const auto end = enumerate_endomorphisms(g, false);
  CHECK(r_i_partition(end).partition.is_universal());
  CHECK(r_i_partition(end).is_equivalence);
}

TEST_CASE("R_L on the antichain with top") {
  const auto g = fixtures::shared("antichain-top", 2);
  const auto end = enumerate_endomorphisms(g, false);
  const auto r = r_l_partition(end);
  CHECK(r.is_equivalence);
  // the unbounded maps are exactly those hitting both atoms
  std::size_t unbounded = 0;
  for (const auto& f : end.carrier()) {
    if (!lower_bound(*g, f)) {
      ++unbounded;
    }
  }
  CHECK(r.partition.block_count() == unbounded + 1);
}

TEST_CASE("a non-transitive relation is reported") {
  const auto g = fixtures::shared("chain", 2);
  const auto end = enumerate_endomorphisms(g, false);
  REQUIRE(end.size() == 3);
  // 0 ~ 1 and 1 ~ 2 but not 0 ~ 2
  const auto r = relation_partition(end, [&](const Endomorphism& f, const Endomorphism& h) {
    const auto u = *end.index_of(f);
    const auto v = *end.index_of(h);
    return u == v || u + v == 1 || u + v == 3;
  });
  CHECK_FALSE(r.is_equivalence);
  CHECK(r.partition.is_universal());
  CHECK(r.non_transitive_pair == std::pair<std::size_t, std::size_t>{0, 2});
}

TEST_CASE("hypotheses are reported, not enforced") {
  const auto z3 = fixtures::shared("group-cyclic", 3);
  const auto c = monolith_candidate(enumerate_endomorphisms(z3, false));
  REQUIRE_FALSE(c.unmet.empty());
  CHECK(c.unmet.front() == "G has fewer than two idempotents");

  const auto ex = fixtures::shared("example");
  const auto end = monolith_candidate(enumerate_endomorphisms(ex, false));
  CHECK(end.unmet == std::vector<std::string>{"E is not separated by idempotents"});

  const auto emb = monolith_candidate(embedded_idempotent_endos(ex));
  // μ maps factor through x⁰ and are idempotent-valued, so M_G ⊆ E_E(G).
  CHECK(emb.unmet.empty());

  const auto mg = monolith_candidate(mu_subsemiring(ex));
  CHECK(mg.unmet.empty());
}

TEST_CASE("R restricted to a separated subsemiring containing M_G is its monolith") {
  for (const auto& d : fixtures::small_corpus()) {
    CAPTURE(d.name);
    const auto g = share(fixtures::from_doc(d));
    if (g->idempotents().size() < 2) {
      continue;
    }
    const auto mg = mu_subsemiring(g);
    if (mg.size() > 40) {
      continue;  // all-pairs principal closure is too slow here
    }
    const auto cand = monolith_candidate(mg);
    REQUIRE(cand.unmet.empty());
    CHECK(cand.relation.is_equivalence);
    CHECK_FALSE(cand.violation.has_value());
    const auto m = monolith(mg.tables());
    REQUIRE(m.has_value());
    CHECK(*m == cand.relation.partition);
    // every principal congruence of a distinct pair contains R
    for (std::size_t u = 0; u < mg.size(); ++u) {
      for (std::size_t v = u + 1; v < mg.size(); ++v) {
        CHECK(cand.relation.partition.refines(principal_congruence(mg.tables(), u, v)));
      }
    }
    const auto report = verify_monolith_theorem(mg, d.name);
    CHECK(report.verdict == Verdict::holds);
    CHECK(report.theorem == "monolith-is-r");
  }
}

TEST_CASE("monolith theorem report on unmet hypotheses") {
  const auto ex = fixtures::shared("example");
  const auto r = verify_monolith_theorem(enumerate_endomorphisms(ex, false), "example / End(G)");
  CHECK(r.verdict == Verdict::precondition_unmet);
  CHECK(r.instance == "example / End(G)");
}
