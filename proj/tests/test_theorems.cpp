#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "invsr/errors.hpp"
#include "invsr/report.hpp"
#include "invsr/theorems.hpp"
#include "oracles.hpp"

using namespace invsr;

namespace {

ElementId at(const FiniteSemigroup& g, const char* label) {
  const auto e = g.find(label);
  REQUIRE(e.has_value());
  return *e;
}

const TheoremReport* find(const std::vector<TheoremReport>& rs, const std::string& id,
                          const std::string& instance) {
  for (const auto& r : rs) {
    if (r.theorem == id && r.instance == instance) {
      return &r;
    }
  }
  return nullptr;
}

}  // namespace

TEST_SUITE("example maps") {
  TEST_CASE("listed maps are endomorphisms and the extras are unlisted") {
    const auto g = fixtures::example();
    const auto maps = example_maps(g);
    REQUIRE(maps.has_value());
    CHECK(maps->listed.size() == 9);
    const auto t = oracle::table_of(worked_example());
    for (const auto& f : maps->listed) {
      CHECK(oracle::is_hom(t, oracle::to_map(f)));
    }
    CHECK(oracle::is_hom(t, oracle::to_map(maps->square)));
    CHECK(oracle::is_hom(t, oracle::to_map(maps->extra_mu)));
    const std::set<Endomorphism> listed(maps->listed.begin(), maps->listed.end());
    CHECK_FALSE(listed.contains(maps->square));
    CHECK_FALSE(listed.contains(maps->extra_mu));
    CHECK(maps->extra_mu == mu_map(g, at(g, "(1,1)"), at(g, "(0,0)"), at(g, "(1,1)")));
    // squaring fixes (0,y), (1,y) and sends (2,y) to (1,y)
    CHECK(maps->square(at(g, "(2,0)")) == at(g, "(1,0)"));
    CHECK(maps->square(at(g, "(0,1)")) == at(g, "(0,1)"));
  }

  TEST_CASE("f9 and squaring agree on idempotents") {
    const auto g = fixtures::example();
    const auto maps = example_maps(g);
    REQUIRE(maps.has_value());
    const auto& f9 = maps->listed.back();
    CHECK(f9 != maps->square);
    for (const auto e : g.idempotents()) {
      CHECK(f9(e) == maps->square(e));
    }
  }

  TEST_CASE("maps carry across an isomorphic copy") {
    const auto p = fixtures::from_doc(
        product_document(builtin_semigroup("zmod-mul", 3), builtin_semigroup("chain", 2)));
    const auto maps = example_maps(p);
    REQUIRE(maps.has_value());
    for (const auto& f : maps->listed) {
      CHECK(is_endomorphism(p, f.images()));
    }
    CHECK_FALSE(example_maps(fixtures::builtin("chain", 3)).has_value());
  }
}

TEST_SUITE("property checks") {
  TEST_CASE("every law holds on the small corpus") {
    for (const auto& d : fixtures::small_corpus()) {
      CAPTURE(d.name);
      const auto g = share(fixtures::from_doc(d));
      const auto end = enumerate_endomorphisms(g, false);
      if (end.size() <= 500) {  // the triple loop is cubic in |End(G)|
        CHECK_FALSE(check_semiring_axioms(end).has_value());
      }
      CHECK_FALSE(check_karvellas(end).has_value());
      CHECK_FALSE(check_lambda_laws(end).has_value());
      CHECK_FALSE(check_mu_endomorphisms(*g).has_value());
      CHECK_FALSE(check_mu_factorization(*g).has_value());
      CHECK_FALSE(check_mu_composition(*g).has_value());
      CHECK_FALSE(check_lg_in_mg(*g).has_value());
      if (g->identity()) {
        CHECK_FALSE(check_tau_composition(enumerate_endomorphisms(g, true)).has_value());
      }
    }
  }

  TEST_CASE("the infinite-element property fails when the identity's group is nontrivial") {
    // In the example τ_{0,∞} sends the units (1,1), (2,1) to (1,1) and
    // everything else to (0,0). Any ψ in End_0(G) moving (2,1) to itself
    // gives ψ + τ_{0,∞} = (2,1) ≠ (1,1) there.
    const auto g = fixtures::shared("example");
    const auto end0 = enumerate_endomorphisms(g, true);
    const auto r = check_tau_infinite(end0);
    REQUIRE(r.has_value());
    const Endomorphism psi(r->witness["psi"].get<std::vector<std::uint8_t>>());
    const Endomorphism t(r->witness["t"].get<std::vector<std::uint8_t>>());
    const auto x = r->witness["x"].get<std::size_t>();
    CHECK(end0.contains(psi));
    CHECK(t == tau_map(*g, *g->identity(), *g->absorbing()));
    CHECK(x == at(*g, "(2,1)").value());
    CHECK(g->add(psi[x], t[x]) != t[x]);
    CHECK(g->leq_q(ElementId(x), *g->identity()));
    CHECK(ElementId(x) != *g->identity());
    CHECK(endo_add(*g, identity_map(*g), t) != t);

    // Where the identity is alone in its group the property holds.
    for (const char* kind : {"chain"}) {
      for (std::size_t k = 2; k <= 4; ++k) {
        const auto c = fixtures::shared(kind, k);
        CHECK_FALSE(check_tau_infinite(enumerate_endomorphisms(c, true)).has_value());
      }
    }
    CHECK_FALSE(check_tau_infinite(enumerate_endomorphisms(fixtures::shared("diamond"), true))
                    .has_value());
  }
}

TEST_SUITE("suite") {
  TEST_CASE("every fails or erratum verdict carries a witness") {
    const auto reports = verify_corpus_suite();
    CHECK(reports.size() > 100);
    for (const auto& r : reports) {
      CAPTURE(r.theorem);
      CAPTURE(r.instance);
      if (r.verdict == Verdict::fails || r.verdict == Verdict::erratum) {
        CHECK_FALSE(r.witness.empty());
      }
      CHECK(theorem_rank(r.theorem) < theorem_catalogue().size());
    }
  }

  TEST_CASE("reports are in catalogue order") {
    const auto reports = verify_corpus_suite();
    for (std::size_t i = 1; i < reports.size(); ++i) {
      const auto a = theorem_rank(reports[i - 1].theorem);
      const auto b = theorem_rank(reports[i].theorem);
      CHECK((a < b || (a == b && reports[i - 1].instance <= reports[i].instance)));
    }
  }

  TEST_CASE("corpus verdicts") {
    const auto reports = verify_corpus_suite();
    const auto t = tally(reports);
    CHECK(t.erratum == 2);
    CHECK(t.fails == 1);
    const auto* tau = find(reports, "tau-infinite", "example / End_0(G)");
    REQUIRE(tau != nullptr);
    CHECK(tau->verdict == Verdict::fails);
    for (const auto& r : reports) {
      if (r.verdict == Verdict::fails) {
        CHECK(r.theorem == "tau-infinite");
      }
    }
    const auto* count = find(reports, "example-endomorphism-count", "example / End(G)");
    REQUIRE(count != nullptr);
    CHECK(count->verdict == Verdict::erratum);
    CHECK(count->witness["computed"] == 35);
    const auto* sep = find(reports, "example-separation", "example / End(G)");
    REQUIRE(sep != nullptr);
    CHECK(sep->verdict == Verdict::erratum);

    for (const char* label : {"chain2", "chain3", "diamond"}) {
      const auto* r = find(reports, "simple-iff-bounded", std::string(label) + " / E_E(G)");
      REQUIRE(r != nullptr);
      CHECK(r->verdict == Verdict::holds);
    }
    const auto* z3 = find(reports, "mg-simple", "z3-group / M_G");
    REQUIRE(z3 != nullptr);
    CHECK(z3->verdict == Verdict::precondition_unmet);
    const auto* v = find(reports, "tau-composition", "antichain-top2");
    REQUIRE(v != nullptr);
    CHECK(v->verdict == Verdict::precondition_unmet);
  }

  TEST_CASE("suite guard") {
    const auto g = fixtures::builtin("chain", 9);
    CHECK_THROWS_AS(verify_theorem_suite(g, "chain9"), GuardError);
  }

  TEST_CASE("verdict names") {
    CHECK(verdict_name(Verdict::holds) == "holds");
    CHECK(verdict_name(Verdict::fails) == "fails");
    CHECK(verdict_name(Verdict::precondition_unmet) == "precondition-unmet");
    CHECK(verdict_name(Verdict::erratum) == "erratum");
  }
}
