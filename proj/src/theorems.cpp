#include "invsr/theorems.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "invsr/congruence.hpp"
#include "invsr/generators.hpp"
#include "invsr/relations.hpp"

namespace invsr {

namespace {

using nlohmann::json;

json j(const Endomorphism& f) { return images_json(f.images()); }

PropertyViolation violation(std::string law, json witness) {
  return {std::move(law), std::move(witness)};
}

json elements_json(std::initializer_list<std::size_t> xs) {
  auto out = json::array();
  for (const auto x : xs) {
    out.push_back(x);
  }
  return out;
}

}  // namespace

PropertyResult check_semiring_axioms(const EndoSemiring& s) {
  const auto& t = s.tables();
  const std::size_t m = s.size();
  for (std::size_t u = 0; u < m; ++u) {
    std::size_t inverses = 0;
    for (std::size_t v = 0; v < m; ++v) {
      if (t.add(u, v) != t.add(v, u)) {
        return violation("additive commutativity", {{"f", j(s[u])}, {"g", j(s[v])}});
      }
      if (t.add(t.add(u, v), u) == u && t.add(t.add(v, u), v) == v) {
        ++inverses;
      }
      for (std::size_t w = 0; w < m; ++w) {
        auto triple = [&] { return json{{"f", j(s[u])}, {"g", j(s[v])}, {"h", j(s[w])}}; };
        if (t.add(t.add(u, v), w) != t.add(u, t.add(v, w))) {
          return violation("additive associativity", triple());
        }
        if (t.mul(t.mul(u, v), w) != t.mul(u, t.mul(v, w))) {
          return violation("multiplicative associativity", triple());
        }
        if (t.mul(u, t.add(v, w)) != t.add(t.mul(u, v), t.mul(u, w))) {
          return violation("left distributivity", triple());
        }
        if (t.mul(t.add(u, v), w) != t.add(t.mul(u, w), t.mul(v, w))) {
          return violation("right distributivity", triple());
        }
      }
    }
    if (inverses != 1) {
      return violation("additive inverse uniqueness",
                       {{"f", j(s[u])}, {"inverses", inverses}});
    }
  }
  return std::nullopt;
}

PropertyResult check_karvellas(const EndoSemiring& s) {
  const auto& g = s.ambient();
  for (const auto& f : s.carrier()) {
    const auto fi = endo_additive_inverse(g, f);
    if (endo_additive_inverse(g, fi) != f) {
      return violation("(f')' = f", {{"f", j(f)}});
    }
    for (const auto& h : s.carrier()) {
      const auto hi = endo_additive_inverse(g, h);
      const auto lhs = endo_additive_inverse(g, endo_compose(f, h));
      if (lhs != endo_compose(fi, h) || lhs != endo_compose(f, hi)) {
        return violation("(f.g)' = f'.g = f.g'", {{"f", j(f)}, {"g", j(h)}});
      }
      if (endo_additive_inverse(g, endo_add(g, f, h)) != endo_add(g, fi, hi)) {
        return violation("(f+g)' = f'+g'", {{"f", j(f)}, {"g", j(h)}});
      }
    }
  }
  return std::nullopt;
}

PropertyResult check_lambda_laws(const EndoSemiring& end) {
  const auto& g = end.ambient();
  const std::size_t n = g.size();
  std::vector<Endomorphism> lambda;
  lambda.reserve(n);
  for (std::size_t a = 0; a < n; ++a) {
    lambda.push_back(lambda_map(g, ElementId(a)));
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (endo_add(g, lambda[a], lambda[a]) != lambda[a]) {
      return violation("l_a + l_a = l_a", {{"a", a}});
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (endo_add(g, lambda[a], lambda[b]) != lambda[g.add(a, b)]) {
        return violation("l_a + l_b = l_{a+b}", {{"a", a}, {"b", b}});
      }
    }
    for (const auto& f : end.carrier()) {
      if (endo_compose(f, lambda[a]) != lambda[f[a]]) {
        return violation("f.l_a = l_{f(a)}", {{"f", j(f)}, {"a", a}});
      }
      if (endo_compose(lambda[a], f) != lambda[a]) {
        return violation("l_a.f = l_a", {{"f", j(f)}, {"a", a}});
      }
    }
  }
  for (const auto& f : end.carrier()) {
    const bool is_lambda = std::find(lambda.begin(), lambda.end(), f) != lambda.end();
    if (is_constant(f) != is_lambda) {
      return violation("f constant iff f = l_a", {{"f", j(f)}});
    }
  }
  const auto distinct = lambda_maps(g);
  const auto ideal = is_ideal(end.tables(), indices_in(end, distinct),
                              IdealSide::two_sided);
  if (!ideal.ok) {
    const auto [u, s] = *ideal.witness;
    return violation("L_G is an ideal (" + *ideal.law + ")",
                     {{"member", j(end[u])}, {"other", j(end[s])}});
  }
  return std::nullopt;
}

PropertyResult check_mu_endomorphisms(const FiniteSemigroup& g) {
  for (const auto& t : mu_triples(g)) {
    const auto mu = mu_map(g, t.a, t.b, t.c);
    if (auto bad = endomorphism_violation(g, mu.images())) {
      return violation("mu is an endomorphism",
                       {{"triple", elements_json({t.a.value(), t.b.value(), t.c.value()})},
                        {"map", j(mu)},
                        {"pair", elements_json({bad->first.value(), bad->second.value()})}});
    }
  }
  return std::nullopt;
}

PropertyResult check_mu_factorization(const FiniteSemigroup& g) {
  for (const auto& t : mu_triples(g)) {
    const auto mu = mu_map(g, t.a, t.b, t.c);
    const auto mu0 = mu_map(g, g.zero_part(t.a), g.zero_part(t.b), g.zero_part(t.c));
    for (std::size_t x = 0; x < g.size(); ++x) {
      if (mu[x] != mu[g.zero_part(x)] || mu[x] != mu0[x]) {
        return violation("mu(x) = mu(x0) = mu_{a0,b0,c0}(x)",
                         {{"triple", elements_json({t.a.value(), t.b.value(), t.c.value()})},
                          {"x", x}});
      }
    }
  }
  return std::nullopt;
}

PropertyResult check_mu_composition(const FiniteSemigroup& g) {
  const auto triples = mu_triples(g);
  std::vector<Endomorphism> by_triple;
  by_triple.reserve(triples.size());
  for (const auto& t : triples) {
    by_triple.push_back(mu_map(g, t.a, t.b, t.c));
  }
  const auto mus = mu_maps(g);
  for (const auto& f : mus) {
    for (const auto& h : mus) {
      const auto fh = endo_compose(f, h);
      if (std::find(by_triple.begin(), by_triple.end(), fh) == by_triple.end()) {
        return violation("mu.mu is a mu", {{"f", j(f)}, {"g", j(h)}, {"f.g", j(fh)}});
      }
    }
  }
  return std::nullopt;
}

PropertyResult check_lg_in_mg(const FiniteSemigroup& g) {
  for (std::size_t a = 0; a < g.size(); ++a) {
    const auto lambda = lambda_map(g, ElementId(a));
    for (std::size_t c = 0; c < g.size(); ++c) {
      if (mu_map(g, ElementId(a), ElementId(a), ElementId(c)) != lambda) {
        return violation("mu_{a,a,c} = l_a", {{"a", a}, {"c", c}});
      }
    }
  }
  return std::nullopt;
}

PropertyResult check_tau_composition(const EndoSemiring& end0) {
  const auto& g = end0.ambient();
  const std::size_t n = g.size();
  std::vector<Endomorphism> tau(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      tau[a * n + b] = tau_map(g, ElementId(a), ElementId(b));
    }
  }
  const auto theta = *theta_map(g);
  for (const auto& phi : end0.carrier()) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        const auto& tab = tau[a * n + b];
        const auto phi_tab = endo_compose(phi, tab);
        if (phi_tab != tau[a * n + phi[b]]) {
          return violation("phi.t_{a,b} = t_{a,phi(b)}",
                           {{"phi", j(phi)}, {"a", a}, {"b", b}});
        }
        for (std::size_t c = 0; c < n; ++c) {
          for (std::size_t d = 0; d < n; ++d) {
            const auto lhs = endo_compose(tau[c * n + d], phi_tab);
            const auto& rhs = g.leq_q(phi[b], c) ? theta : tau[a * n + d];
            if (lhs != rhs) {
              return violation("t_{c,d}.phi.t_{a,b}",
                               {{"phi", j(phi)}, {"a", a}, {"b", b}, {"c", c}, {"d", d}});
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

PropertyResult check_tau_infinite(const EndoSemiring& end0) {
  const auto& g = end0.ambient();
  const auto t = tau_map(g, *g.identity(), *g.absorbing());
  if (!end0.contains(t)) {
    return violation("t_{0,inf} lies in End_0(G)", {{"t", j(t)}});
  }
  for (const auto& psi : end0.carrier()) {
    const auto sum = endo_add(g, psi, t);
    if (sum != t || endo_add(g, t, psi) != t) {
      std::size_t x = 0;
      while (x + 1 < g.size() && sum[x] == t[x]) {
        ++x;
      }
      // Typically x is a unit other than 0: x <=_q 0 without x = 0.
      return violation("psi + t_{0,inf} = t_{0,inf}",
                       {{"psi", j(psi)}, {"t", j(t)}, {"psi+t", j(sum)}, {"x", x}});
    }
  }
  return std::nullopt;
}

std::optional<ExampleMaps> example_maps(const FiniteSemigroup& g) {
  static const auto ex = FiniteSemigroup::from_document(worked_example());
  const auto iso = find_isomorphism(ex, g);
  if (!iso) {
    return std::nullopt;
  }
  const std::size_t n = ex.size();
  // Element (x, y) of the worked example sits at index 2x + y.
  auto carry = [&](auto&& on_pair) {
    std::vector<std::uint8_t> images(n);
    for (std::size_t x = 0; x < 3; ++x) {
      for (std::size_t y = 0; y < 2; ++y) {
        const auto [fx, fy] = on_pair(x, y);
        images[(*iso)[2 * x + y]] = (*iso)[2 * fx + fy];
      }
    }
    return Endomorphism(std::move(images));
  };
  using P = std::pair<std::size_t, std::size_t>;
  ExampleMaps out;
  out.listed = {
      carry([](std::size_t, std::size_t) { return P{0, 0}; }),
      carry([](std::size_t, std::size_t) { return P{0, 1}; }),
      carry([](std::size_t, std::size_t) { return P{1, 0}; }),
      carry([](std::size_t, std::size_t) { return P{1, 1}; }),
      carry([](std::size_t, std::size_t y) { return P{0, y}; }),
      carry([](std::size_t, std::size_t y) { return P{1, y}; }),
      carry([](std::size_t x, std::size_t) { return P{x, 0}; }),
      carry([](std::size_t x, std::size_t) { return P{x, 1}; }),
      carry([](std::size_t x, std::size_t y) { return P{x, y}; }),
  };
  out.square = carry([](std::size_t x, std::size_t y) { return P{x * x % 3, y}; });
  // μ_{(1,1),(0,0),(1,1)}: x ≤_q (1,1) exactly for the units paired with 1.
  out.extra_mu = carry([](std::size_t x, std::size_t y) {
    return x != 0 && y == 1 ? P{1, 1} : P{0, 0};
  });
  return out;
}

namespace {

class Suite {
 public:
  Suite(SemigroupPtr g, std::string label, SizeGuard guard)
      : gp_(std::move(g)), g_(*gp_), label_(std::move(label)), guard_(guard) {}

  std::vector<TheoremReport> run() {
    end_.emplace(enumerate_endomorphisms(gp_, false, guard_));
    mg_.emplace(mu_subsemiring(gp_));
    ee_.emplace(embedded_idempotent_endos(gp_, guard_));
    semiring_part();
    example_part();
    relation_part();
    simplicity_part();
    monoid_part();
    sort_reports(out_);
    return std::move(out_);
  }

 private:
  std::string at(const std::string& what) const {
    return what.empty() ? label_ : label_ + " / " + what;
  }

  void add(std::string id, std::string instance, Verdict v, std::string detail,
           json witness = json::object()) {
    out_.push_back({std::move(id), std::move(instance), v, std::move(detail),
                    std::move(witness)});
  }

  void property(std::string id, std::string instance, const PropertyResult& r,
                std::string detail) {
    if (r) {
      add(std::move(id), std::move(instance), Verdict::fails, r->law, r->witness);
    } else {
      add(std::move(id), std::move(instance), Verdict::holds, std::move(detail));
    }
  }

  std::size_t idempotent_count() const { return g_.idempotents().size(); }

  void semiring_part() {
    const auto& end = *end_;
    const auto size = "|End(G)| = " + std::to_string(end.size());
    property("end-semiring-axioms", at("End(G)"), check_semiring_axioms(end), size);
    property("karvellas-identities", at("End(G)"), check_karvellas(end), size);
    property("lambda-laws", at(""), check_lambda_laws(end),
             std::to_string(lambda_maps(g_).size()) + " distinct l maps");
    property("mu-endomorphism", at(""), check_mu_endomorphisms(g_),
             std::to_string(mu_triples(g_).size()) + " valid triples");
    property("mu-factors-through-zero-part", at(""), check_mu_factorization(g_),
             "all valid triples");
    property("mu-composition", at(""), check_mu_composition(g_),
             std::to_string(mu_maps(g_).size()) + " distinct mu maps");
    property("lg-in-mg", at(""), check_lg_in_mg(g_), "all a, c");

    const auto& mg = *mg_;
    const auto members = indices_in(end, mg.carrier());
    const auto left = is_ideal(end.tables(), members, IdealSide::left);
    const auto both = is_ideal(end.tables(), members, IdealSide::two_sided);
    if (!left.ok || !both.ok) {
      const auto& bad = left.ok ? both : left;
      const auto [u, s] = *bad.witness;
      add("mg-ideal", at("End(G)"), Verdict::fails,
          std::string(left.ok ? "not an ideal" : "not a left ideal") + " (" +
              *bad.law + ")",
          {{"member", j(end[u])}, {"other", j(end[s])}});
    } else {
      add("mg-ideal", at("End(G)"), Verdict::holds,
          "|M_G| = " + std::to_string(mg.size()) + ", two-sided ideal");
    }
  }

  void example_part() {
    const auto maps = example_maps(g_);
    if (!maps) {
      return;
    }
    const auto& end = *end_;
    const std::string inst = at("End(G)");
    for (std::size_t k = 0; k < maps->listed.size(); ++k) {
      if (!end.contains(maps->listed[k])) {
        add("example-endomorphism-count", inst, Verdict::fails,
            "listed map f" + std::to_string(k + 1) + " is not an endomorphism",
            {{"map", j(maps->listed[k])}});
        return;
      }
    }
    std::set<Endomorphism> listed(maps->listed.begin(), maps->listed.end());
    if (end.size() == listed.size()) {
      add("example-endomorphism-count", inst, Verdict::holds,
          "End(G) is exactly the listed maps");
    } else {
      auto unlisted = json::array();
      for (const auto& f : end.carrier()) {
        if (!listed.contains(f)) {
          unlisted.push_back(j(f));
        }
      }
      auto confirmed = json::object();
      if (end.contains(maps->square) && !listed.contains(maps->square)) {
        confirmed["(x,y)->(x^2,y)"] = j(maps->square);
      }
      if (end.contains(maps->extra_mu) && !listed.contains(maps->extra_mu)) {
        confirmed["mu_{(1,1),(0,0),(1,1)}"] = j(maps->extra_mu);
      }
      auto listed_json = json::array();
      for (const auto& f : maps->listed) {
        listed_json.push_back(j(f));
      }
      add("example-endomorphism-count", inst, Verdict::erratum,
          "stated 9, exhaustive enumeration finds " + std::to_string(end.size()),
          {{"stated", 9},
           {"computed", end.size()},
           {"listed", listed_json},
           {"unlisted", unlisted},
           {"confirmed_unlisted", confirmed}});
    }

    const auto sep = separated_by_idempotents(g_, end.carrier());
    if (sep.separated) {
      add("example-separation", inst, Verdict::holds, "separated by idempotents");
      return;
    }
    const auto& f9 = maps->listed.back();
    bool agree = f9 != maps->square;
    for (const auto e : g_.idempotents()) {
      agree = agree && f9[e.value()] == maps->square[e.value()];
    }
    json pair = agree ? json::array({j(f9), j(maps->square)})
                      : json::array({j(end[sep.counterexample->first]),
                                     j(end[sep.counterexample->second])});
    add("example-separation", inst, Verdict::erratum,
        agree ? "f9 and (x,y)->(x^2,y) differ but agree on every idempotent"
              : "two distinct endomorphisms agree on every idempotent",
        {{"pair", pair}});
  }

  void relation_check(const std::string& name, const RelationPartition& p,
                      const std::function<bool(const Endomorphism&,
                                               const Endomorphism&)>& rel) {
    const auto& end = *end_;
    const std::string inst = at("End(G)");
    if (!p.is_equivalence) {
      const auto [u, v] = *p.non_transitive_pair;
      add(name + "-congruence", inst, Verdict::fails, "not transitive",
          {{"pair", {j(end[u]), j(end[v])}}});
    } else if (auto bad = compatibility_violation(end.tables(), p.partition)) {
      add(name + "-congruence", inst, Verdict::fails,
          "not compatible (" + bad->translation + ")",
          {{"u", j(end[bad->u])}, {"v", j(end[bad->v])}, {"s", j(end[bad->s])}});
    } else {
      add(name + "-congruence", inst, Verdict::holds,
          std::to_string(p.partition.block_count()) + " block(s)");
    }

    if (idempotent_count() < 2) {
      add(name + "-nontrivial", inst, Verdict::precondition_unmet,
          "G has fewer than two idempotents");
      return;
    }
    // The pair used in the argument: λ_e and λ_f for two distinct idempotents.
    const auto e1 = lambda_map(g_, g_.idempotents()[0]);
    const auto e2 = lambda_map(g_, g_.idempotents()[1]);
    if (p.partition.is_identity() || !rel(e1, e2)) {
      add(name + "-nontrivial", inst, Verdict::fails,
          "relation is the identity or misses (l_e, l_f)",
          {{"pair", {j(e1), j(e2)}}});
    } else {
      add(name + "-nontrivial", inst, Verdict::holds,
          "(l_e, l_f) related for distinct idempotents e, f");
    }
  }

  void relation_part() {
    const auto& end = *end_;
    relation_check("ri", r_i_partition(end), [&](const Endomorphism& f, const Endomorphism& h) {
      return r_i_related(g_, f, h);
    });
    relation_check("rl", r_l_partition(end), [&](const Endomorphism& f, const Endomorphism& h) {
      return r_l_related(g_, f, h);
    });

    out_.push_back(verify_monolith_theorem(*ee_, at("E_E(G)")));
    out_.push_back(verify_monolith_theorem(*mg_, at("M_G")));
    auto corollary = verify_monolith_theorem(end, at("End(G)"));
    corollary.theorem = "end-monolith-corollary";
    out_.push_back(std::move(corollary));

    embedding_check();
  }

  void embedding_check() {
    const std::string inst = at("E_E(G)");
    const auto isl = idempotent_semilattice(g_);
    const auto sl = share(isl.semilattice);
    const auto end_e = enumerate_endomorphism_list(*sl, false, guard_);
    std::vector<Endomorphism> images;
    images.reserve(end_e.size());
    for (const auto& h : end_e) {
      images.push_back(embed_idempotent_endo(g_, isl, h));
    }
    const std::set<Endomorphism> distinct(images.begin(), images.end());
    if (distinct.size() != end_e.size()) {
      add("embedded-idempotent-endos", inst, Verdict::fails, "embedding is not injective");
      return;
    }
    for (std::size_t u = 0; u < end_e.size(); ++u) {
      for (std::size_t v = 0; v < end_e.size(); ++v) {
        const auto sum = embed_idempotent_endo(g_, isl, endo_add(*sl, end_e[u], end_e[v]));
        const auto prod = embed_idempotent_endo(g_, isl, endo_compose(end_e[u], end_e[v]));
        if (sum != endo_add(g_, images[u], images[v]) ||
            prod != endo_compose(images[u], images[v])) {
          add("embedded-idempotent-endos", inst, Verdict::fails,
              "embedding does not preserve + and .",
              {{"h1", j(end_e[u])}, {"h2", j(end_e[v])}});
          return;
        }
      }
    }
    for (const auto& mu : mg_->carrier()) {
      if (!ee_->contains(mu)) {
        add("embedded-idempotent-endos", inst, Verdict::fails,
            "a member of M_G lies outside the embedded image", {{"map", j(mu)}});
        return;
      }
    }
    add("embedded-idempotent-endos", inst, Verdict::holds,
        "|End(E(G))| = " + std::to_string(end_e.size()) +
            ", injective homomorphism, contains M_G");
  }

  /// Congruence-simplicity by principal congruences, cross-checked by the
  /// partition oracle when the carrier is small enough.
  std::optional<std::string> simple_mismatch(const EndoSemiring& e, bool simple) const {
    if (e.size() > kPartitionOracleLimit) {
      return std::nullopt;
    }
    if (is_congruence_simple_by_partitions(e.tables()) != simple) {
      return "principal-congruence and partition methods disagree";
    }
    return std::nullopt;
  }

  void bounded_check(const EndoSemiring& e, const std::string& inst) {
    if (idempotent_count() < 2) {
      add("simple-iff-bounded", inst, Verdict::precondition_unmet,
          "E(G) has one element, so E is trivial");
      return;
    }
    const auto ext = extremal_idempotents(g_);
    const bool bounded = ext.least && ext.greatest;
    const bool simple = is_congruence_simple(e.tables());
    std::vector<std::uint8_t> zero_parts(g_.size());
    for (std::size_t x = 0; x < g_.size(); ++x) {
      zero_parts[x] = g_.zero_part(x);
    }
    // id_E(G) embeds as x -> x⁰.
    const bool has_id = e.contains(Endomorphism(std::move(zero_parts)));
    std::string detail = std::string("least+largest ") + (bounded ? "present" : "absent") +
                         ", E " + (simple ? "simple" : "not simple") +
                         ", id_E(G) " + (has_id ? "in E" : "not in E");
    if (auto bad = simple_mismatch(e, simple)) {
      add("simple-iff-bounded", inst, Verdict::fails, *bad);
    } else if (bounded && !simple) {
      add("simple-iff-bounded", inst, Verdict::fails, detail,
          {{"monolith_blocks", monolith(e.tables()) ? monolith(e.tables())->block_count() : 0}});
    } else if (simple && has_id && !bounded) {
      add("simple-iff-bounded", inst, Verdict::fails, detail,
          {{"least", ext.least.has_value()}, {"greatest", ext.greatest.has_value()}});
    } else {
      add("simple-iff-bounded", inst, Verdict::holds, detail);
    }
  }

  void simplicity_part() {
    bounded_check(*ee_, at("E_E(G)"));
    bounded_check(*mg_, at("M_G"));

    if (idempotent_count() < 2) {
      add("simple-iff-lattice", at("E_E(G)"), Verdict::precondition_unmet,
          "E(G) has one element, so E_E(G) is trivial");
      add("mg-simple", at("M_G"), Verdict::precondition_unmet,
          "G has fewer than two idempotents, so M_G is trivial");
      return;
    }
    const bool lattice = idempotents_form_lattice(g_);
    const bool ee_simple = is_congruence_simple(ee_->tables());
    add("simple-iff-lattice", at("E_E(G)"),
        lattice == ee_simple ? Verdict::holds : Verdict::fails,
        std::string("E(G) ") + (lattice ? "is" : "is not") + " a lattice, E_E(G) " +
            (ee_simple ? "simple" : "not simple"),
        lattice == ee_simple ? json::object()
                             : json{{"lattice", lattice}, {"simple", ee_simple}});

    const bool mg_simple = is_congruence_simple(mg_->tables());
    if (auto bad = simple_mismatch(*mg_, mg_simple)) {
      add("mg-simple", at("M_G"), Verdict::fails, *bad);
    } else if (mg_simple) {
      add("mg-simple", at("M_G"), Verdict::holds,
          "|M_G| = " + std::to_string(mg_->size()) + ", congruence-simple");
    } else {
      const auto m = monolith(mg_->tables());
      add("mg-simple", at("M_G"), Verdict::fails, "M_G is not congruence-simple",
          {{"blocks", m ? json(m->blocks()) : json::array()}});
    }
  }

  void monoid_unmet(const std::string& reason) {
    for (const char* id : {"tau-composition", "tau-infinite", "tg-ideal",
                           "ideal-simple-identity", "end0-simple",
                           "end0-simple-corollary"}) {
      add(id, at(""), Verdict::precondition_unmet, reason);
    }
  }

  void ideal_simple_identity(const EndoSemiring& s, const std::string& inst) {
    const auto& t = s.tables();
    const auto id = s.index_of(identity_map(g_));
    if (!id) {
      add("ideal-simple-identity", inst, Verdict::precondition_unmet, "id_G is not in S");
      return;
    }
    const auto zero = zero_index(s);
    const auto simple = is_ideal_simple(t, zero);
    if (!simple.simple) {
      add("ideal-simple-identity", inst, Verdict::precondition_unmet,
          "S is not ideal-simple",
          {{"beta", j(s[*simple.witness])}});
      return;
    }
    // ⟨β⟩ in a semiring with identity: finite sums of α·β·γ.
    const std::size_t m = s.size();
    for (std::size_t beta = 0; beta < m; ++beta) {
      if (zero && beta == *zero) {
        continue;
      }
      std::vector<bool> in(m, false);
      std::vector<std::size_t> sums;
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t c = 0; c < m; ++c) {
          const auto p = t.mul(t.mul(a, beta), c);
          if (!in[p]) {
            in[p] = true;
            sums.push_back(p);
          }
        }
      }
      for (std::size_t i = 0; i < sums.size(); ++i) {
        for (std::size_t k = 0; k <= i; ++k) {
          const auto p = t.add(sums[i], sums[k]);
          if (!in[p]) {
            in[p] = true;
            sums.push_back(p);
          }
        }
      }
      if (!in[*id]) {
        add("ideal-simple-identity", inst, Verdict::fails,
            "id_G is not a sum of products a.beta.c", {{"beta", j(s[beta])}});
        return;
      }
    }
    add("ideal-simple-identity", inst, Verdict::holds,
        "id_G is a sum of a.beta.c for every non-zero beta");
  }

  void simple_monoid_check(const std::string& id, const EndoSemiring& e,
                           const std::string& inst) {
    std::vector<std::string> unmet;
    if (idempotent_count() < 2) {
      unmet.emplace_back("G has fewer than two idempotents");
    }
    if (!g_.absorbing()) {
      unmet.emplace_back("G has no absorbing element");
    }
    if (!separated_by_idempotents(g_, e.carrier()).separated) {
      unmet.emplace_back("E is not separated by idempotents");
    }
    if (!std::all_of(tg_->carrier().begin(), tg_->carrier().end(),
                     [&](const Endomorphism& f) { return e.contains(f); })) {
      unmet.emplace_back("T_G is not contained in E");
    }
    if (!unmet.empty()) {
      std::string detail;
      for (const auto& r : unmet) {
        detail += detail.empty() ? r : "; " + r;
      }
      add(id, inst, Verdict::precondition_unmet, detail);
      return;
    }
    const bool simple = is_congruence_simple(e.tables());
    if (auto bad = simple_mismatch(e, simple)) {
      add(id, inst, Verdict::fails, *bad);
    } else if (simple) {
      add(id, inst, Verdict::holds,
          "|E| = " + std::to_string(e.size()) + ", congruence-simple");
    } else {
      const auto m = monolith(e.tables());
      add(id, inst, Verdict::fails, "E is not congruence-simple",
          {{"blocks", m ? json(m->blocks()) : json::array()}});
    }
  }

  void monoid_part() {
    if (!g_.identity()) {
      monoid_unmet("G has no identity");
      return;
    }
    end0_.emplace(enumerate_endomorphisms(gp_, true, guard_));
    tg_.emplace(tau_subsemiring(gp_));
    const auto& end0 = *end0_;
    const auto& tg = *tg_;

    property("tau-composition", at("End_0(G)"), check_tau_composition(end0),
             "all phi in End_0(G), all a, b, c, d");
    if (g_.absorbing()) {
      property("tau-infinite", at("End_0(G)"), check_tau_infinite(end0),
               "all psi in End_0(G)");
    } else {
      add("tau-infinite", at("End_0(G)"), Verdict::precondition_unmet,
          "G has no absorbing element");
    }

    const auto members = indices_in(end0, tg.carrier());
    const auto ideal = is_ideal(end0.tables(), members, IdealSide::two_sided);
    const auto rg = finite_range_subset(end0);
    const bool tg_in_rg = std::all_of(tg.carrier().begin(), tg.carrier().end(),
                                      [&](const Endomorphism& f) { return rg.contains(f); });
    const auto rg_ideal = is_ideal(end0.tables(), indices_in(end0, rg.carrier()),
                                   IdealSide::two_sided);
    if (!ideal.ok) {
      const auto [u, s] = *ideal.witness;
      add("tg-ideal", at("End_0(G)"), Verdict::fails, "T_G is not an ideal (" + *ideal.law + ")",
          {{"member", j(end0[u])}, {"other", j(end0[s])}});
    } else if (!tg_in_rg || !rg_ideal.ok) {
      add("tg-ideal", at("End_0(G)"), Verdict::fails,
          tg_in_rg ? "R_G is not an ideal" : "T_G is not contained in R_G",
          {{"tg_size", tg.size()}, {"rg_size", rg.size()}});
    } else {
      add("tg-ideal", at("End_0(G)"), Verdict::holds,
          "|T_G| = " + std::to_string(tg.size()) + ", |R_G| = " + std::to_string(rg.size()));
    }

    ideal_simple_identity(end0, at("End_0(G)"));
    ideal_simple_identity(tg, at("T_G"));
    simple_monoid_check("end0-simple", tg, at("T_G"));
    simple_monoid_check("end0-simple-corollary", end0, at("End_0(G)"));
  }

  SemigroupPtr gp_;
  const FiniteSemigroup& g_;
  std::string label_;
  SizeGuard guard_;
  std::optional<EndoSemiring> end_;
  std::optional<EndoSemiring> mg_;
  std::optional<EndoSemiring> ee_;
  std::optional<EndoSemiring> end0_;
  std::optional<EndoSemiring> tg_;
  std::vector<TheoremReport> out_;
};

}  // namespace

std::vector<TheoremReport> verify_theorem_suite(const FiniteSemigroup& g,
                                                const std::string& label,
                                                SizeGuard guard) {
  return Suite(share(g), label, guard).run();
}

std::vector<TheoremReport> verify_corpus_suite(SizeGuard guard) {
  std::vector<TheoremReport> all;
  for (const auto& entry : builtin_corpus()) {
    const auto g = FiniteSemigroup::from_document(entry.doc, guard);
    auto reports = verify_theorem_suite(g, entry.label, guard);
    all.insert(all.end(), std::make_move_iterator(reports.begin()),
               std::make_move_iterator(reports.end()));
  }
  sort_reports(all);
  return all;
}

}  // namespace invsr
