#include "invsr/theorem_report.hpp"

#include <algorithm>

namespace invsr {

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::holds:
      return "holds";
    case Verdict::fails:
      return "fails";
    case Verdict::precondition_unmet:
      return "precondition-unmet";
    case Verdict::erratum:
      return "erratum";
  }
  return "unknown";
}

nlohmann::json images_json(std::span<const std::uint8_t> images) {
  auto out = nlohmann::json::array();
  for (const auto v : images) {
    out.push_back(v);
  }
  return out;
}

const std::vector<TheoremInfo>& theorem_catalogue() {
  static const std::vector<TheoremInfo> catalogue = {
      {"end-semiring-axioms",
       "End(G) is an additively commutative, additive inverse semiring"},
      {"karvellas-identities",
       "(f.g)' = f'.g = f.g', (f')' = f, (f+g)' = f'+g'"},
      {"lambda-laws",
       "l_a + l_b = l_{a+b}, f.l_a = l_{f(a)}, l_a.f = l_a; f constant iff f = "
       "l_a; L_G is an ideal; every l_a is an additive idempotent"},
      {"mu-endomorphism", "every mu_{a,b,c} with a <=_q b is an endomorphism"},
      {"mg-ideal",
       "M_G is a left ideal of End(G), and an ideal when E(G) is finite"},
      {"mu-factors-through-zero-part",
       "mu_{a,b,c}(x) = mu_{a,b,c}(x0) = mu_{a0,b0,c0}(x)"},
      {"mu-composition", "the composition of two mu maps is a mu map"},
      {"example-endomorphism-count",
       "worked example: End(G) consists of exactly nine endomorphisms"},
      {"example-separation",
       "worked example: every subset of End(G) with two or more elements is "
       "separated by idempotents"},
      {"lg-in-mg", "mu_{a,a,c} = l_a for every c, so L_G is contained in M_G"},
      {"ri-congruence", "R_I is a congruence on End(G)"},
      {"ri-nontrivial", "R_I is not the identity when |E(G)| >= 2"},
      {"rl-congruence", "R_L is a congruence on End(G)"},
      {"rl-nontrivial", "R_L is not the identity when |E(G)| >= 2"},
      {"monolith-is-r",
       "a subsemiring E with M_G in E, separated by idempotents, over G with "
       ">= 2 idempotents is subdirectly irreducible with monolith R|E"},
      {"end-monolith-corollary",
       "End(G) separated by idempotents is subdirectly irreducible with "
       "monolith R = R_I & R_L"},
      {"embedded-idempotent-endos",
       "End(E(G)) embeds in End(G) as a subsemiring via h -> (x -> h(x0))"},
      {"simple-iff-bounded",
       "E between M_E(G) and End(E(G)): least and largest idempotents imply E "
       "simple; E simple with id in E implies both exist"},
      {"simple-iff-lattice",
       "End(E(G)) is simple iff the finite semilattice E(G) is a lattice"},
      {"mg-simple", "M_G is congruence-simple"},
      {"tau-composition",
       "phi.t_{a,b} = t_{a,phi(b)}; t_{c,d}.phi.t_{a,b} = theta if phi(b) <=_q "
       "c, else t_{a,d}"},
      {"tau-infinite", "t_{0,inf} is the infinite element of End_0(G)"},
      {"tg-ideal", "T_G is an ideal of End_0(G); T_G and R_G ideals, T_G in R_G"},
      {"ideal-simple-identity",
       "in an ideal-simple S containing id, id lies in the ideal generated by "
       "any non-zero beta"},
      {"end0-simple",
       "E with T_G in E, separated by idempotents, over a monoid with >= 2 "
       "idempotents and an absorbing element is congruence-simple"},
      {"end0-simple-corollary",
       "End_0(G) separated by idempotents is congruence-simple"},
  };
  return catalogue;
}

std::size_t theorem_rank(std::string_view id) {
  const auto& cat = theorem_catalogue();
  for (std::size_t i = 0; i < cat.size(); ++i) {
    if (cat[i].id == id) {
      return i;
    }
  }
  return cat.size();
}

void sort_reports(std::vector<TheoremReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(),
                   [](const TheoremReport& a, const TheoremReport& b) {
                     const auto ra = theorem_rank(a.theorem);
                     const auto rb = theorem_rank(b.theorem);
                     if (ra != rb) {
                       return ra < rb;
                     }
                     return a.instance < b.instance;
                   });
}

}  // namespace invsr
