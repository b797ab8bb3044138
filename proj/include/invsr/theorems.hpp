#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "invsr/endomorphism.hpp"
#include "invsr/theorem_report.hpp"

namespace invsr {

/// First failed law of a property check, with the offending maps.
struct PropertyViolation {
  std::string law;
  nlohmann::json witness;
};

using PropertyResult = std::optional<PropertyViolation>;

// Exhaustive property checks. Each returns the first violation found.

/// Additive and multiplicative associativity, additive commutativity, both
/// distributive laws and uniqueness of additive inverses, on the tables.
PropertyResult check_semiring_axioms(const EndoSemiring& s);
/// (f·g)' = f'·g = f·g', (f')' = f, (f+g)' = f'+g' over all of S.
PropertyResult check_karvellas(const EndoSemiring& s);
/// λ_a + λ_b = λ_{a+b}, f·λ_a = λ_{f(a)}, λ_a·f = λ_a, λ_a + λ_a = λ_a,
/// constant iff some λ_a, L_G a two-sided ideal. `end` must be End(G).
PropertyResult check_lambda_laws(const EndoSemiring& end);
/// Every valid triple gives an endomorphism.
PropertyResult check_mu_endomorphisms(const FiniteSemigroup& g);
/// μ_{a,b,c}(x) = μ_{a,b,c}(x⁰) = μ_{a⁰,b⁰,c⁰}(x).
PropertyResult check_mu_factorization(const FiniteSemigroup& g);
/// Each composite of two μ maps equals μ_{a,b,c} for some valid triple,
/// found by searching every triple.
PropertyResult check_mu_composition(const FiniteSemigroup& g);
/// μ_{a,a,c} = λ_a for all a, c.
PropertyResult check_lg_in_mg(const FiniteSemigroup& g);
/// φ·τ_{a,b} = τ_{a,φ(b)} and the two-sided formula, over all of End_0(G)
/// and all a, b, c, d.
PropertyResult check_tau_composition(const EndoSemiring& end0);
/// ψ + τ_{0,∞} = τ_{0,∞} = τ_{0,∞} + ψ for every ψ in End_0(G).
PropertyResult check_tau_infinite(const EndoSemiring& end0);

/// The maps written out in the worked example, carried to `g` through an
/// isomorphism with worked_example(). Nothing if `g` is not isomorphic.
struct ExampleMaps {
  /// f1, ..., f9
  std::vector<Endomorphism> listed;
  /// (x, y) -> (x², y)
  Endomorphism square;
  /// μ_{(1,1),(0,0),(1,1)}
  Endomorphism extra_mu;
};

std::optional<ExampleMaps> example_maps(const FiniteSemigroup& g);

/// Every applicable statement on G, sorted by catalogue order then instance.
/// Throws GuardError when G is too large to enumerate End(G).
std::vector<TheoremReport> verify_theorem_suite(const FiniteSemigroup& g,
                                                const std::string& label,
                                                SizeGuard guard = {});

/// The suite over builtin_corpus(), merged and sorted.
std::vector<TheoremReport> verify_corpus_suite(SizeGuard guard = {});

}  // namespace invsr
