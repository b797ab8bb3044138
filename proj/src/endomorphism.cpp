#include "invsr/endomorphism.hpp"

#include <algorithm>
#include <functional>
#include <string_view>
#include <unordered_set>

#include "invsr/errors.hpp"

namespace invsr {
namespace {

constexpr std::uint8_t kUnset = 0xFF;

void require_map_on(const FiniteSemigroup& g, std::span<const std::uint8_t> f) {
  if (f.size() != g.size()) {
    throw PreconditionError("map has " + std::to_string(f.size()) +
                            " images, semigroup has " +
                            std::to_string(g.size()) + " elements");
  }
  for (std::uint8_t v : f) {
    if (v >= g.size()) {
      throw PreconditionError("image index " + std::to_string(v) +
                              " out of range");
    }
  }
}

std::vector<Endomorphism> sorted_unique(std::vector<Endomorphism> maps) {
  std::sort(maps.begin(), maps.end());
  maps.erase(std::unique(maps.begin(), maps.end()), maps.end());
  return maps;
}

}  // namespace

std::size_t EndomorphismHash::operator()(const Endomorphism& f) const noexcept {
  const auto bytes = f.images();
  return std::hash<std::string_view>{}(std::string_view(
      reinterpret_cast<const char*>(bytes.data()), bytes.size()));
}

std::optional<std::pair<ElementId, ElementId>> endomorphism_violation(
    const FiniteSemigroup& g, std::span<const std::uint8_t> f) {
  require_map_on(g, f);
  if (auto v = kernels::hom_violation(g.table(), f)) {
    return std::pair{ElementId(v->first), ElementId(v->second)};
  }
  return std::nullopt;
}

Endomorphism endo_add(const FiniteSemigroup& g, const Endomorphism& f,
                      const Endomorphism& h) {
  std::vector<std::uint8_t> out(g.size());
  kernels::pointwise(g.table(), f.images(), h.images(), out);
  return Endomorphism(std::move(out));
}

Endomorphism endo_compose(const Endomorphism& f, const Endomorphism& h) {
  std::vector<std::uint8_t> out(h.size());
  kernels::compose(f.images(), h.images(), out);
  return Endomorphism(std::move(out));
}

Endomorphism endo_additive_inverse(const FiniteSemigroup& g,
                                   const Endomorphism& f) {
  std::vector<std::uint8_t> out(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) {
    out[x] = g.inverse_of(ElementId(f[x])).index;
  }
  return Endomorphism(std::move(out));
}

Endomorphism identity_map(const FiniteSemigroup& g) {
  std::vector<std::uint8_t> out(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) {
    out[x] = static_cast<std::uint8_t>(x);
  }
  return Endomorphism(std::move(out));
}

Endomorphism constant_map(const FiniteSemigroup& g, ElementId c) {
  return Endomorphism(std::vector<std::uint8_t>(g.size(), c.index));
}

bool is_constant(const Endomorphism& f) {
  const auto im = f.images();
  return std::all_of(im.begin(), im.end(),
                     [&](std::uint8_t v) { return v == im.front(); });
}

Endomorphism lambda_map(const FiniteSemigroup& g, ElementId a) {
  return constant_map(g, g.zero_part(a));
}

Endomorphism mu_map(const FiniteSemigroup& g, ElementId a, ElementId b,
                    ElementId c) {
  if (!g.leq_q(a, b)) {
    throw PreconditionError("mu requires a <=_q b, but " + g.label(a) +
                            " is not below " + g.label(b));
  }
  const std::uint8_t low = g.zero_part(a).index;
  const std::uint8_t high = g.zero_part(b).index;
  std::vector<std::uint8_t> out(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) {
    out[x] = g.leq_q(x, c.value()) ? low : high;
  }
  return Endomorphism(std::move(out));
}

Endomorphism tau_map(const FiniteSemigroup& g, ElementId a, ElementId b) {
  const auto zero = g.identity();
  if (!zero) {
    throw PreconditionError("tau requires an identity element; " + g.name() +
                            " has none");
  }
  return mu_map(g, *zero, b, a);
}

std::optional<Endomorphism> theta_map(const FiniteSemigroup& g) {
  if (auto zero = g.identity()) {
    return constant_map(g, *zero);
  }
  return std::nullopt;
}

std::vector<Endomorphism> lambda_maps(const FiniteSemigroup& g) {
  std::vector<Endomorphism> out;
  for (std::size_t a = 0; a < g.size(); ++a) {
    out.push_back(lambda_map(g, ElementId(a)));
  }
  return sorted_unique(std::move(out));
}

std::vector<MuTriple> mu_triples(const FiniteSemigroup& g) {
  std::vector<MuTriple> out;
  const std::size_t n = g.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!g.leq_q(a, b)) {
        continue;
      }
      for (std::size_t c = 0; c < n; ++c) {
        out.push_back({ElementId(a), ElementId(b), ElementId(c)});
      }
    }
  }
  return out;
}

std::vector<Endomorphism> mu_maps(const FiniteSemigroup& g) {
  std::vector<Endomorphism> out;
  for (const auto& t : mu_triples(g)) {
    out.push_back(mu_map(g, t.a, t.b, t.c));
  }
  return sorted_unique(std::move(out));
}

std::vector<Endomorphism> tau_maps(const FiniteSemigroup& g) {
  std::vector<Endomorphism> out;
  if (!g.identity()) {
    return out;
  }
  for (std::size_t a = 0; a < g.size(); ++a) {
    for (std::size_t b = 0; b < g.size(); ++b) {
      out.push_back(tau_map(g, ElementId(a), ElementId(b)));
    }
  }
  return sorted_unique(std::move(out));
}

std::vector<Endomorphism> enumerate_endomorphism_list(const FiniteSemigroup& g,
                                                      bool zero_fixing,
                                                      SizeGuard guard) {
  const std::size_t n = g.size();
  if (n > kEnumerationLimit && !guard.force) {
    throw GuardError("endomorphism enumeration is limited to |G| <= " +
                     std::to_string(kEnumerationLimit) + " (|G| = " +
                     std::to_string(n) + "; use --force to override)");
  }
  std::vector<std::uint8_t> forced(n, kUnset);
  if (zero_fixing) {
    const auto zero = g.identity();
    if (!zero) {
      throw PreconditionError("zero-fixing endomorphisms need an identity; " +
                              g.name() + " has none");
    }
    forced[zero->value()] = zero->index;
  }

  std::vector<std::uint8_t> all_values(n);
  for (std::size_t v = 0; v < n; ++v) {
    all_values[v] = static_cast<std::uint8_t>(v);
  }
  std::vector<std::uint8_t> idempotent_values;
  for (ElementId e : g.idempotents()) {
    idempotent_values.push_back(e.index);
  }

  std::vector<std::uint8_t> f(n, 0);
  std::vector<std::size_t> undo;
  std::vector<Endomorphism> out;

  // Assign f(k) after f(0..k-1). Every pair with max index k is settled
  // here: its product is either assigned (check) or later (force).
  std::function<void(std::size_t)> assign = [&](std::size_t k) {
    if (k == n) {
      out.emplace_back(f);
      return;
    }
    const std::uint8_t pinned = forced[k];
    const std::span<const std::uint8_t> candidates =
        pinned != kUnset ? std::span<const std::uint8_t>(&forced[k], 1)
        : g.is_idempotent(ElementId(k)) ? std::span<const std::uint8_t>(idempotent_values)
                                         : std::span<const std::uint8_t>(all_values);
    for (const std::uint8_t v : candidates) {
      f[k] = v;
      const std::size_t mark = undo.size();
      bool ok = true;
      for (std::size_t x = 0; x <= k && ok; ++x) {
        for (const auto& [p, q] : {std::pair{x, k}, std::pair{k, x}}) {
          const std::size_t z = g.add(p, q);
          const std::uint8_t want = g.add(f[p], f[q]);
          if (z <= k) {
            if (f[z] != want) {
              ok = false;
              break;
            }
          } else if (forced[z] == kUnset) {
            forced[z] = want;
            undo.push_back(z);
          } else if (forced[z] != want) {
            ok = false;
            break;
          }
        }
      }
      if (ok) {
        assign(k + 1);
      }
      while (undo.size() > mark) {
        forced[undo.back()] = kUnset;
        undo.pop_back();
      }
    }
  };
  assign(0);
  return out;
}

TableSemiring::TableSemiring(std::size_t m, std::vector<std::uint32_t> add,
                             std::vector<std::uint32_t> mul)
    : size_(m), add_(std::move(add)), mul_(std::move(mul)) {
  if (add_.size() != m * m || mul_.size() != m * m) {
    throw FormatError("semiring tables must be " + std::to_string(m) + "x" +
                      std::to_string(m));
  }
  for (const auto* table : {&add_, &mul_}) {
    for (std::uint32_t v : *table) {
      if (v >= m) {
        throw FormatError("semiring table entry " + std::to_string(v) +
                          " out of range");
      }
    }
  }
}

TableSemiring TableSemiring::product(const TableSemiring& other) const {
  const std::size_t k = other.size();
  const std::size_t m = size_ * k;
  std::vector<std::uint32_t> add(m * m);
  std::vector<std::uint32_t> mul(m * m);
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t v = 0; v < m; ++v) {
      add[u * m + v] = static_cast<std::uint32_t>(
          this->add(u / k, v / k) * k + other.add(u % k, v % k));
      mul[u * m + v] = static_cast<std::uint32_t>(
          this->mul(u / k, v / k) * k + other.mul(u % k, v % k));
    }
  }
  return TableSemiring(m, std::move(add), std::move(mul));
}

EndoSemiring EndoSemiring::from_closed(SemigroupPtr ambient,
                                       std::vector<Endomorphism> members,
                                       SizeGuard guard) {
  EndoSemiring s;
  s.ambient_ = std::move(ambient);
  s.carrier_ = sorted_unique(std::move(members));
  const std::size_t m = s.carrier_.size();
  if (m > kCarrierTableLimit && !guard.force) {
    throw GuardError("carrier of " + std::to_string(m) +
                     " endomorphisms exceeds the table limit " +
                     std::to_string(kCarrierTableLimit) +
                     " (use --force to override)");
  }
  const FiniteSemigroup& g = *s.ambient_;
  for (const auto& f : s.carrier_) {
    if (auto v = endomorphism_violation(g, f.images())) {
      throw PreconditionError("carrier member is not an endomorphism");
    }
  }
  std::vector<std::uint32_t> add(m * m);
  std::vector<std::uint32_t> mul(m * m);
  auto lookup = [&](const Endomorphism& r) {
    auto idx = s.index_of(r);
    if (!idx) {
      throw PreconditionError("endomorphism set is not closed under + and ·");
    }
    return static_cast<std::uint32_t>(*idx);
  };
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t v = 0; v < m; ++v) {
      add[u * m + v] = lookup(endo_add(g, s.carrier_[u], s.carrier_[v]));
      mul[u * m + v] = lookup(endo_compose(s.carrier_[u], s.carrier_[v]));
    }
  }
  s.tables_ = TableSemiring(m, std::move(add), std::move(mul));
  return s;
}

std::optional<std::size_t> EndoSemiring::index_of(const Endomorphism& f) const {
  auto it = std::lower_bound(carrier_.begin(), carrier_.end(), f);
  if (it == carrier_.end() || *it != f) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - carrier_.begin());
}

EndoSemiring enumerate_endomorphisms(SemigroupPtr g, bool zero_fixing,
                                     SizeGuard guard) {
  auto maps = enumerate_endomorphism_list(*g, zero_fixing, guard);
  return EndoSemiring::from_closed(std::move(g), std::move(maps), guard);
}

EndoSemiring close_subsemiring(SemigroupPtr g,
                               std::span<const Endomorphism> generators,
                               SizeGuard guard) {
  const FiniteSemigroup& ambient = *g;
  for (const auto& f : generators) {
    if (endomorphism_violation(ambient, f.images())) {
      throw PreconditionError("generator is not an endomorphism");
    }
  }
  std::vector<Endomorphism> members;
  std::unordered_set<Endomorphism, EndomorphismHash> seen;
  auto offer = [&](Endomorphism f) {
    if (seen.insert(f).second) {
      members.push_back(std::move(f));
    }
  };
  for (const auto& f : generators) {
    offer(f);
  }
  // Every unordered pair {i, j} is visited once as the list grows.
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const Endomorphism u = members[i];
      const Endomorphism v = members[j];
      offer(endo_add(ambient, u, v));
      offer(endo_add(ambient, v, u));
      offer(endo_compose(u, v));
      offer(endo_compose(v, u));
    }
  }
  return EndoSemiring::from_closed(std::move(g), std::move(members), guard);
}

EndoSemiring generate_closed_subsemiring(const EndoSemiring& s,
                                         std::span<const Endomorphism> generators) {
  for (const auto& f : generators) {
    if (!s.contains(f)) {
      throw PreconditionError("generator is not in the ambient semiring");
    }
  }
  return close_subsemiring(s.ambient_ptr(), generators, SizeGuard{true});
}

EndoSemiring mu_subsemiring(SemigroupPtr g) {
  const auto gens = mu_maps(*g);
  return close_subsemiring(std::move(g), gens);
}

EndoSemiring tau_subsemiring(SemigroupPtr g) {
  if (!g->identity()) {
    throw PreconditionError("T_G requires an identity element; " + g->name() +
                            " has none");
  }
  const auto gens = tau_maps(*g);
  return close_subsemiring(std::move(g), gens);
}

EndoSemiring finite_range_subset(const EndoSemiring& s) {
  const auto zero = s.ambient().identity();
  if (!zero) {
    throw PreconditionError("R_G requires an identity element");
  }
  std::vector<Endomorphism> kept;
  for (const auto& f : s.carrier()) {
    // every range of a map on a finite set is finite
    if (f(*zero) == *zero) {
      kept.push_back(f);
    }
  }
  return EndoSemiring::from_closed(s.ambient_ptr(), std::move(kept),
                                   SizeGuard{true});
}

SeparationResult separated_by_idempotents(const FiniteSemigroup& g,
                                          std::span<const Endomorphism> maps) {
  SeparationResult out;
  if (maps.size() < 2) {
    out.vacuous = true;
    return out;
  }
  const auto& es = g.idempotents();
  for (std::size_t i = 0; i < maps.size(); ++i) {
    for (std::size_t j = i + 1; j < maps.size(); ++j) {
      if (maps[i] == maps[j]) {
        continue;
      }
      const bool differ = std::any_of(es.begin(), es.end(), [&](ElementId e) {
        return maps[i](e) != maps[j](e);
      });
      if (!differ) {
        out.separated = false;
        out.counterexample = std::pair{i, j};
        return out;
      }
    }
  }
  return out;
}

Endomorphism embed_idempotent_endo(const FiniteSemigroup& g,
                                   const IdempotentSemilattice& e,
                                   const Endomorphism& h) {
  if (endomorphism_violation(e.semilattice, h.images())) {
    throw PreconditionError(
        "map is not an endomorphism of the idempotent semilattice");
  }
  std::vector<std::uint8_t> out(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) {
    const ElementId pos = *e.position[g.zero_part(x)];
    out[x] = e.in_ambient[h[pos.value()]].index;
  }
  return Endomorphism(std::move(out));
}

EndoSemiring embedded_idempotent_endos(SemigroupPtr g, SizeGuard guard) {
  const auto e = idempotent_semilattice(*g);
  std::vector<Endomorphism> embedded;
  for (const auto& h : enumerate_endomorphism_list(e.semilattice, false, guard)) {
    embedded.push_back(embed_idempotent_endo(*g, e, h));
  }
  return EndoSemiring::from_closed(std::move(g), std::move(embedded), guard);
}

IdealCheck is_ideal(const TableSemiring& s, std::span<const std::size_t> members,
                    IdealSide side) {
  std::vector<bool> in(s.size(), false);
  for (std::size_t u : members) {
    in[u] = true;
  }
  IdealCheck out;
  auto fail = [&](const char* law, std::size_t u, std::size_t v) {
    out.ok = false;
    out.law = law;
    out.witness = std::pair{u, v};
  };
  for (std::size_t u : members) {
    for (std::size_t v : members) {
      if (!in[s.add(u, v)]) {
        fail("add", u, v);
        return out;
      }
    }
  }
  for (std::size_t u : members) {
    for (std::size_t t = 0; t < s.size(); ++t) {
      if (side != IdealSide::right && !in[s.mul(t, u)]) {
        fail("left", u, t);
        return out;
      }
      if (side != IdealSide::left && !in[s.mul(u, t)]) {
        fail("right", u, t);
        return out;
      }
    }
  }
  return out;
}

std::vector<std::size_t> indices_in(const EndoSemiring& s,
                                    std::span<const Endomorphism> maps) {
  std::vector<std::size_t> out;
  for (const auto& f : maps) {
    auto idx = s.index_of(f);
    if (!idx) {
      throw PreconditionError("map is not in the semiring carrier");
    }
    out.push_back(*idx);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace invsr
