#include "invsr/congruence.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "invsr/errors.hpp"

namespace invsr {

UnionFind::UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t UnionFind::find(std::size_t x) {
  std::size_t root = x;
  while (parent_[root] != root) {
    root = parent_[root];
  }
  while (parent_[x] != root) {
    const std::size_t next = parent_[x];
    parent_[x] = root;
    x = next;
  }
  return root;
}

bool UnionFind::unite(std::size_t x, std::size_t y) {
  x = find(x);
  y = find(y);
  if (x == y) {
    return false;
  }
  if (size_[x] < size_[y]) {
    std::swap(x, y);
  }
  parent_[y] = x;
  size_[x] += size_[y];
  return true;
}

Congruence Congruence::identity(std::size_t m) {
  std::vector<std::uint32_t> rep(m);
  std::iota(rep.begin(), rep.end(), std::uint32_t{0});
  return Congruence(std::move(rep));
}

Congruence Congruence::universal(std::size_t m) {
  return Congruence(std::vector<std::uint32_t>(m, 0));
}

Congruence Congruence::from_labels(std::span<const std::size_t> labels) {
  std::map<std::size_t, std::uint32_t> first;
  std::vector<std::uint32_t> rep(labels.size());
  for (std::size_t u = 0; u < labels.size(); ++u) {
    rep[u] = first.try_emplace(labels[u], static_cast<std::uint32_t>(u))
                 .first->second;
  }
  return Congruence(std::move(rep));
}

Congruence Congruence::from_union_find(UnionFind& uf, std::size_t m) {
  std::vector<std::size_t> roots(m);
  for (std::size_t u = 0; u < m; ++u) {
    roots[u] = uf.find(u);
  }
  return from_labels(roots);
}

std::size_t Congruence::block_count() const {
  std::size_t count = 0;
  for (std::size_t u = 0; u < rep_.size(); ++u) {
    count += rep_[u] == u ? 1 : 0;
  }
  return count;
}

std::vector<std::vector<std::size_t>> Congruence::blocks() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> slot(rep_.size());
  for (std::size_t u = 0; u < rep_.size(); ++u) {
    if (rep_[u] == u) {
      slot[u] = out.size();
      out.emplace_back();
    }
    out[slot[rep_[u]]].push_back(u);
  }
  return out;
}

Congruence Congruence::meet(const Congruence& other) const {
  std::vector<std::size_t> labels(size());
  for (std::size_t u = 0; u < size(); ++u) {
    labels[u] = rep_[u] * size() + other.rep_[u];
  }
  return from_labels(labels);
}

bool Congruence::refines(const Congruence& other) const {
  for (std::size_t u = 0; u < size(); ++u) {
    if (!other.related(u, rep_[u])) {
      return false;
    }
  }
  return true;
}

std::optional<CompatibilityViolation> compatibility_violation(
    const TableSemiring& s, const Congruence& c) {
  const std::size_t m = s.size();
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t v = u + 1; v < m; ++v) {
      if (!c.related(u, v)) {
        continue;
      }
      for (std::size_t t = 0; t < m; ++t) {
        if (!c.related(s.add(u, t), s.add(v, t))) {
          return CompatibilityViolation{u, v, t, "u+s"};
        }
        if (!c.related(s.add(t, u), s.add(t, v))) {
          return CompatibilityViolation{u, v, t, "s+u"};
        }
        if (!c.related(s.mul(u, t), s.mul(v, t))) {
          return CompatibilityViolation{u, v, t, "u*s"};
        }
        if (!c.related(s.mul(t, u), s.mul(t, v))) {
          return CompatibilityViolation{u, v, t, "s*u"};
        }
      }
    }
  }
  return std::nullopt;
}

Congruence principal_congruence(
    const TableSemiring& s,
    std::span<const std::pair<std::size_t, std::size_t>> pairs) {
  const std::size_t m = s.size();
  UnionFind uf(m);
  std::deque<std::pair<std::size_t, std::size_t>> work(pairs.begin(),
                                                       pairs.end());
  while (!work.empty()) {
    const auto [u, v] = work.front();
    work.pop_front();
    if (!uf.unite(u, v)) {
      continue;
    }
    for (std::size_t t = 0; t < m; ++t) {
      work.emplace_back(s.add(u, t), s.add(v, t));
      work.emplace_back(s.add(t, u), s.add(t, v));
      work.emplace_back(s.mul(u, t), s.mul(v, t));
      work.emplace_back(s.mul(t, u), s.mul(t, v));
    }
  }
  return Congruence::from_union_find(uf, m);
}

std::vector<Congruence> all_congruences(const TableSemiring& s,
                                        SizeGuard guard) {
  const std::size_t m = s.size();
  if (m > kPartitionOracleLimit && !guard.force) {
    throw GuardError("partition oracle is limited to carriers of " +
                     std::to_string(kPartitionOracleLimit) + " (got " +
                     std::to_string(m) + "); use principal congruences");
  }
  std::vector<Congruence> out;
  if (m == 0) {
    return out;
  }
  // Restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
  std::vector<std::size_t> a(m, 0);
  std::vector<std::size_t> prefix_max(m, 0);
  while (true) {
    auto c = Congruence::from_labels(a);
    if (is_congruence(s, c)) {
      out.push_back(std::move(c));
    }
    std::size_t i = m - 1;
    while (i > 0 && a[i] == prefix_max[i - 1] + 1) {
      --i;
    }
    if (i == 0) {
      break;
    }
    ++a[i];
    prefix_max[i] = std::max(prefix_max[i - 1], a[i]);
    for (std::size_t j = i + 1; j < m; ++j) {
      a[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
  return out;
}

namespace {

void require_nontrivial(const TableSemiring& s) {
  if (s.size() < 2) {
    throw PreconditionError("semiring must have at least two elements");
  }
}

}  // namespace

std::optional<Congruence> monolith(const TableSemiring& s) {
  require_nontrivial(s);
  const std::size_t m = s.size();
  std::optional<Congruence> meet;
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t v = u + 1; v < m; ++v) {
      auto cg = principal_congruence(s, u, v);
      meet = meet ? meet->meet(cg) : std::move(cg);
      if (meet->is_identity()) {
        return std::nullopt;
      }
    }
  }
  return meet;
}

std::optional<Congruence> monolith_by_partitions(const TableSemiring& s,
                                                 SizeGuard guard) {
  require_nontrivial(s);
  std::optional<Congruence> meet;
  for (auto& c : all_congruences(s, guard)) {
    if (c.is_identity()) {
      continue;
    }
    meet = meet ? meet->meet(c) : std::move(c);
  }
  if (!meet || meet->is_identity()) {
    return std::nullopt;
  }
  return meet;
}

bool is_subdirectly_irreducible(const TableSemiring& s) {
  return monolith(s).has_value();
}

bool is_congruence_simple(const TableSemiring& s) {
  require_nontrivial(s);
  for (std::size_t u = 0; u < s.size(); ++u) {
    for (std::size_t v = u + 1; v < s.size(); ++v) {
      if (!principal_congruence(s, u, v).is_universal()) {
        return false;
      }
    }
  }
  return true;
}

bool is_congruence_simple_by_partitions(const TableSemiring& s,
                                        SizeGuard guard) {
  require_nontrivial(s);
  return all_congruences(s, guard).size() == 2;
}

std::vector<std::size_t> ideal_generated_by(const TableSemiring& s,
                                            std::size_t beta) {
  const std::size_t m = s.size();
  std::vector<bool> in(m, false);
  std::vector<std::size_t> members;
  auto offer = [&](std::size_t u) {
    if (!in[u]) {
      in[u] = true;
      members.push_back(u);
    }
  };
  offer(beta);
  for (std::size_t i = 0; i < members.size(); ++i) {
    const std::size_t u = members[i];
    for (std::size_t t = 0; t < m; ++t) {
      offer(s.mul(t, u));
      offer(s.mul(u, t));
    }
    for (std::size_t j = 0; j <= i; ++j) {
      offer(s.add(u, members[j]));
      offer(s.add(members[j], u));
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

IdealSimplicity is_ideal_simple(const TableSemiring& s,
                                std::optional<std::size_t> zero) {
  for (std::size_t beta = 0; beta < s.size(); ++beta) {
    if (zero && beta == *zero) {
      continue;
    }
    if (ideal_generated_by(s, beta).size() != s.size()) {
      return {false, beta};
    }
  }
  return {};
}

std::optional<std::size_t> zero_index(const EndoSemiring& s) {
  if (auto theta = theta_map(s.ambient())) {
    return s.index_of(*theta);
  }
  return std::nullopt;
}

}  // namespace invsr
