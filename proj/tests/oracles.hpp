#pragma once

// Brute-force reference implementations for the tests. Nothing here calls
// the library's algorithms; inputs are read off plain tables.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "invsr/document.hpp"
#include "invsr/endomorphism.hpp"

namespace oracle {

using Table = std::vector<std::vector<int>>;
using Map = std::vector<int>;

inline Table table_of(const invsr::SemigroupDocument& doc) {
  Table t(doc.table.size());
  for (std::size_t i = 0; i < doc.table.size(); ++i) {
    for (const auto v : doc.table[i]) {
      t[i].push_back(static_cast<int>(v));
    }
  }
  return t;
}

inline int size(const Table& t) { return static_cast<int>(t.size()); }

inline bool is_hom(const Table& t, const Map& f) {
  for (int x = 0; x < size(t); ++x) {
    for (int y = 0; y < size(t); ++y) {
      if (f[t[x][y]] != t[f[x]][f[y]]) {
        return false;
      }
    }
  }
  return true;
}

/// Every one of the n^n maps, kept if it is a homomorphism. Lexicographic.
inline std::vector<Map> all_endomorphisms(const Table& t) {
  const int n = size(t);
  std::vector<Map> out;
  Map f(n, 0);
  while (true) {
    if (is_hom(t, f)) {
      out.push_back(f);
    }
    int k = n - 1;
    while (k >= 0 && f[k] == n - 1) {
      f[k] = 0;
      --k;
    }
    if (k < 0) {
      break;
    }
    ++f[k];
  }
  return out;
}

inline int inverse(const Table& t, int a) {
  for (int j = 0; j < size(t); ++j) {
    if (t[t[a][j]][a] == a && t[t[j][a]][j] == j) {
      return j;
    }
  }
  return -1;
}

inline bool leq_q(const Table& t, int a, int b) {
  return t[t[a][inverse(t, a)]][b] == b;
}

inline Map to_map(const invsr::Endomorphism& f) {
  return Map(f.images().begin(), f.images().end());
}

/// A finite semiring read into plain tables.
struct Semiring {
  int m = 0;
  Table add;
  Table mul;
};

inline Semiring read(const invsr::TableSemiring& s) {
  Semiring r;
  r.m = static_cast<int>(s.size());
  r.add.assign(r.m, std::vector<int>(r.m));
  r.mul.assign(r.m, std::vector<int>(r.m));
  for (int u = 0; u < r.m; ++u) {
    for (int v = 0; v < r.m; ++v) {
      r.add[u][v] = static_cast<int>(s.add(u, v));
      r.mul[u][v] = static_cast<int>(s.mul(u, v));
    }
  }
  return r;
}

using Relation = std::vector<std::vector<bool>>;

/// Least congruence containing `pairs`, by iterating reflexive, symmetric,
/// transitive and translation closure on a boolean matrix to a fixpoint.
inline Relation closure(const Semiring& s,
                        const std::vector<std::pair<int, int>>& pairs) {
  Relation r(s.m, std::vector<bool>(s.m, false));
  for (int u = 0; u < s.m; ++u) {
    r[u][u] = true;
  }
  for (const auto& [u, v] : pairs) {
    r[u][v] = r[v][u] = true;
  }
  bool changed = true;
  auto set = [&](int a, int b) {
    if (!r[a][b]) {
      r[a][b] = r[b][a] = true;
      changed = true;
    }
  };
  while (changed) {
    changed = false;
    for (int u = 0; u < s.m; ++u) {
      for (int v = 0; v < s.m; ++v) {
        if (!r[u][v]) {
          continue;
        }
        for (int t = 0; t < s.m; ++t) {
          set(s.add[u][t], s.add[v][t]);
          set(s.add[t][u], s.add[t][v]);
          set(s.mul[u][t], s.mul[v][t]);
          set(s.mul[t][u], s.mul[t][v]);
          if (r[v][t]) {
            set(u, t);
          }
        }
      }
    }
  }
  return r;
}

inline bool compatible(const Semiring& s, const std::vector<int>& block) {
  for (int u = 0; u < s.m; ++u) {
    for (int v = 0; v < s.m; ++v) {
      if (block[u] != block[v]) {
        continue;
      }
      for (int t = 0; t < s.m; ++t) {
        if (block[s.add[u][t]] != block[s.add[v][t]] ||
            block[s.add[t][u]] != block[s.add[t][v]] ||
            block[s.mul[u][t]] != block[s.mul[v][t]] ||
            block[s.mul[t][u]] != block[s.mul[t][v]]) {
          return false;
        }
      }
    }
  }
  return true;
}

/// All set partitions of {0..m-1}, each as a block label per element,
/// generated recursively by placing element k into an existing block or a
/// new one.
inline std::vector<std::vector<int>> all_partitions(int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> block(m, 0);
  std::function<void(int, int)> place = [&](int k, int blocks) {
    if (k == m) {
      out.push_back(block);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      block[k] = b;
      place(k + 1, b == blocks ? blocks + 1 : blocks);
    }
  };
  if (m > 0) {
    place(0, 0);
  }
  return out;
}

inline std::vector<std::vector<int>> all_congruences(const Semiring& s) {
  std::vector<std::vector<int>> out;
  for (const auto& p : all_partitions(s.m)) {
    if (compatible(s, p)) {
      out.push_back(p);
    }
  }
  return out;
}

inline bool same_block_structure(const std::vector<int>& a,
                                 const std::vector<int>& b) {
  for (std::size_t u = 0; u < a.size(); ++u) {
    for (std::size_t v = 0; v < a.size(); ++v) {
      if ((a[u] == a[v]) != (b[u] == b[v])) {
        return false;
      }
    }
  }
  return true;
}

inline std::vector<int> labels_of(const Relation& r) {
  std::vector<int> block(r.size(), -1);
  int next = 0;
  for (std::size_t u = 0; u < r.size(); ++u) {
    if (block[u] >= 0) {
      continue;
    }
    for (std::size_t v = u; v < r.size(); ++v) {
      if (r[u][v]) {
        block[v] = next;
      }
    }
    ++next;
  }
  return block;
}

}  // namespace oracle
