#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "invsr/document.hpp"
#include "invsr/semigroup.hpp"

namespace invsr {

// Built-in families. Every output passes validate_semigroup and carries its
// identity / absorbing labels when those exist.
//
//   chain k          {0..k-1} under max
//   boolean k        subsets of a k-set under union (2^k elements)
//   diamond          boolean 2
//   antichain-top k  k pairwise incomparable atoms joined to a top
//   zmod-mul n       (Z_n, ·), n squarefree
//   group-cyclic n   (Z_n, +)
//   example          zmod-mul 3 x zmod-mul 2, i.e. (Z_3, ·) x ({0,1}, ·)

/// Throws PreconditionError for an unknown kind or an invalid parameter and
/// GuardError when the result exceeds the size guard.
SemigroupDocument builtin_semigroup(std::string_view kind, std::size_t param,
                                    SizeGuard guard = {});

/// Names accepted by builtin_semigroup.
std::vector<std::string> builtin_kinds();

/// Direct product of two documents, validated.
SemigroupDocument product_document(const SemigroupDocument& a,
                                   const SemigroupDocument& b,
                                   SizeGuard guard = {});

/// (Z_3, ·) x ({0,1}, ·) with elements (x,y) in x-major order.
SemigroupDocument worked_example();

struct CorpusEntry {
  std::string label;
  SemigroupDocument doc;
};

/// The suite corpus, in report order: example, chain 2, chain 3, diamond,
/// antichain-top 2, Z_3.
std::vector<CorpusEntry> builtin_corpus();

}  // namespace invsr
