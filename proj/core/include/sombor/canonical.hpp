#pragma once

#include <cstdint>
#include <string>

#include "sombor/graph.hpp"

namespace sombor {

/// Exhaustive relabeling canonicalization is capped here; above this the
/// factorial search is refused with an explicit error.
inline constexpr int kCanonicalVertexCap = 10;

/// Which extreme of the relabeled adjacency encodings defines the
/// canonical representative. lex_min is the default everywhere; lex_max
/// exists as an independent second route for cross-checking counts.
enum class CanonicalOrder { lex_min, lex_max };

/// Canonical form of g: the graph6 string of the relabeling whose packed
/// upper-triangle encoding is extremal over all n! permutations (branch and
/// bound over label prefixes). Identical for isomorphic graphs, distinct
/// otherwise. n <= kCanonicalVertexCap.
std::string canonical_form(const Graph& g, CanonicalOrder order = CanonicalOrder::lex_min);

/// True when g's own labeling already realizes the canonical encoding.
/// This is the dedup test used by exhaustive enumeration.
bool is_canonical_labeling(const Graph& g, CanonicalOrder order = CanonicalOrder::lex_min);

/// Mask-level variant used in enumeration hot loops (n <= 11; triangle bit
/// order as in Graph).
bool is_canonical_triangle_mask(int n, std::uint64_t mask, CanonicalOrder order = CanonicalOrder::lex_min);

}  // namespace sombor
