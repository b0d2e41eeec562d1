#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sombor/canonical.hpp"
#include "sombor/graph.hpp"
#include "sombor/indices.hpp"

namespace sombor {

/// Exhaustive enumeration is capped here (2^21 adjacency masks at n = 7).
inline constexpr int kEnumerationVertexCap = 7;

/// The graph classes the extremal searches range over. Isolated vertices
/// are excluded from every class, so `all` means minimum degree >= 1.
enum class GraphClassKind { all, connected, no_pendant, connected_no_pendant };

struct GraphClass {
    int n = 0;
    GraphClassKind kind = GraphClassKind::all;
};

std::string_view class_kind_name(GraphClassKind k);
std::optional<GraphClassKind> class_kind_from_string(std::string_view s);

/// One representative per isomorphism class, in deterministic order
/// (ascending canonical adjacency mask). Every member satisfies the class
/// predicate and has minimum degree >= 1. The representative's own
/// labeling is canonical. Throws above the enumeration cap.
std::vector<Graph> enumerate_class(const GraphClass& cls,
                                   CanonicalOrder order = CanonicalOrder::lex_min);

/// Class size by an independent scan under the chosen canonicalization
/// order; used to cross-check order independence of the dedup.
std::size_t count_isomorphism_classes(const GraphClass& cls, CanonicalOrder order);

/// Outcome of one brute-force optimization: the optimum and everything
/// attaining it within relative tolerance 1e-9, as canonical graph6.
struct ExtremalReport {
    GraphClass cls;
    IndexSpec index;
    bool maximize = false;
    double optimum = 0.0;
    std::vector<std::string> optimizers;

    struct ClaimCheck {
        std::string claim;  // which extremal characterization was compared
        bool matched = false;
    };
    std::optional<ClaimCheck> theorem;
};

/// Brute-force optimum of an index over a class. When `assert_theorem` is
/// set, the parameters must fall under one of the proved extremal
/// characterizations and the optimizer set is compared against it.
ExtremalReport optimize(const GraphClass& cls, const IndexSpec& index, bool maximize,
                        bool assert_theorem = false);

/// Counterexample slot for the edge-addition monotonicity sweep.
struct MonotonicityResult {
    bool holds = true;
    std::string graph6;  // set on failure
    int u = -1, v = -1;
    double before = 0.0, after = 0.0;
};

/// Exhaustively verifies that adding any missing edge strictly increases
/// the (possibly reduced) KA index over the whole class. Requires
/// alpha*beta > 0; the reduced kernel with alpha < 0 additionally requires
/// a pendant-free class. Hypothesis violations throw.
MonotonicityResult verify_edge_monotonicity(const GraphClass& cls, double alpha, double beta,
                                            bool reduced);

enum class ClaimStatus { confirmed, refuted, not_applicable };
std::string_view claim_status_name(ClaimStatus s);

struct ExtremalClaim {
    std::string id;
    ClaimStatus status = ClaimStatus::not_applicable;
    std::string details;
};

/// Brute-force confirmation of the extremal characterizations at one
/// (n, alpha, beta) point: complete-graph maximizers, tree/matching
/// minimizers, and the cycle-union minimizers of the reduced kernel on
/// pendant-free classes. Claims outside the parameter hypotheses come back
/// not_applicable.
struct ExtremalVerdict {
    int n = 0;
    double alpha = 0.0, beta = 0.0;
    std::vector<ExtremalClaim> claims;

    bool all_confirmed() const;  // no claim refuted
};

ExtremalVerdict verify_extremal_theorems(int n, double alpha, double beta);

/// The predicted minimizer of KA over all order-n graphs: n/2 copies of a
/// single edge for even n, else (n-3)/2 copies plus one two-edge path.
Graph matching_or_near_matching(int n);

/// All disjoint unions of cycles on n vertices, up to isomorphism
/// (partitions of n into parts >= 3), as canonical graph6 strings.
std::vector<std::string> cycle_union_forms(int n);

}  // namespace sombor
