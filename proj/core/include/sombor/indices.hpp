#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sombor/graph.hpp"

namespace sombor {

/// The index families computed here. Everything in the first group is a
/// specialization of the two-parameter edge kernel
///     sum over edges of (d_u^alpha + d_v^alpha)^beta
/// (or its reduced form with every degree shifted by -1); the second group
/// sums a power of the degree over vertices; ISI stands alone.
enum class IndexFamily {
    KA,               // (alpha, beta) edge kernel
    KA_reduced,       // same with d-1 in place of d
    SumConnectivity,  // KA(1, beta)
    SO,               // KA(2, 1/2)
    SO_red,           // reduced KA(2, 1/2)
    mSO,              // KA(2, -1/2)
    BSO,              // KA(-2, 1/2)
    SO_alpha,         // KA(alpha, 1/alpha)
    M1,               // sum of squared degrees
    M1_var,           // sum of degrees to the alpha
    Forgotten,        // sum of cubed degrees
    ISI,              // sum of d_u d_v / (d_u + d_v)
};

/// A named index family plus the real parameters it takes.
struct IndexSpec {
    IndexFamily family = IndexFamily::SO;
    double alpha = 0.0;
    double beta = 0.0;

    std::string name() const;

    /// "KA", "KAred", "chi", "SO", "SOred", "mSO", "BSO", "SOalpha", "M1",
    /// "M1var", "F", "ISI" (case-sensitive).
    static std::optional<IndexFamily> family_from_string(std::string_view s);

    bool uses_alpha() const;
    bool uses_beta() const;
};

/// Scalar value plus, on request, the per-edge (or per-vertex)
/// contributions for diagnostics.
struct IndexValue {
    double value = 0.0;
    std::vector<double> terms;  // empty unless requested
};

/// The general edge kernel. Rejects graphs with isolated vertices.
double ka_index(const Graph& g, double alpha, double beta);

/// Reduced kernel: every degree replaced by d-1. With alpha < 0 a pendant
/// vertex makes the term undefined, so those graphs are rejected naming the
/// vertex; alpha == 0 is rejected outright (0^0 at pendants). With
/// alpha > 0, (d-1)^alpha is 0 at d == 1.
double reduced_ka_index(const Graph& g, double alpha, double beta);

/// Sum over vertices of d^alpha. Isolated vertices are rejected when
/// alpha <= 0; for alpha > 0 they contribute 0.
double vertex_power_sum(const Graph& g, double alpha);

double first_zagreb(const Graph& g);    // vertex_power_sum(2)
double forgotten_index(const Graph& g); // vertex_power_sum(3)

/// Inverse sum indeg: sum over edges of d_u d_v / (d_u + d_v).
double inverse_sum_indeg(const Graph& g);

/// Dispatch through the family table above.
double evaluate_index(const Graph& g, const IndexSpec& spec);
IndexValue evaluate_index_detailed(const Graph& g, const IndexSpec& spec);

/// The kernel parameters an edge-kernel family dispatches to, or nullopt
/// for the vertex families and ISI.
struct KernelView {
    bool reduced = false;
    double alpha = 0.0;
    double beta = 0.0;
};
std::optional<KernelView> kernel_view(const IndexSpec& spec);

/// Both sides of the edge/vertex power-sum identity: the edge sum of
/// d_u^alpha + d_v^alpha and the vertex sum of d^(alpha+1). Used as a
/// cross-module consistency probe; the two must agree.
std::pair<double, double> edge_sum_identity(const Graph& g, double alpha);

/// d^alpha for integer d >= 0. d == 1 short-circuits to 1 and integer
/// exponents 1..3 are multiplied out; everything else goes through pow.
double degree_power(int d, double alpha);

}  // namespace sombor
