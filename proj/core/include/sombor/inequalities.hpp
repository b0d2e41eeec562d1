#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sombor/graph.hpp"
#include "sombor/indices.hpp"

namespace sombor {

/// The thirteen entries of the inequality catalog. Each checker documents
/// its case numbering; every displayed bound maps to one (theorem, case).
enum class TheoremId {
    ka_power_chain,               // KA(ab/l, l) vs KA(a, b) chain, four parameter regimes
    reduced_ka_power_chain,       // same chain for the reduced kernel
    so_alpha_chain,               // SO_mu vs SO_alpha chain
    so_alpha_vs_zagreb,           // SO_alpha against the first Zagreb index
    modified_sombor_vs_banhatti,  // mSO <= BSO / 2
    ka_vs_variable_zagreb,        // KA lower bound from the variable Zagreb sum
    sombor_vs_forgotten,          // SO >= (F + 2*Dmax*Dmin*m) / (sqrt2 (Dmax+Dmin))
    holder_product_chain,         // KA^p between Holder product bounds
    holder_edge_count_bound,      // KA(a,-p mu) KA(a, p mu/(p-1))^(p-1) >= m^p
    sombor_product_bounds,        // m^2 <= mSO*SO <= (Dmax+Dmin)^2 m^2 / (4 Dmax Dmin)
    so_alpha_zagreb_sharp,        // SO_alpha <= M1 - (2 - 2^(1/a)) * dmin (two variants)
    sombor_zagreb_sharp,          // the alpha = 2 instance of the sharp bound
    sombor_zagreb_isi,            // sqrt2 (M1 - 2 ISI) >= SO > M1 - 2 ISI
};

inline constexpr std::array<TheoremId, 13> kTheoremCatalog = {
    TheoremId::ka_power_chain,        TheoremId::reduced_ka_power_chain,
    TheoremId::so_alpha_chain,        TheoremId::so_alpha_vs_zagreb,
    TheoremId::modified_sombor_vs_banhatti, TheoremId::ka_vs_variable_zagreb,
    TheoremId::sombor_vs_forgotten,   TheoremId::holder_product_chain,
    TheoremId::holder_edge_count_bound, TheoremId::sombor_product_bounds,
    TheoremId::so_alpha_zagreb_sharp, TheoremId::sombor_zagreb_sharp,
    TheoremId::sombor_zagreb_isi,
};

std::string_view theorem_name(TheoremId id);
std::optional<TheoremId> theorem_from_string(std::string_view s);

enum class Verdict { holds_strict, tight, violated, hypothesis_unmet };
std::string_view verdict_name(Verdict v);

/// Parameter slots a checker may consume. Absent slots stay empty.
struct CheckParams {
    std::optional<double> alpha, beta, lambda, mu, p;
};

/// Relative tolerance for tightness and violation thresholds, scaled by
/// max(|lhs|, |rhs|). Exact-zero pairs compare tight.
inline constexpr double kCheckTolerance = 1e-9;

/// One inequality line evaluated on one graph at one parameter point.
/// Lines are oriented as lhs <= rhs (or lhs < rhs when strict), so
/// slack = rhs - lhs and slack >= 0 means the bound holds.
struct CheckResult {
    TheoremId theorem{};
    int case_index = -1;  // -1 marks a hypothesis_unmet row covering the whole call
    CheckParams params;
    double lhs = 0.0, rhs = 0.0, slack = 0.0;
    Verdict verdict = Verdict::hypothesis_unmet;
    bool strict = false;  // printed with < : verdict is holds_strict or violated only
    std::optional<bool> tightness_predicted;  // structural characterization, when stated
    bool tightness_iff = false;               // the characterization is claimed both ways
    std::optional<bool> tightness_observed;   // |slack| within tolerance
    std::string note;
};

// --- checkers ---------------------------------------------------------
//
// Each returns the rows for the displayed bounds that apply at the given
// parameter point; out-of-hypothesis points yield a single
// hypothesis_unmet row. Graphs with isolated vertices always yield
// hypothesis_unmet (the catalog assumes minimum degree >= 1).

/// Chain between KA(a,b) and KA(ab/l, l).
/// Cases: 0: KA(ab/l,l) < KA(a,b)     (b > l, bl > 0, strict)
///        1: KA(a,b) <= 2^(b-l) KA(ab/l,l)   (same regime; tight iff regular components)
///        2: 2^(b-l) KA(ab/l,l) <= KA(a,b)   (b < l, bl > 0; tight iff r.c.)
///        3: KA(a,b) < KA(ab/l,l)            (same regime, strict)
///        4: KA(a,b) <= 2^(b-l) KA(ab/l,l)   (b < 0 < l; tight iff r.c.)
///        5: 2^(b-l) KA(ab/l,l) <= KA(a,b)   (l < 0 < b; tight iff r.c.)
std::vector<CheckResult> check_ka_power_chain(const Graph& g, double alpha, double beta, double lambda);

/// Same chain for the reduced kernel. Additionally requires a pendant-free
/// graph whenever alpha < 0 or alpha*beta*lambda < 0.
std::vector<CheckResult> check_reduced_ka_power_chain(const Graph& g, double alpha, double beta,
                                                      double lambda);

/// SO_mu vs SO_alpha chain (cases 0..4, mirroring the KA chain with
/// exponents 1/alpha, 1/mu; the alpha > 0 > mu corner has no displayed
/// bound and reports hypothesis_unmet).
std::vector<CheckResult> check_so_alpha_chain(const Graph& g, double alpha, double mu);

/// SO_alpha against M1.
/// Cases: 0: M1 < SO_a (0<a<1), 1: SO_a <= 2^(1/a-1) M1 (0<a<1),
///        2: 2^(1/a-1) M1 <= SO_a (a>1), 3: SO_a < M1 (a>1),
///        4: SO_a <= 2^(1/a-1) M1 (a<0). Non-strict lines tight iff r.c.
std::vector<CheckResult> check_so_alpha_vs_zagreb(const Graph& g, double alpha);

/// Case 0: mSO <= BSO/2, tight iff regular components.
CheckResult check_modified_sombor_vs_banhatti(const Graph& g);

/// Lower bound for KA(a,b) from the variable Zagreb sum, b > 0.
/// With B = (vertex_power_sum(a+1) + 2 Dmax^(a/2) Dmin^(a/2) m)
///          / (sqrt2 (Dmax^(a/2) + Dmin^(a/2))):
/// case 0 (0 < b < 1/2): B^(2b) <= KA(a,b)            (no tightness claim)
/// case 1 (b >= 1/2):    B^(2b) m^(1-2b) <= KA(a,b)   (tight iff regular)
CheckResult check_ka_vs_variable_zagreb(const Graph& g, double alpha, double beta);

/// Case 0: (F + 2 Dmax Dmin m)/(sqrt2 (Dmax+Dmin)) <= SO, tight iff regular.
CheckResult check_sombor_vs_forgotten(const Graph& g);

/// The reversed-Holder constant C_p(a,b) for ratio-bounded weight vectors,
/// p > 1, 0 < a <= b; C_p(a,a) = 1.
double holder_constant(double p, double a, double b);

/// Holder product chain for KA(a,b)^p, p > 1.
/// case 0: KA(a,b)^p <= KA(a,p(b-mu)) KA(a,p mu/(p-1))^(p-1)
///         (tight if biregular; sufficient condition only)
/// case 1: D^p KA(a,p(b-mu)) KA(a,p mu/(p-1))^(p-1) <= KA(a,b)^p
///         (tight iff regular, asserted when a(b - mu p/(p-1)) != 0)
std::vector<CheckResult> check_holder_product_chain(const Graph& g, double alpha, double beta,
                                                    double mu, double p);

/// Case 0: m^p <= KA(a,-p mu) KA(a,p mu/(p-1))^(p-1) (tight if biregular).
CheckResult check_holder_edge_count_bound(const Graph& g, double alpha, double mu, double p);

/// case 0: m^2 <= mSO * SO (tight if biregular)
/// case 1: mSO * SO <= (Dmax+Dmin)^2 m^2 / (4 Dmax Dmin) (tight iff regular)
std::vector<CheckResult> check_sombor_product_bounds(const Graph& g);

/// Scalar bound (x^a + y^a)^(1/a) <= x + (2^(1/a) - 1) y for x >= y >= 0,
/// a >= 1; returns (lhs, rhs). Equality iff y == 0, y == x, or a == 1.
std::pair<double, double> power_sum_linear_bound(double x, double y, double alpha);

/// Sharp upper bound for SO_alpha against M1, alpha >= 1, plus the matching
/// lower bound.
/// case 0: 2^(1/a-1) M1 <= SO_a          (tight iff regular components, a > 1)
/// case 1: SO_a <= M1 - (2 - 2^(1/a)) Dmin        (as printed; no claim asserted)
/// case 2: SO_a <= M1 - (2 - 2^(1/a)) Dmin m      (per-edge form; tight iff regular, a > 1)
/// per_edge_variant selects case 1 (false) or case 2 (true); the lower
/// bound is reported either way.
std::vector<CheckResult> check_so_alpha_zagreb_sharp(const Graph& g, double alpha,
                                                     bool per_edge_variant);

/// The alpha = 2 instance of the sharp bound, same case numbering.
std::vector<CheckResult> check_sombor_zagreb_sharp(const Graph& g, bool per_edge_variant);

/// case 0: SO <= sqrt2 (M1 - 2 ISI) (tight iff regular components)
/// case 1: M1 - 2 ISI < SO (strict)
std::vector<CheckResult> check_sombor_isi_bounds(const Graph& g);

// --- the sweep --------------------------------------------------------

/// Value lists per parameter symbol; the suite forms the per-theorem
/// cartesian products.
struct ParameterGrid {
    std::vector<double> alpha, beta, lambda, mu, p;

    /// Default grid: at least two points in every sign regime of every
    /// catalog entry.
    static ParameterGrid defaults();
};

struct SuiteRow {
    int graph_index = 0;
    std::string graph6;
    CheckResult result;
};

struct SuiteOptions {
    int threads = 0;               // 0: SOMBOR_THREADS env or hardware default
    bool corrupt_checker = false;  // test fixture: flips one bound's orientation
};

struct SuiteReport {
    std::vector<SuiteRow> rows;
    std::size_t graphs = 0;
    std::size_t count(Verdict v) const;
    std::size_t count(TheoremId id, Verdict v) const;
};

/// Every catalog entry on every corpus graph over the per-theorem grid
/// products, in deterministic (graph, theorem, parameter) order regardless
/// of the worker count.
SuiteReport run_suite(std::span<const Graph> corpus, const ParameterGrid& grid,
                      const SuiteOptions& options = {});

/// Worker count resolution: explicit value, else SOMBOR_THREADS, else
/// hardware concurrency.
int resolve_thread_count(int requested);

}  // namespace sombor
