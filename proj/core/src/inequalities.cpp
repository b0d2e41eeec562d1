#include "sombor/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sombor {

std::string_view theorem_name(TheoremId id) {
    switch (id) {
        case TheoremId::ka_power_chain: return "ka_power_chain";
        case TheoremId::reduced_ka_power_chain: return "reduced_ka_power_chain";
        case TheoremId::so_alpha_chain: return "so_alpha_chain";
        case TheoremId::so_alpha_vs_zagreb: return "so_alpha_vs_zagreb";
        case TheoremId::modified_sombor_vs_banhatti: return "modified_sombor_vs_banhatti";
        case TheoremId::ka_vs_variable_zagreb: return "ka_vs_variable_zagreb";
        case TheoremId::sombor_vs_forgotten: return "sombor_vs_forgotten";
        case TheoremId::holder_product_chain: return "holder_product_chain";
        case TheoremId::holder_edge_count_bound: return "holder_edge_count_bound";
        case TheoremId::sombor_product_bounds: return "sombor_product_bounds";
        case TheoremId::so_alpha_zagreb_sharp: return "so_alpha_zagreb_sharp";
        case TheoremId::sombor_zagreb_sharp: return "sombor_zagreb_sharp";
        case TheoremId::sombor_zagreb_isi: return "sombor_zagreb_isi";
    }
    return "?";
}

std::optional<TheoremId> theorem_from_string(std::string_view s) {
    for (TheoremId id : kTheoremCatalog)
        if (theorem_name(id) == s) return id;
    return std::nullopt;
}

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::holds_strict: return "holds_strict";
        case Verdict::tight: return "tight";
        case Verdict::violated: return "violated";
        case Verdict::hypothesis_unmet: return "hypothesis_unmet";
    }
    return "?";
}

namespace {

bool finite(double x) { return std::isfinite(x); }

/// Shared row assembly: orientation lhs <= rhs, slack = rhs - lhs,
/// verdicts per the relative tolerance. Non-finite sides mean the quantity
/// is undefined at this point, which counts as an unmet hypothesis.
struct Lines {
    TheoremId id;
    CheckParams params;

    CheckResult unmet(std::string note, int case_index = -1) const {
        CheckResult r;
        r.theorem = id;
        r.case_index = case_index;
        r.params = params;
        r.verdict = Verdict::hypothesis_unmet;
        r.lhs = r.rhs = r.slack = std::numeric_limits<double>::quiet_NaN();
        r.note = std::move(note);
        return r;
    }

    CheckResult line(int case_index, double lhs, double rhs, bool strict,
                     std::optional<bool> predicted, bool iff_claim, std::string note = "") const {
        if (!finite(lhs) || !finite(rhs)) {
            CheckResult r = unmet("non-finite index value at this parameter point", case_index);
            r.note += note.empty() ? "" : ("; " + note);
            return r;
        }
        CheckResult r;
        r.theorem = id;
        r.case_index = case_index;
        r.params = params;
        r.lhs = lhs;
        r.rhs = rhs;
        r.slack = rhs - lhs;
        r.strict = strict;
        r.note = std::move(note);
        // purely relative scale: an absolute floor would declare any bound
        // with sub-tolerance index values "tight" no matter how loose it is
        // (large negative exponents push edge sums down to 1e-10 and below)
        const double scale = std::max(std::fabs(lhs), std::fabs(rhs));
        const double tol = kCheckTolerance * scale;
        if (r.slack < -tol) {
            r.verdict = Verdict::violated;
        } else if (strict) {
            r.verdict = Verdict::holds_strict;
        } else {
            const bool tight = std::fabs(r.slack) <= tol;
            r.verdict = tight ? Verdict::tight : Verdict::holds_strict;
        }
        if (!strict) {
            r.tightness_observed = std::fabs(r.slack) <= tol;
            r.tightness_predicted = predicted;
            r.tightness_iff = iff_claim;
        }
        return r;
    }
};

CheckParams params_abl(double a, double b, double l) {
    CheckParams p;
    p.alpha = a;
    p.beta = b;
    p.lambda = l;
    return p;
}

bool nonzero_finite(double x) { return finite(x) && x != 0.0; }

// Shared body of the two power chains; `reduced` toggles the kernel.
std::vector<CheckResult> power_chain(TheoremId id, const Graph& g, double a, double b, double l,
                                     bool reduced) {
    Lines L{id, params_abl(a, b, l)};
    if (!nonzero_finite(a) || !nonzero_finite(b) || !nonzero_finite(l))
        return {L.unmet("alpha, beta, lambda must be nonzero and finite")};
    if (b == l) return {L.unmet("beta = lambda excluded: the two sides coincide identically")};
    if (has_isolated_vertex(g)) return {L.unmet("graph has an isolated vertex")};

    const StructuralPredicates pred = predicates(g);
    if (reduced && (a < 0.0 || a * b * l < 0.0) && pred.has_pendant)
        return {L.unmet("pendant vertices present; this parameter sign pattern requires none")};

    const double companion_alpha = a * b / l;
    const double k_companion =
        reduced ? reduced_ka_index(g, companion_alpha, l) : ka_index(g, companion_alpha, l);
    const double k_main = reduced ? reduced_ka_index(g, a, b) : ka_index(g, a, b);
    const double capped = std::exp2(b - l) * k_companion;
    const bool rc = pred.has_regular_components;

    std::vector<CheckResult> out;
    if (b * l > 0.0) {
        if (b > l) {
            out.push_back(L.line(0, k_companion, k_main, true, std::nullopt, false));
            out.push_back(L.line(1, k_main, capped, false, rc, true));
        } else {
            out.push_back(L.line(2, capped, k_main, false, rc, true));
            out.push_back(L.line(3, k_main, k_companion, true, std::nullopt, false));
        }
    } else if (b < 0.0) {  // b < 0 < l
        out.push_back(L.line(4, k_main, capped, false, rc, true));
    } else {  // l < 0 < b
        out.push_back(L.line(5, capped, k_main, false, rc, true));
    }
    return out;
}

}  // namespace

std::vector<CheckResult> check_ka_power_chain(const Graph& g, double alpha, double beta, double lambda) {
    return power_chain(TheoremId::ka_power_chain, g, alpha, beta, lambda, false);
}

std::vector<CheckResult> check_reduced_ka_power_chain(const Graph& g, double alpha, double beta,
                                                      double lambda) {
    return power_chain(TheoremId::reduced_ka_power_chain, g, alpha, beta, lambda, true);
}

std::vector<CheckResult> check_so_alpha_chain(const Graph& g, double alpha, double mu) {
    Lines L{TheoremId::so_alpha_chain, {}};
    L.params.alpha = alpha;
    L.params.mu = mu;
    if (!nonzero_finite(alpha) || !nonzero_finite(mu))
        return {L.unmet("alpha, mu must be nonzero and finite")};
    if (alpha == mu) return {L.unmet("alpha = mu excluded: the two sides coincide identically")};
    if (has_isolated_vertex(g)) return {L.unmet("graph has an isolated vertex")};
    if (alpha > 0.0 && mu < 0.0) return {L.unmet("no displayed bound covers alpha > 0 > mu")};

    const bool rc = predicates(g).has_regular_components;
    const double s_alpha = ka_index(g, alpha, 1.0 / alpha);
    const double s_mu = ka_index(g, mu, 1.0 / mu);
    const double capped = std::exp2(1.0 / alpha - 1.0 / mu) * s_mu;

    std::vector<CheckResult> out;
    if (alpha * mu > 0.0) {
        if (mu > alpha) {
            out.push_back(L.line(0, s_mu, s_alpha, true, std::nullopt, false));
            out.push_back(L.line(1, s_alpha, capped, false, rc, true));
        } else {
            out.push_back(L.line(2, capped, s_alpha, false, rc, true));
            out.push_back(L.line(3, s_alpha, s_mu, true, std::nullopt, false));
        }
    } else {  // alpha < 0 < mu
        out.push_back(L.line(4, s_alpha, capped, false, rc, true));
    }
    return out;
}

std::vector<CheckResult> check_so_alpha_vs_zagreb(const Graph& g, double alpha) {
    Lines L{TheoremId::so_alpha_vs_zagreb, {}};
    L.params.alpha = alpha;
    if (!nonzero_finite(alpha) || alpha == 1.0)
        return {L.unmet("alpha must be finite and outside {0, 1}")};
    if (has_isolated_vertex(g)) return {L.unmet("graph has an isolated vertex")};

    const bool rc = predicates(g).has_regular_components;
    const double s_alpha = ka_index(g, alpha, 1.0 / alpha);
    const double m1 = first_zagreb(g);
    const double capped = std::exp2(1.0 / alpha - 1.0) * m1;

    std::vector<CheckResult> out;
    if (alpha > 0.0 && alpha < 1.0) {
        out.push_back(L.line(0, m1, s_alpha, true, std::nullopt, false));
        out.push_back(L.line(1, s_alpha, capped, false, rc, true));
    } else if (alpha > 1.0) {
        out.push_back(L.line(2, capped, s_alpha, false, rc, true));
        out.push_back(L.line(3, s_alpha, m1, true, std::nullopt, false));
    } else {  // alpha < 0
        out.push_back(L.line(4, s_alpha, capped, false, rc, true));
    }
    return out;
}

CheckResult check_modified_sombor_vs_banhatti(const Graph& g) {
    Lines L{TheoremId::modified_sombor_vs_banhatti, {}};
    if (has_isolated_vertex(g)) return L.unmet("graph has an isolated vertex");
    const bool rc = predicates(g).has_regular_components;
    const double mso = ka_index(g, 2.0, -0.5);
    const double bso = ka_index(g, -2.0, 0.5);
    return L.line(0, mso, 0.5 * bso, false, rc, true);
}

CheckResult check_ka_vs_variable_zagreb(const Graph& g, double alpha, double beta) {
    Lines L{TheoremId::ka_vs_variable_zagreb, {}};
    L.params.alpha = alpha;
    L.params.beta = beta;
    if (!nonzero_finite(alpha)) return L.unmet("alpha must be nonzero and finite");
    if (!finite(beta) || beta <= 0.0) return L.unmet("beta must be positive");
    if (has_isolated_vertex(g)) return L.unmet("graph has an isolated vertex");

    const DegreeStats st = degree_stats(g);
    const double hi = degree_power(st.delta_max, alpha / 2.0);
    const double lo = degree_power(st.delta_min, alpha / 2.0);
    const double base =
        (vertex_power_sum(g, alpha + 1.0) + 2.0 * hi * lo * st.m) / (std::sqrt(2.0) * (hi + lo));
    const double value = ka_index(g, alpha, beta);

    if (beta < 0.5)
        return L.line(0, std::pow(base, 2.0 * beta), value, false, std::nullopt, false);
    const StructuralPredicates pred = predicates(g);
    const double bound = std::pow(base, 2.0 * beta) * std::pow(static_cast<double>(st.m), 1.0 - 2.0 * beta);
    // at beta = 1/2 the edge-count factor degenerates and regularity is only
    // sufficient on disconnected graphs: components regular at the extreme
    // degrees (e.g. a triangle plus one edge) also attain equality
    const bool both_ways = beta > 0.5 || pred.is_connected;
    return L.line(1, bound, value, false, pred.is_regular, both_ways,
                  both_ways ? "" : "equality characterized only for connected graphs here");
}

CheckResult check_sombor_vs_forgotten(const Graph& g) {
    Lines L{TheoremId::sombor_vs_forgotten, {}};
    if (has_isolated_vertex(g)) return L.unmet("graph has an isolated vertex");
    const DegreeStats st = degree_stats(g);
    const StructuralPredicates pred = predicates(g);
    const double bound = (forgotten_index(g) + 2.0 * st.delta_max * st.delta_min * st.m) /
                         (std::sqrt(2.0) * (st.delta_max + st.delta_min));
    // this is the square-root instance of the variable-Zagreb bound, so the
    // same connectedness caveat applies to the equality characterization
    return L.line(0, bound, ka_index(g, 2.0, 0.5), false, pred.is_regular, pred.is_connected,
                  pred.is_connected ? "" : "equality characterized only for connected graphs here");
}

double holder_constant(double p, double a, double b) {
    if (!finite(p) || p <= 1.0) throw DomainError("holder_constant: p must be finite and > 1");
    if (!finite(a) || !finite(b) || a <= 0.0 || a > b)
        throw DomainError("holder_constant: need 0 < a <= b");
    const double q = p / (p - 1.0);
    if (p < 2.0)
        return (1.0 / p) * std::pow(a / b, 1.0 / (2.0 * q)) + (1.0 / q) * std::pow(b / a, 1.0 / (2.0 * p));
    return (1.0 / p) * std::pow(b / a, 1.0 / (2.0 * q)) + (1.0 / q) * std::pow(a / b, 1.0 / (2.0 * p));
}

std::vector<CheckResult> check_holder_product_chain(const Graph& g, double alpha, double beta,
                                                    double mu, double p) {
    Lines L{TheoremId::holder_product_chain, {}};
    L.params.alpha = alpha;
    L.params.beta = beta;
    L.params.mu = mu;
    L.params.p = p;
    if (!finite(alpha) || !finite(beta) || !finite(mu))
        return {L.unmet("alpha, beta, mu must be finite")};
    if (!finite(p) || p <= 1.0) return {L.unmet("p must be finite and > 1")};
    if (has_isolated_vertex(g)) return {L.unmet("graph has an isolated vertex")};

    const StructuralPredicates pred = predicates(g);
    const double k_main = ka_index(g, alpha, beta);
    const double k_left = ka_index(g, alpha, p * (beta - mu));
    const double k_right = ka_index(g, alpha, p * mu / (p - 1.0));
    const double product = k_left * std::pow(k_right, p - 1.0);
    const double main_p = std::pow(k_main, p);

    std::vector<CheckResult> out;
    out.push_back(L.line(0, main_p, product, false, pred.is_biregular, false));

    const DegreeStats st = degree_stats(g);
    const double t = beta - mu * p / (p - 1.0);
    const double at_min = std::pow(2.0 * degree_power(st.delta_min, alpha), p * t);
    const double at_max = std::pow(2.0 * degree_power(st.delta_max, alpha), p * t);
    const double factor = alpha * t >= 0.0 ? 1.0 / holder_constant(p, at_min, at_max)
                                           : 1.0 / holder_constant(p, at_max, at_min);
    const bool characterized = alpha * t != 0.0;
    // regularity is equivalent to equality only on connected graphs: a
    // disconnected graph whose edge ratios split between the two extremes
    // in balanced proportion (a square plus one edge, say) also attains the
    // reversed-Holder bound exactly
    const bool both_ways = characterized && pred.is_connected;
    out.push_back(L.line(1, std::pow(factor, p) * product, main_p, false,
                         characterized ? std::optional<bool>(pred.is_regular) : std::nullopt,
                         both_ways,
                         characterized && !both_ways
                             ? "equality characterized only for connected graphs here"
                             : ""));
    return out;
}

CheckResult check_holder_edge_count_bound(const Graph& g, double alpha, double mu, double p) {
    Lines L{TheoremId::holder_edge_count_bound, {}};
    L.params.alpha = alpha;
    L.params.mu = mu;
    L.params.p = p;
    if (!finite(alpha) || !finite(mu)) return L.unmet("alpha, mu must be finite");
    if (!finite(p) || p <= 1.0) return L.unmet("p must be finite and > 1");
    if (has_isolated_vertex(g)) return L.unmet("graph has an isolated vertex");

    const double product =
        ka_index(g, alpha, -p * mu) * std::pow(ka_index(g, alpha, p * mu / (p - 1.0)), p - 1.0);
    const double edges_p = std::pow(static_cast<double>(g.edge_count()), p);
    return L.line(0, edges_p, product, false, predicates(g).is_biregular, false);
}

std::vector<CheckResult> check_sombor_product_bounds(const Graph& g) {
    Lines L{TheoremId::sombor_product_bounds, {}};
    if (has_isolated_vertex(g)) return {L.unmet("graph has an isolated vertex")};
    const StructuralPredicates pred = predicates(g);
    const DegreeStats st = degree_stats(g);
    const double product = ka_index(g, 2.0, -0.5) * ka_index(g, 2.0, 0.5);
    const double m2 = static_cast<double>(st.m) * st.m;
    const double coeff = static_cast<double>(st.delta_max + st.delta_min) *
                         (st.delta_max + st.delta_min) /
                         (4.0 * st.delta_max * st.delta_min);
    std::vector<CheckResult> out;
    out.push_back(L.line(0, m2, product, false, pred.is_biregular, false));
    // same connectedness caveat as the reversed-Holder lower bound: a
    // disconnected union with equally many edges at the extreme degree
    // pairs attains the upper bound without being regular
    out.push_back(L.line(1, product, coeff * m2, false, pred.is_regular, pred.is_connected,
                         pred.is_connected ? ""
                                           : "equality characterized only for connected graphs here"));
    return out;
}

std::pair<double, double> power_sum_linear_bound(double x, double y, double alpha) {
    if (!finite(x) || !finite(y) || x < y || y < 0.0)
        throw DomainError("power_sum_linear_bound: need x >= y >= 0 (order the arguments)");
    if (!finite(alpha) || alpha < 1.0) throw DomainError("power_sum_linear_bound: need alpha >= 1");
    const double lhs = std::pow(std::pow(x, alpha) + std::pow(y, alpha), 1.0 / alpha);
    const double rhs = x + (std::exp2(1.0 / alpha) - 1.0) * y;
    return {lhs, rhs};
}

namespace {

std::vector<CheckResult> sharp_zagreb_bounds(TheoremId id, const Graph& g, double alpha,
                                             bool per_edge_variant, bool record_alpha) {
    Lines L{id, {}};
    if (record_alpha) L.params.alpha = alpha;
    if (!finite(alpha) || alpha < 1.0) return {L.unmet("alpha must be finite and >= 1")};
    if (has_isolated_vertex(g)) return {L.unmet("graph has an isolated vertex")};

    const StructuralPredicates pred = predicates(g);
    const DegreeStats st = degree_stats(g);
    const double s_alpha = ka_index(g, alpha, 1.0 / alpha);
    const double m1 = first_zagreb(g);
    const double shave = 2.0 - std::exp2(1.0 / alpha);
    // the characterizations are stated for alpha > 1 only; at alpha = 1 both
    // bounds collapse to equalities for every graph
    const bool characterized = alpha > 1.0;

    std::vector<CheckResult> out;
    out.push_back(L.line(0, std::exp2(1.0 / alpha - 1.0) * m1, s_alpha, false,
                         characterized ? std::optional<bool>(pred.has_regular_components)
                                       : std::nullopt,
                         characterized));
    if (!per_edge_variant) {
        out.push_back(L.line(1, s_alpha, m1 - shave * st.delta_min, false, std::nullopt, false,
                             "single-subtraction form; no tightness assertion"));
    } else {
        out.push_back(L.line(2, s_alpha, m1 - shave * st.delta_min * st.m, false,
                             characterized ? std::optional<bool>(pred.is_regular) : std::nullopt,
                             characterized));
    }
    return out;
}

}  // namespace

std::vector<CheckResult> check_so_alpha_zagreb_sharp(const Graph& g, double alpha,
                                                     bool per_edge_variant) {
    return sharp_zagreb_bounds(TheoremId::so_alpha_zagreb_sharp, g, alpha, per_edge_variant, true);
}

std::vector<CheckResult> check_sombor_zagreb_sharp(const Graph& g, bool per_edge_variant) {
    return sharp_zagreb_bounds(TheoremId::sombor_zagreb_sharp, g, 2.0, per_edge_variant, false);
}

std::vector<CheckResult> check_sombor_isi_bounds(const Graph& g) {
    Lines L{TheoremId::sombor_zagreb_isi, {}};
    static const std::string kNote =
        "an 'alpha >= 1' hypothesis is extraneous here (alpha does not occur) and is ignored";
    if (has_isolated_vertex(g)) return {L.unmet("graph has an isolated vertex")};
    const bool rc = predicates(g).has_regular_components;
    const double so = ka_index(g, 2.0, 0.5);
    const double gap = first_zagreb(g) - 2.0 * inverse_sum_indeg(g);
    std::vector<CheckResult> out;
    out.push_back(L.line(0, so, std::sqrt(2.0) * gap, false, rc, true, kNote));
    out.push_back(L.line(1, gap, so, true, std::nullopt, false, kNote));
    return out;
}

}  // namespace sombor
