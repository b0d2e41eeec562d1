#include "sombor/indices.hpp"

#include <cmath>

namespace sombor {

namespace {

void require_no_isolated(const Graph& g, const char* what) {
    const auto& deg = g.degrees();
    for (std::size_t v = 0; v < deg.size(); ++v)
        if (deg[v] == 0)
            throw DomainError(std::string(what) + ": vertex " + std::to_string(v) + " is isolated");
}

double power(double base, double expo) {
    if (expo == 1.0) return base;
    if (expo == 0.0) return 1.0;
    if (expo == 0.5) return std::sqrt(base);
    if (expo == -0.5) return 1.0 / std::sqrt(base);
    if (expo == -1.0) return 1.0 / base;
    return std::pow(base, expo);
}

template <bool Reduced, typename Sink>
double edge_kernel(const Graph& g, double alpha, double beta, Sink&& sink) {
    const auto& deg = g.degrees();
    double total = 0.0;
    g.for_each_edge([&](int u, int v) {
        const int du = deg[static_cast<std::size_t>(u)] - (Reduced ? 1 : 0);
        const int dv = deg[static_cast<std::size_t>(v)] - (Reduced ? 1 : 0);
        const double term = power(degree_power(du, alpha) + degree_power(dv, alpha), beta);
        total += term;
        sink(term);
    });
    return total;
}

void no_sink(double) {}

}  // namespace

double degree_power(int d, double alpha) {
    if (d == 1) return 1.0;
    if (alpha == 1.0) return static_cast<double>(d);
    if (alpha == 2.0) return static_cast<double>(d) * d;
    if (alpha == 3.0) return static_cast<double>(d) * d * d;
    if (alpha == 0.0) return 1.0;  // callers keep d >= 1 here
    return std::pow(static_cast<double>(d), alpha);
}

double ka_index(const Graph& g, double alpha, double beta) {
    require_no_isolated(g, "ka index");
    return edge_kernel<false>(g, alpha, beta, no_sink);
}

double reduced_ka_index(const Graph& g, double alpha, double beta) {
    require_no_isolated(g, "reduced ka index");
    if (alpha == 0.0) throw DomainError("reduced ka index: alpha = 0 is undefined (0^0 at pendant vertices)");
    if (alpha < 0.0) {
        const auto& deg = g.degrees();
        for (std::size_t v = 0; v < deg.size(); ++v)
            if (deg[v] == 1)
                throw DomainError("reduced ka index: pendant vertex " + std::to_string(v) +
                                  " with alpha < 0");
    }
    return edge_kernel<true>(g, alpha, beta, no_sink);
}

double vertex_power_sum(const Graph& g, double alpha) {
    if (alpha <= 0.0) require_no_isolated(g, "vertex power sum");
    double total = 0.0;
    for (int d : g.degrees()) total += d == 0 ? 0.0 : degree_power(d, alpha);
    return total;
}

double first_zagreb(const Graph& g) { return vertex_power_sum(g, 2.0); }

double forgotten_index(const Graph& g) { return vertex_power_sum(g, 3.0); }

double inverse_sum_indeg(const Graph& g) {
    require_no_isolated(g, "inverse sum indeg");
    const auto& deg = g.degrees();
    double total = 0.0;
    g.for_each_edge([&](int u, int v) {
        const double du = deg[static_cast<std::size_t>(u)];
        const double dv = deg[static_cast<std::size_t>(v)];
        total += du * dv / (du + dv);
    });
    return total;
}

std::pair<double, double> edge_sum_identity(const Graph& g, double alpha) {
    if (alpha + 1.0 <= 0.0) require_no_isolated(g, "edge sum identity");
    const auto& deg = g.degrees();
    double edge_side = 0.0;
    g.for_each_edge([&](int u, int v) {
        edge_side += degree_power(deg[static_cast<std::size_t>(u)], alpha) +
                     degree_power(deg[static_cast<std::size_t>(v)], alpha);
    });
    double vertex_side = 0.0;
    for (int d : deg) vertex_side += d == 0 ? 0.0 : degree_power(d, alpha + 1.0);
    return {edge_side, vertex_side};
}

bool IndexSpec::uses_alpha() const {
    switch (family) {
        case IndexFamily::KA:
        case IndexFamily::KA_reduced:
        case IndexFamily::SO_alpha:
        case IndexFamily::M1_var:
            return true;
        default:
            return false;
    }
}

bool IndexSpec::uses_beta() const {
    switch (family) {
        case IndexFamily::KA:
        case IndexFamily::KA_reduced:
        case IndexFamily::SumConnectivity:
            return true;
        default:
            return false;
    }
}

std::string IndexSpec::name() const {
    switch (family) {
        case IndexFamily::KA: return "KA";
        case IndexFamily::KA_reduced: return "KAred";
        case IndexFamily::SumConnectivity: return "chi";
        case IndexFamily::SO: return "SO";
        case IndexFamily::SO_red: return "SOred";
        case IndexFamily::mSO: return "mSO";
        case IndexFamily::BSO: return "BSO";
        case IndexFamily::SO_alpha: return "SOalpha";
        case IndexFamily::M1: return "M1";
        case IndexFamily::M1_var: return "M1var";
        case IndexFamily::Forgotten: return "F";
        case IndexFamily::ISI: return "ISI";
    }
    return "?";
}

std::optional<IndexFamily> IndexSpec::family_from_string(std::string_view s) {
    if (s == "KA") return IndexFamily::KA;
    if (s == "KAred") return IndexFamily::KA_reduced;
    if (s == "chi") return IndexFamily::SumConnectivity;
    if (s == "SO") return IndexFamily::SO;
    if (s == "SOred") return IndexFamily::SO_red;
    if (s == "mSO") return IndexFamily::mSO;
    if (s == "BSO") return IndexFamily::BSO;
    if (s == "SOalpha") return IndexFamily::SO_alpha;
    if (s == "M1") return IndexFamily::M1;
    if (s == "M1var") return IndexFamily::M1_var;
    if (s == "F") return IndexFamily::Forgotten;
    if (s == "ISI") return IndexFamily::ISI;
    return std::nullopt;
}

// Every Sombor-style family rides the one kernel; keeping the dispatch in a
// single table is what makes the identity properties hold exactly.
std::optional<KernelView> kernel_view(const IndexSpec& spec) {
    switch (spec.family) {
        case IndexFamily::KA: return KernelView{false, spec.alpha, spec.beta};
        case IndexFamily::KA_reduced: return KernelView{true, spec.alpha, spec.beta};
        case IndexFamily::SumConnectivity: return KernelView{false, 1.0, spec.beta};
        case IndexFamily::SO: return KernelView{false, 2.0, 0.5};
        case IndexFamily::SO_red: return KernelView{true, 2.0, 0.5};
        case IndexFamily::mSO: return KernelView{false, 2.0, -0.5};
        case IndexFamily::BSO: return KernelView{false, -2.0, 0.5};
        case IndexFamily::SO_alpha:
            if (spec.alpha == 0.0) throw DomainError("SOalpha requires alpha != 0");
            return KernelView{false, spec.alpha, 1.0 / spec.alpha};
        default: return std::nullopt;
    }
}

double evaluate_index(const Graph& g, const IndexSpec& spec) {
    if (auto kp = kernel_view(spec))
        return kp->reduced ? reduced_ka_index(g, kp->alpha, kp->beta) : ka_index(g, kp->alpha, kp->beta);
    switch (spec.family) {
        case IndexFamily::M1: return first_zagreb(g);
        case IndexFamily::M1_var: return vertex_power_sum(g, spec.alpha);
        case IndexFamily::Forgotten: return forgotten_index(g);
        case IndexFamily::ISI: return inverse_sum_indeg(g);
        default: break;
    }
    throw std::invalid_argument("unknown index family");
}

IndexValue evaluate_index_detailed(const Graph& g, const IndexSpec& spec) {
    IndexValue out;
    if (auto kp = kernel_view(spec)) {
        // run the checked scalar path once for its domain validation
        if (kp->reduced) {
            reduced_ka_index(g, kp->alpha, kp->beta);
            out.value = edge_kernel<true>(g, kp->alpha, kp->beta,
                                          [&](double t) { out.terms.push_back(t); });
        } else {
            ka_index(g, kp->alpha, kp->beta);
            out.value = edge_kernel<false>(g, kp->alpha, kp->beta,
                                           [&](double t) { out.terms.push_back(t); });
        }
        return out;
    }
    if (spec.family == IndexFamily::ISI) {
        const auto& deg = g.degrees();
        require_no_isolated(g, "inverse sum indeg");
        g.for_each_edge([&](int u, int v) {
            const double du = deg[static_cast<std::size_t>(u)];
            const double dv = deg[static_cast<std::size_t>(v)];
            const double t = du * dv / (du + dv);
            out.terms.push_back(t);
            out.value += t;
        });
        return out;
    }
    // vertex families: terms are per-vertex contributions
    const double alpha = spec.family == IndexFamily::M1 ? 2.0
                       : spec.family == IndexFamily::Forgotten ? 3.0
                                                               : spec.alpha;
    vertex_power_sum(g, alpha);  // domain checks
    for (int d : g.degrees()) {
        const double t = d == 0 ? 0.0 : degree_power(d, alpha);
        out.terms.push_back(t);
        out.value += t;
    }
    return out;
}

}  // namespace sombor
