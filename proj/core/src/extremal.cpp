#include "sombor/extremal.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <thread>

#include "sombor/graph_io.hpp"
#include "sombor/inequalities.hpp"

namespace sombor {

std::string_view class_kind_name(GraphClassKind k) {
    switch (k) {
        case GraphClassKind::all: return "all";
        case GraphClassKind::connected: return "connected";
        case GraphClassKind::no_pendant: return "no-pendant";
        case GraphClassKind::connected_no_pendant: return "connected-no-pendant";
    }
    return "?";
}

std::optional<GraphClassKind> class_kind_from_string(std::string_view s) {
    std::string t(s);
    std::replace(t.begin(), t.end(), '_', '-');
    if (t == "all") return GraphClassKind::all;
    if (t == "connected") return GraphClassKind::connected;
    if (t == "no-pendant") return GraphClassKind::no_pendant;
    if (t == "connected-no-pendant") return GraphClassKind::connected_no_pendant;
    return std::nullopt;
}

std::string_view claim_status_name(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::confirmed: return "confirmed";
        case ClaimStatus::refuted: return "refuted";
        case ClaimStatus::not_applicable: return "not_applicable";
    }
    return "?";
}

namespace {

void check_enumeration_cap(int n) {
    if (n < 1) throw std::invalid_argument("enumeration needs n >= 1");
    if (n > kEnumerationVertexCap)
        throw std::invalid_argument("enumeration unsupported beyond n = " +
                                    std::to_string(kEnumerationVertexCap) + " (got n=" +
                                    std::to_string(n) + ")");
}

// One pass over all adjacency masks: keep those with minimum degree >= 1
// whose labeling is canonical under `order`. The mask range is split into
// contiguous chunks scanned in parallel and re-concatenated in chunk order,
// so the result is independent of the worker count.
std::vector<std::uint32_t> scan_canonical_masks(int n, CanonicalOrder order) {
    const int nbits = n * (n - 1) / 2;
    const std::uint64_t total = 1ull << nbits;

    std::array<std::uint32_t, 8> rowmask{};
    {
        int k = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++k) {
                rowmask[static_cast<std::size_t>(i)] |= 1u << k;
                rowmask[static_cast<std::size_t>(j)] |= 1u << k;
            }
    }

    const int threads = std::max(1, std::min<int>(resolve_thread_count(0),
                                                  total > 4096 ? 64 : 1));
    std::vector<std::vector<std::uint32_t>> chunks(static_cast<std::size_t>(threads));
    const auto worker = [&](int w) {
        const std::uint64_t lo = total * static_cast<std::uint64_t>(w) / threads;
        const std::uint64_t hi = total * (static_cast<std::uint64_t>(w) + 1) / threads;
        std::vector<std::uint32_t>& keep = chunks[static_cast<std::size_t>(w)];
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            bool ok = true;
            for (int v = 0; v < n && ok; ++v)
                ok = (mask & rowmask[static_cast<std::size_t>(v)]) != 0;
            if (ok && is_canonical_triangle_mask(n, mask, order))
                keep.push_back(static_cast<std::uint32_t>(mask));
        }
    };
    if (threads <= 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < threads; ++w) pool.emplace_back(worker, w);
        for (std::thread& t : pool) t.join();
    }

    std::vector<std::uint32_t> out;
    for (const auto& c : chunks) out.insert(out.end(), c.begin(), c.end());
    return out;
}

const std::vector<Graph>& base_representatives(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<Graph>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Graph> reps;
    for (std::uint32_t mask : scan_canonical_masks(n, CanonicalOrder::lex_min))
        reps.push_back(Graph::from_triangle_bits(n, mask));
    return cache.emplace(n, std::move(reps)).first->second;
}

bool in_class(const Graph& g, GraphClassKind kind) {
    switch (kind) {
        case GraphClassKind::all: return true;
        case GraphClassKind::connected: return predicates(g).is_connected;
        case GraphClassKind::no_pendant: return !predicates(g).has_pendant;
        case GraphClassKind::connected_no_pendant: {
            const StructuralPredicates p = predicates(g);
            return p.is_connected && !p.has_pendant;
        }
    }
    return false;
}

}  // namespace

std::vector<Graph> enumerate_class(const GraphClass& cls, CanonicalOrder order) {
    check_enumeration_cap(cls.n);
    std::vector<Graph> out;
    if (order == CanonicalOrder::lex_min) {
        for (const Graph& g : base_representatives(cls.n))
            if (in_class(g, cls.kind)) out.push_back(g);
        return out;
    }
    for (std::uint32_t mask : scan_canonical_masks(cls.n, order)) {
        Graph g = Graph::from_triangle_bits(cls.n, mask);
        if (in_class(g, cls.kind)) out.push_back(std::move(g));
    }
    return out;
}

std::size_t count_isomorphism_classes(const GraphClass& cls, CanonicalOrder order) {
    return enumerate_class(cls, order).size();
}

namespace {

bool class_permits_pendants(GraphClassKind kind) {
    return kind == GraphClassKind::all || kind == GraphClassKind::connected;
}

void refuse_undefined_reduced(const IndexSpec& index, GraphClassKind kind) {
    const auto kv = kernel_view(index);
    if (kv && kv->reduced && kv->alpha < 0.0 && class_permits_pendants(kind))
        throw DomainError("reduced kernel with alpha < 0 is undefined on classes that permit "
                          "pendant vertices");
}

Graph union_of(const std::vector<Graph>& parts) {
    Graph g = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) g = disjoint_union(g, parts[i]);
    return g;
}

std::vector<std::string> sorted(std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    return v;
}

// The proved optimizer characterization covering one (class, kernel,
// direction) combination, when there is one.
struct TheoremTarget {
    std::string claim;
    // exact optimizer set as canonical graph6 (empty means the tree test)
    std::vector<std::string> expected;
    bool tree_test = false;
};

std::optional<TheoremTarget> theorem_target(const GraphClass& cls, const IndexSpec& index,
                                            bool maximize) {
    const auto kv = kernel_view(index);
    if (!kv) return std::nullopt;
    const double a = kv->alpha, b = kv->beta;
    if (!(a * b > 0.0)) return std::nullopt;
    const std::string prefix = kv->reduced ? "reduced_ka_" : "ka_";

    if (!kv->reduced || (a > 0.0 && b > 0.0)) {
        if (!class_permits_pendants(cls.kind)) return std::nullopt;
        if (maximize)
            return TheoremTarget{prefix + "max_is_complete", {canonical_form(complete_graph(cls.n))}};
        if (cls.kind == GraphClassKind::connected)
            return TheoremTarget{prefix + "min_is_tree", {}, true};
        return TheoremTarget{prefix + "min_is_matching_or_near_matching",
                             {canonical_form(matching_or_near_matching(cls.n))}};
    }
    // reduced kernel, both exponents negative: pendant-free classes only
    if (a < 0.0 && b < 0.0 && !class_permits_pendants(cls.kind) && cls.n >= 3) {
        if (maximize)
            return TheoremTarget{prefix + "max_is_complete", {canonical_form(complete_graph(cls.n))}};
        if (cls.kind == GraphClassKind::connected_no_pendant)
            return TheoremTarget{prefix + "min_is_cycle", {canonical_form(cycle_graph(cls.n))}};
        return TheoremTarget{prefix + "min_is_cycle_union", cycle_union_forms(cls.n)};
    }
    return std::nullopt;
}

}  // namespace

Graph matching_or_near_matching(int n) {
    if (n < 2) throw std::invalid_argument("needs n >= 2");
    std::vector<std::pair<int, int>> edges;
    const int paired = n % 2 == 0 ? n : n - 3;
    for (int v = 0; v + 1 < paired; v += 2) edges.emplace_back(v, v + 1);
    if (n % 2 != 0) {
        edges.emplace_back(n - 3, n - 2);
        edges.emplace_back(n - 2, n - 1);
    }
    return Graph::from_edge_list(n, edges);
}

std::vector<std::string> cycle_union_forms(int n) {
    std::vector<std::string> forms;
    std::vector<int> parts;
    // partitions of n into non-increasing parts >= 3
    const auto recurse = [&](auto&& self, int remaining, int cap) -> void {
        if (remaining == 0) {
            std::vector<Graph> cycles;
            for (int len : parts) cycles.push_back(cycle_graph(len));
            forms.push_back(canonical_form(union_of(cycles)));
            return;
        }
        for (int part = std::min(cap, remaining); part >= 3; --part) {
            if (remaining - part != 0 && remaining - part < 3) continue;
            parts.push_back(part);
            self(self, remaining - part, part);
            parts.pop_back();
        }
    };
    if (n >= 3) recurse(recurse, n, n);
    return sorted(std::move(forms));
}

ExtremalReport optimize(const GraphClass& cls, const IndexSpec& index, bool maximize,
                        bool assert_theorem) {
    check_enumeration_cap(cls.n);
    refuse_undefined_reduced(index, cls.kind);

    std::optional<TheoremTarget> target;
    if (assert_theorem) {
        target = theorem_target(cls, index, maximize);
        if (!target)
            throw std::invalid_argument(
                "no proved extremal characterization covers this class/index/direction");
    }

    ExtremalReport report;
    report.cls = cls;
    report.index = index;
    report.maximize = maximize;

    const std::vector<Graph> members = enumerate_class(cls);
    if (members.empty()) throw DomainError("class is empty at n=" + std::to_string(cls.n));

    std::vector<double> values;
    values.reserve(members.size());
    for (const Graph& g : members) values.push_back(evaluate_index(g, index));

    double opt = values.front();
    for (double v : values) opt = maximize ? std::max(opt, v) : std::min(opt, v);
    report.optimum = opt;

    const double tol = 1e-9 * std::max(1.0, std::fabs(opt));
    for (std::size_t i = 0; i < members.size(); ++i)
        if (std::fabs(values[i] - opt) <= tol) report.optimizers.push_back(to_graph6(members[i]));

    if (target) {
        bool matched;
        if (target->tree_test) {
            matched = std::all_of(report.optimizers.begin(), report.optimizers.end(),
                                  [&](const std::string& g6) {
                                      const Graph g = parse_graph6(g6);
                                      return g.edge_count() == g.vertex_count() - 1;
                                  });
        } else {
            matched = sorted(report.optimizers) == target->expected;
        }
        report.theorem = ExtremalReport::ClaimCheck{target->claim, matched};
    }
    return report;
}

MonotonicityResult verify_edge_monotonicity(const GraphClass& cls, double alpha, double beta,
                                            bool reduced) {
    if (!std::isfinite(alpha) || !std::isfinite(beta) || !(alpha * beta > 0.0))
        throw DomainError("edge monotonicity requires alpha * beta > 0");
    if (reduced && alpha < 0.0 && class_permits_pendants(cls.kind))
        throw DomainError("reduced kernel with alpha < 0 needs a pendant-free class");

    const auto eval = [&](const Graph& g) {
        return reduced ? reduced_ka_index(g, alpha, beta) : ka_index(g, alpha, beta);
    };

    MonotonicityResult res;
    for (const Graph& g : enumerate_class(cls)) {
        const double before = eval(g);
        const int n = g.vertex_count();
        for (int v = 1; v < n; ++v) {
            for (int u = 0; u < v; ++u) {
                if (g.has_edge(u, v)) continue;
                const double after = eval(g.with_edge(u, v));
                if (!(after > before)) {
                    res.holds = false;
                    res.graph6 = to_graph6(g);
                    res.u = u;
                    res.v = v;
                    res.before = before;
                    res.after = after;
                    return res;
                }
            }
        }
    }
    return res;
}

bool ExtremalVerdict::all_confirmed() const {
    return std::none_of(claims.begin(), claims.end(),
                        [](const ExtremalClaim& c) { return c.status == ClaimStatus::refuted; });
}

ExtremalVerdict verify_extremal_theorems(int n, double alpha, double beta) {
    check_enumeration_cap(n);
    ExtremalVerdict verdict;
    verdict.n = n;
    verdict.alpha = alpha;
    verdict.beta = beta;

    const auto record = [&](GraphClassKind kind, IndexFamily family, bool maximize,
                            const std::string& id, bool applicable) {
        if (!applicable) {
            verdict.claims.push_back({id, ClaimStatus::not_applicable, "parameter hypotheses not met"});
            return;
        }
        IndexSpec spec;
        spec.family = family;
        spec.alpha = alpha;
        spec.beta = beta;
        const ExtremalReport r = optimize({n, kind}, spec, maximize, true);
        std::string details = "optimum=" + std::to_string(r.optimum) + " optimizers=";
        for (std::size_t i = 0; i < r.optimizers.size(); ++i)
            details += (i ? "," : "") + r.optimizers[i];
        verdict.claims.push_back(
            {id, r.theorem->matched ? ClaimStatus::confirmed : ClaimStatus::refuted, details});
    };

    const bool plain = alpha * beta > 0.0 && n >= 2;
    record(GraphClassKind::connected, IndexFamily::KA, true, "ka_max_connected_is_complete", plain);
    record(GraphClassKind::all, IndexFamily::KA, true, "ka_max_all_is_complete", plain);
    record(GraphClassKind::connected, IndexFamily::KA, false, "ka_min_connected_is_tree", plain);
    record(GraphClassKind::all, IndexFamily::KA, false, "ka_min_all_is_matching", plain);

    const bool reduced_pos = alpha > 0.0 && beta > 0.0 && n >= 2;
    record(GraphClassKind::connected, IndexFamily::KA_reduced, true,
           "reduced_ka_max_connected_is_complete", reduced_pos);
    record(GraphClassKind::all, IndexFamily::KA_reduced, true, "reduced_ka_max_all_is_complete",
           reduced_pos);
    record(GraphClassKind::connected, IndexFamily::KA_reduced, false,
           "reduced_ka_min_connected_is_tree", reduced_pos);
    record(GraphClassKind::all, IndexFamily::KA_reduced, false, "reduced_ka_min_all_is_matching",
           reduced_pos);

    const bool reduced_neg = alpha < 0.0 && beta < 0.0 && n >= 3;
    record(GraphClassKind::connected_no_pendant, IndexFamily::KA_reduced, true,
           "reduced_ka_max_connected_no_pendant_is_complete", reduced_neg);
    record(GraphClassKind::no_pendant, IndexFamily::KA_reduced, true,
           "reduced_ka_max_no_pendant_is_complete", reduced_neg);
    record(GraphClassKind::connected_no_pendant, IndexFamily::KA_reduced, false,
           "reduced_ka_min_connected_no_pendant_is_cycle", reduced_neg);
    record(GraphClassKind::no_pendant, IndexFamily::KA_reduced, false,
           "reduced_ka_min_no_pendant_is_cycle_union", reduced_neg);

    return verdict;
}

}  // namespace sombor
