#include "sombor/graph.hpp"

#include <algorithm>
#include <numeric>

namespace sombor {

namespace {

int triangle_index(int u, int v) {
    // caller guarantees u < v
    return v * (v - 1) / 2 + u;
}

void check_vertex_count(int n) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex, got n=" + std::to_string(n));
    if (n > kMaxVertices)
        throw std::invalid_argument("graph too large: n=" + std::to_string(n) + " exceeds cap " +
                                    std::to_string(kMaxVertices));
}

}  // namespace

Graph::Graph(int n, std::vector<std::uint64_t> bits) : n_(n), bits_(std::move(bits)) {
    deg_.assign(static_cast<std::size_t>(n), 0);
    int k = 0;
    for (int j = 1; j < n_; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            if (bit(k)) {
                ++deg_[static_cast<std::size_t>(i)];
                ++deg_[static_cast<std::size_t>(j)];
                ++m_;
            }
        }
    }
}

Graph Graph::from_edge_list(int n, std::span<const std::pair<int, int>> edges) {
    check_vertex_count(n);
    const int nbits = n * (n - 1) / 2;
    std::vector<std::uint64_t> bits(static_cast<std::size_t>(nbits + 63) / 64, 0);
    for (const auto& [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw std::invalid_argument("edge (" + std::to_string(a) + "," + std::to_string(b) +
                                        ") out of range for n=" + std::to_string(n));
        if (a == b)
            throw std::invalid_argument("loop edge (" + std::to_string(a) + "," + std::to_string(b) + ") rejected");
        const int u = std::min(a, b), v = std::max(a, b);
        const int k = triangle_index(u, v);
        std::uint64_t& word = bits[static_cast<std::size_t>(k) >> 6];
        const std::uint64_t mask = 1ull << (k & 63);
        if (word & mask)
            throw std::invalid_argument("duplicate edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
        word |= mask;
    }
    return Graph(n, std::move(bits));
}

Graph Graph::from_edge_list(int n, std::initializer_list<std::pair<int, int>> edges) {
    return from_edge_list(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

Graph Graph::from_triangle_bits(int n, std::uint64_t mask) {
    check_vertex_count(n);
    if (n > 11) throw std::invalid_argument("from_triangle_bits supports n <= 11");
    const int nbits = n * (n - 1) / 2;
    if (nbits < 64 && (mask >> nbits) != 0)
        throw std::invalid_argument("triangle mask has bits beyond the triangle");
    std::vector<std::uint64_t> bits;
    if (nbits > 0) bits.push_back(mask);
    return Graph(n, std::move(bits));
}

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    if (u > v) std::swap(u, v);
    return bit(triangle_index(u, v));
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m_));
    for_each_edge([&](int u, int v) { edges.emplace_back(u, v); });
    return edges;
}

Graph Graph::with_edge(int u, int v) const {
    if (u == v) throw std::invalid_argument("loop edge (" + std::to_string(u) + "," + std::to_string(v) + ") rejected");
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    if (has_edge(u, v))
        throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) + ") already present");
    std::vector<std::uint64_t> bits = bits_;
    const int k = triangle_index(std::min(u, v), std::max(u, v));
    bits[static_cast<std::size_t>(k) >> 6] |= 1ull << (k & 63);
    return Graph(n_, std::move(bits));
}

std::uint64_t Graph::triangle_bits() const {
    if (n_ > 11) throw std::invalid_argument("triangle_bits supports n <= 11");
    return bits_.empty() ? 0ull : bits_[0];
}

DegreeStats degree_stats(const Graph& g) {
    DegreeStats s;
    s.n = g.vertex_count();
    s.m = g.edge_count();
    const auto& deg = g.degrees();
    auto [lo, hi] = std::minmax_element(deg.begin(), deg.end());
    s.delta_min = *lo;
    s.delta_max = *hi;
    return s;
}

bool has_isolated_vertex(const Graph& g) {
    const auto& deg = g.degrees();
    return std::find(deg.begin(), deg.end(), 0) != deg.end();
}

StructuralPredicates predicates(const Graph& g) {
    const int n = g.vertex_count();
    const auto& deg = g.degrees();

    StructuralPredicates p;
    p.is_regular = std::all_of(deg.begin(), deg.end(), [&](int d) { return d == deg[0]; });
    p.has_pendant = std::find(deg.begin(), deg.end(), 1) != deg.end();

    // component labels via BFS
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<int> stack;
    int ncomp = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[static_cast<std::size_t>(s)] != -1) continue;
        comp[static_cast<std::size_t>(s)] = ncomp;
        stack.push_back(s);
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < n; ++v) {
                if (comp[static_cast<std::size_t>(v)] == -1 && g.has_edge(u, v)) {
                    comp[static_cast<std::size_t>(v)] = ncomp;
                    stack.push_back(v);
                }
            }
        }
        ++ncomp;
    }
    p.is_connected = (ncomp == 1);

    p.has_regular_components = true;
    std::vector<int> comp_deg(static_cast<std::size_t>(ncomp), -1);
    for (int v = 0; v < n; ++v) {
        int& d = comp_deg[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])];
        if (d == -1) d = deg[static_cast<std::size_t>(v)];
        else if (d != deg[static_cast<std::size_t>(v)]) p.has_regular_components = false;
    }

    p.is_biregular = true;
    int a = -1, b = -1;  // candidate degree pair, fixed by the first edge
    g.for_each_edge([&](int u, int v) {
        const int du = deg[static_cast<std::size_t>(u)];
        const int dv = deg[static_cast<std::size_t>(v)];
        const int hi = std::max(du, dv), lo = std::min(du, dv);
        if (a == -1) {
            a = hi;
            b = lo;
        } else if (hi != a || lo != b) {
            p.is_biregular = false;
        }
    });
    return p;
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
    return Graph::from_edge_list(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
    edges.emplace_back(0, n - 1);
    return Graph::from_edge_list(n, edges);
}

Graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return Graph::from_edge_list(leaves + 1, edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    const int na = a.vertex_count();
    std::vector<std::pair<int, int>> edges = a.edge_list();
    b.for_each_edge([&](int u, int v) { edges.emplace_back(u + na, v + na); });
    return Graph::from_edge_list(na + b.vertex_count(), edges);
}

}  // namespace sombor
