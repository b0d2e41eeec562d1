#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sombor {

/// Input text could not be decoded (graph6, edge lists, grid files).
/// The message carries the byte or line offset of the first bad token.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A value was requested outside the mathematical domain of an index or
/// checker (isolated vertices, pendant vertices with a negative exponent,
/// degenerate constant arguments, ...).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Largest vertex count representable here (single-byte graph6 tier).
inline constexpr int kMaxVertices = 62;

/// Immutable simple undirected graph.
///
/// Adjacency lives in a packed upper-triangle bitset; the pair (i,j), i<j,
/// sits at bit j*(j-1)/2 + i, which is exactly the graph6 bit order.
/// Degrees are cached at construction. All operations are const; copies are
/// cheap enough at this scale that "modifiers" return new graphs.
class Graph {
public:
    /// Build from an explicit edge list. Rejects loops, out-of-range
    /// endpoints and duplicate pairs (order-insensitive) naming the pair.
    static Graph from_edge_list(int n, std::span<const std::pair<int, int>> edges);
    static Graph from_edge_list(int n, std::initializer_list<std::pair<int, int>> edges);

    /// Build from a packed upper-triangle bit mask (bit order as above).
    /// Only for n <= 11 so the triangle fits one word.
    static Graph from_triangle_bits(int n, std::uint64_t bits);

    int vertex_count() const noexcept { return n_; }
    int edge_count() const noexcept { return m_; }

    bool has_edge(int u, int v) const;
    int degree(int v) const { return deg_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& degrees() const noexcept { return deg_; }

    /// Edges as (u,v) with u < v, in triangle-bit order.
    std::vector<std::pair<int, int>> edge_list() const;

    /// Calls f(u, v) for every edge, u < v, in triangle-bit order.
    template <typename F>
    void for_each_edge(F&& f) const {
        int k = 0;
        for (int j = 1; j < n_; ++j) {
            for (int i = 0; i < j; ++i, ++k) {
                if (bit(k)) f(i, j);
            }
        }
    }

    /// Copy with one more edge. Rejects loops and existing edges.
    Graph with_edge(int u, int v) const;

    /// Packed triangle mask, n <= 11 only.
    std::uint64_t triangle_bits() const;

    bool operator==(const Graph& other) const noexcept {
        return n_ == other.n_ && bits_ == other.bits_;
    }

private:
    Graph(int n, std::vector<std::uint64_t> bits);

    bool bit(int k) const {
        return (bits_[static_cast<std::size_t>(k) >> 6] >> (k & 63)) & 1u;
    }

    int n_ = 0;
    int m_ = 0;
    std::vector<std::uint64_t> bits_;
    std::vector<int> deg_;
};

/// Order, size and the degree extremes of a graph.
struct DegreeStats {
    int n = 0;
    int m = 0;
    int delta_max = 0;
    int delta_min = 0;
};

DegreeStats degree_stats(const Graph& g);

/// Structure predicates the inequality catalog conditions on.
///
/// is_biregular: some a >= b exists with every edge joining a degree-a
/// vertex to a degree-b vertex (a == b allowed, so regular implies
/// biregular). has_regular_components: within each connected component all
/// degrees agree (the degree may differ across components).
struct StructuralPredicates {
    bool is_connected = false;
    bool is_regular = false;
    bool has_regular_components = false;
    bool is_biregular = false;
    bool has_pendant = false;
};

StructuralPredicates predicates(const Graph& g);

bool has_isolated_vertex(const Graph& g);

// Stock graphs used by the extremal searches and throughout the tests.
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace sombor
