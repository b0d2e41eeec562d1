#include "sombor/canonical.hpp"

#include <array>
#include <stdexcept>

#include "sombor/graph_io.hpp"

namespace sombor {

namespace {

constexpr int kMaskCap = 11;  // triangle fits one word

struct PairTable {
    std::array<int, 64> i{};
    std::array<int, 64> j{};
    constexpr PairTable() {
        int k = 0;
        for (int col = 1; col < kMaskCap; ++col)
            for (int row = 0; row < col; ++row, ++k) {
                i[static_cast<std::size_t>(k)] = row;
                j[static_cast<std::size_t>(k)] = col;
            }
    }
};

constexpr PairTable kPairs{};

// Branch-and-bound search over label assignments. Slot j receives one
// original vertex; placing it fixes the encoding bits of column j, i.e. the
// adjacency of slot j to slots 0..j-1, with pair (0,j) the most significant
// bit of the column. Words hold the bit stream left-aligned so that plain
// integer comparison is lexicographic comparison of encodings.
template <bool Max>
struct CanonSearch {
    int n = 0;
    std::array<std::uint16_t, kMaskCap> rows{};
    std::array<std::uint32_t, kMaskCap> refcol{};  // identity encoding, per column
    std::array<int, kMaskCap> chosen{};

    void load(int vertex_count, std::uint64_t mask) {
        n = vertex_count;
        rows.fill(0);
        refcol.fill(0);
        const int nbits = n * (n - 1) / 2;
        for (int k = 0; k < nbits; ++k) {
            if ((mask >> k) & 1ull) {
                const int a = kPairs.i[static_cast<std::size_t>(k)];
                const int b = kPairs.j[static_cast<std::size_t>(k)];
                rows[static_cast<std::size_t>(a)] |= static_cast<std::uint16_t>(1u << b);
                rows[static_cast<std::size_t>(b)] |= static_cast<std::uint16_t>(1u << a);
                refcol[static_cast<std::size_t>(b)] |= 1u << (b - 1 - a);
            }
        }
    }

    std::uint32_t column_of(int v, int depth) const {
        std::uint32_t col = 0;
        for (int i = 0; i < depth; ++i)
            col = (col << 1) | ((rows[static_cast<std::size_t>(v)] >> chosen[static_cast<std::size_t>(i)]) & 1u);
        return col;
    }

    // True when no relabeling yields a better encoding than the identity.
    // Only equal-column branches recurse, so the prefix stays equal to the
    // reference along every explored path.
    bool identity_is_extremal(int depth, std::uint16_t used) {
        if (depth == n) return true;
        std::array<std::pair<std::uint32_t, int>, kMaskCap> cand;
        int count = 0;
        for (int v = 0; v < n; ++v) {
            if ((used >> v) & 1u) continue;
            cand[static_cast<std::size_t>(count++)] = {column_of(v, depth), v};
        }
        // insertion sort: ascending columns for lex_min, descending for lex_max
        for (int a = 1; a < count; ++a) {
            auto item = cand[static_cast<std::size_t>(a)];
            int b = a - 1;
            while (b >= 0 && (Max ? cand[static_cast<std::size_t>(b)].first < item.first
                                  : cand[static_cast<std::size_t>(b)].first > item.first)) {
                cand[static_cast<std::size_t>(b + 1)] = cand[static_cast<std::size_t>(b)];
                --b;
            }
            cand[static_cast<std::size_t>(b + 1)] = item;
        }
        const std::uint32_t ref = refcol[static_cast<std::size_t>(depth)];
        for (int a = 0; a < count; ++a) {
            const auto [col, v] = cand[static_cast<std::size_t>(a)];
            if (Max ? col > ref : col < ref) return false;  // strictly better image exists
            if (col != ref) break;                          // sorted: the rest are worse
            chosen[static_cast<std::size_t>(depth)] = v;
            if (!identity_is_extremal(depth + 1, static_cast<std::uint16_t>(used | (1u << v)))) return false;
        }
        return true;
    }

    std::uint64_t best = 0;

    void search_best(int depth, std::uint16_t used, std::uint64_t acc) {
        if (depth == n) {
            if (Max ? acc > best : acc < best) best = acc;
            return;
        }
        std::array<std::pair<std::uint32_t, int>, kMaskCap> cand;
        int count = 0;
        for (int v = 0; v < n; ++v) {
            if ((used >> v) & 1u) continue;
            cand[static_cast<std::size_t>(count++)] = {column_of(v, depth), v};
        }
        for (int a = 1; a < count; ++a) {
            auto item = cand[static_cast<std::size_t>(a)];
            int b = a - 1;
            while (b >= 0 && (Max ? cand[static_cast<std::size_t>(b)].first < item.first
                                  : cand[static_cast<std::size_t>(b)].first > item.first)) {
                cand[static_cast<std::size_t>(b + 1)] = cand[static_cast<std::size_t>(b)];
                --b;
            }
            cand[static_cast<std::size_t>(b + 1)] = item;
        }
        const int off = depth * (depth - 1) / 2;
        const int placed = off + depth;
        const std::uint64_t mask = placed == 0 ? 0ull : (~0ull << (64 - placed));
        for (int a = 0; a < count; ++a) {
            const auto [col, v] = cand[static_cast<std::size_t>(a)];
            const std::uint64_t next =
                depth == 0 ? acc : (acc | (static_cast<std::uint64_t>(col) << (64 - placed)));
            if (placed > 0) {
                const std::uint64_t bound = best & mask;
                if (Max ? next < bound : next > bound) break;  // sorted: the rest prune too
            }
            chosen[static_cast<std::size_t>(depth)] = v;
            search_best(depth + 1, static_cast<std::uint16_t>(used | (1u << v)), next);
        }
    }

    std::uint64_t identity_word() const {
        std::uint64_t acc = 0;
        for (int j = 1; j < n; ++j) {
            const int placed = j * (j - 1) / 2 + j;
            acc |= static_cast<std::uint64_t>(refcol[static_cast<std::size_t>(j)]) << (64 - placed);
        }
        return acc;
    }
};

std::uint64_t graph_mask(const Graph& g, int cap, const char* op) {
    if (g.vertex_count() > cap)
        throw std::invalid_argument(std::string(op) + ": n=" + std::to_string(g.vertex_count()) +
                                    " exceeds the exhaustive-relabeling cap of " + std::to_string(cap));
    return g.triangle_bits();
}

template <bool Max>
std::uint64_t best_word(int n, std::uint64_t mask) {
    CanonSearch<Max> s;
    s.load(n, mask);
    s.best = s.identity_word();
    s.search_best(0, 0, 0);
    return s.best;
}

Graph word_to_graph(int n, std::uint64_t word) {
    const int nbits = n * (n - 1) / 2;
    std::uint64_t mask = 0;
    for (int k = 0; k < nbits; ++k)
        if ((word >> (63 - k)) & 1ull) mask |= 1ull << k;
    return Graph::from_triangle_bits(n, mask);
}

}  // namespace

std::string canonical_form(const Graph& g, CanonicalOrder order) {
    const std::uint64_t mask = graph_mask(g, kCanonicalVertexCap, "canonical_form");
    const int n = g.vertex_count();
    const std::uint64_t word =
        order == CanonicalOrder::lex_min ? best_word<false>(n, mask) : best_word<true>(n, mask);
    return to_graph6(word_to_graph(n, word));
}

bool is_canonical_triangle_mask(int n, std::uint64_t mask, CanonicalOrder order) {
    if (order == CanonicalOrder::lex_min) {
        CanonSearch<false> s;
        s.load(n, mask);
        return s.identity_is_extremal(0, 0);
    }
    CanonSearch<true> s;
    s.load(n, mask);
    return s.identity_is_extremal(0, 0);
}

bool is_canonical_labeling(const Graph& g, CanonicalOrder order) {
    const std::uint64_t mask = graph_mask(g, kCanonicalVertexCap, "is_canonical_labeling");
    return is_canonical_triangle_mask(g.vertex_count(), mask, order);
}

}  // namespace sombor
