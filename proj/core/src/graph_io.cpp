#include "sombor/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace sombor {

namespace {

bool significant(std::string_view line) {
    for (char c : line) {
        if (c == '#') return false;
        if (!std::isspace(static_cast<unsigned char>(c))) return true;
    }
    return false;
}

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    if (text.empty()) throw ParseError("graph6: empty input");
    const auto byte_at = [&](std::size_t i) { return static_cast<unsigned char>(text[i]); };
    if (byte_at(0) < 63 || byte_at(0) > 126)
        throw ParseError("graph6: byte 0x" + std::to_string(byte_at(0)) + " outside [63,126] at offset 0");
    const int n = byte_at(0) - 63;
    if (n == 0) throw ParseError("graph6: empty graph (n=0) not supported");
    if (n > kMaxVertices)
        throw ParseError("graph6: n=" + std::to_string(n) + " beyond the single-byte tier (n < 63)");
    const int nbits = n * (n - 1) / 2;
    const std::size_t expect = 1 + static_cast<std::size_t>((nbits + 5) / 6);
    if (text.size() != expect)
        throw ParseError("graph6: bad length " + std::to_string(text.size()) + ", expected " +
                         std::to_string(expect) + " bytes for n=" + std::to_string(n));

    std::vector<std::pair<int, int>> edges;
    int k = 0;  // running triangle index, column order
    int i = 0, j = 1;
    for (std::size_t pos = 1; pos < text.size(); ++pos) {
        const unsigned char c = byte_at(pos);
        if (c < 63 || c > 126)
            throw ParseError("graph6: byte " + std::to_string(c) + " outside [63,126] at offset " +
                             std::to_string(pos));
        const unsigned group = c - 63u;
        for (int b = 5; b >= 0; --b, ++k) {
            const bool bit = (group >> b) & 1u;
            if (k >= nbits) {
                if (bit)
                    throw ParseError("graph6: nonzero padding bit at offset " + std::to_string(pos));
                continue;
            }
            if (bit) edges.emplace_back(i, j);
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
    }
    return Graph::from_edge_list(n, edges);
}

std::string to_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    unsigned group = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.has_edge(i, j) ? 1u : 0u);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) {
        group <<= (6 - filled);
        out.push_back(static_cast<char>(group + 63));
    }
    return out;
}

Graph parse_edge_list_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view body(line);
        if (auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
        body = strip(body);
        if (body.empty()) continue;
        std::istringstream fields{std::string(body)};
        if (n < 0) {
            if (!(fields >> n) || !(fields >> std::ws).eof() || n < 1)
                throw ParseError("edge list: line " + std::to_string(lineno) + ": expected vertex count");
            continue;
        }
        int u, v;
        if (!(fields >> u >> v) || !(fields >> std::ws).eof())
            throw ParseError("edge list: line " + std::to_string(lineno) + ": expected 'u v'");
        edges.emplace_back(u, v);
    }
    if (n < 0) throw ParseError("edge list: no vertex count line");
    try {
        return Graph::from_edge_list(n, edges);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("edge list: ") + e.what());
    }
}

std::string to_edge_list_text(const Graph& g) {
    std::string out = std::to_string(g.vertex_count()) + "\n";
    g.for_each_edge([&](int u, int v) { out += std::to_string(u) + " " + std::to_string(v) + "\n"; });
    return out;
}

std::vector<Graph> parse_graph_collection(std::string_view text) {
    // Peek at the first significant line to pick the format.
    std::istringstream peek{std::string(text)};
    std::string line;
    bool edge_list = false;
    while (std::getline(peek, line)) {
        if (!significant(line)) continue;
        std::string_view body = strip(line);
        if (auto hash = body.find('#'); hash != std::string_view::npos) body = strip(body.substr(0, hash));
        edge_list = !body.empty() &&
                    std::all_of(body.begin(), body.end(),
                                [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
        break;
    }
    if (edge_list) return {parse_edge_list_text(text)};

    std::vector<Graph> graphs;
    std::istringstream in{std::string(text)};
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!significant(line)) continue;
        std::string_view body = strip(line);
        try {
            graphs.push_back(parse_graph6(body));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return graphs;
}

std::vector<Graph> load_graphs_from_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph_collection(buf.str());
}

}  // namespace sombor
