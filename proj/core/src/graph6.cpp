#include "distspec/graph6.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

namespace distspec {

std::string to_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

Graph from_graph6(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("graph6: empty input");
    const unsigned char header = static_cast<unsigned char>(text[0]);
    if (header == 126)
        throw std::invalid_argument("graph6: multi-byte size header at offset 0 (n > 62 unsupported)");
    if (header < 63 || header > 63 + Graph::max_vertices)
        throw std::invalid_argument("graph6: malformed header byte at offset 0");
    const int n = static_cast<int>(header) - 63;
    const int nbits = n * (n - 1) / 2;
    const std::size_t body_len = static_cast<std::size_t>((nbits + 5) / 6);
    if (text.size() != 1 + body_len)
        throw std::invalid_argument("graph6: body truncated or oversized at offset " + std::to_string(text.size()) +
                                    " (expected " + std::to_string(1 + body_len) + " bytes total)");
    Graph g(n);
    int bit_index = 0;
    for (std::size_t p = 0; p < body_len; ++p) {
        const unsigned char byte = static_cast<unsigned char>(text[1 + p]);
        if (byte < 63 || byte > 126)
            throw std::invalid_argument("graph6: byte out of range at offset " + std::to_string(1 + p));
        const int group = static_cast<int>(byte) - 63;
        for (int b = 5; b >= 0; --b, ++bit_index) {
            if (bit_index >= nbits) {
                if ((group >> b) & 1)
                    throw std::invalid_argument("graph6: nonzero padding at offset " + std::to_string(1 + p));
                continue;
            }
            if ((group >> b) & 1) {
                // bit order: (0,1), (0,2), (1,2), (0,3), ... column by column
                int j = 1, before = 0;
                while (before + j <= bit_index) before += j, ++j;
                g.add_edge(bit_index - before, j);
            }
        }
    }
    return g;
}

std::string to_edge_list_text(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph from_edge_list_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    int n = -1;
    if (!(in >> n)) throw std::invalid_argument("edge list: missing vertex count line");
    std::vector<std::pair<int, int>> edges;
    int u, v;
    while (in >> u) {
        if (!(in >> v)) throw std::invalid_argument("edge list: dangling endpoint " + std::to_string(u));
        edges.emplace_back(u, v);
    }
    if (!in.eof()) throw std::invalid_argument("edge list: trailing non-numeric data");
    return Graph::from_edge_list(n, edges);
}

}  // namespace distspec
