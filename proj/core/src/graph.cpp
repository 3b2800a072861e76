#include "distspec/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace distspec {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
    if (n < 0 || n > max_vertices)
        throw std::invalid_argument("vertex count " + std::to_string(n) + " outside [0, 62]");
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
}

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") has an endpoint outside 0.." + std::to_string(n - 1));
        if (u == v)
            throw std::invalid_argument("self-loop (" + std::to_string(u) + "," + std::to_string(v) + ") rejected");
        g.adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        g.adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }
    return g;
}

int Graph::edge_count() const {
    int twice = 0;
    for (std::uint64_t m : adj_) twice += std::popcount(m);
    return twice / 2;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[static_cast<std::size_t>(u)] >> v) & 1u;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop (" + std::to_string(u) + "," + std::to_string(v) + ") rejected");
    adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << v);
    adj_[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << u);
}

int Graph::degree(int v) const {
    check_vertex(v);
    return std::popcount(adj_[static_cast<std::size_t>(v)]);
}

std::vector<int> Graph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(degree(v)));
    for (std::uint64_t m = adj_[static_cast<std::size_t>(v)]; m; m &= m - 1)
        out.push_back(std::countr_zero(m));
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edge_count()));
    for (int u = 0; u < n_; ++u) {
        std::uint64_t above = adj_[static_cast<std::size_t>(u)] >> (u + 1);
        for (std::uint64_t m = above; m; m &= m - 1)
            out.emplace_back(u, u + 1 + std::countr_zero(m));
    }
    return out;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> d(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) d[static_cast<std::size_t>(v)] = std::popcount(adj_[static_cast<std::size_t>(v)]);
    std::sort(d.begin(), d.end());
    return d;
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    std::uint64_t seen = 1;
    std::uint64_t frontier = 1;
    const std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t m = frontier; m; m &= m - 1)
            next |= g.neighbor_mask(std::countr_zero(m));
        frontier = next & ~seen;
        seen |= next;
        if (seen == all) return true;
    }
    return seen == all;
}

bool is_bipartite(const Graph& g) {
    const int n = g.vertex_count();
    std::uint64_t colored = 0;
    for (int start = 0; start < n; ++start) {
        if ((colored >> start) & 1u) continue;
        std::uint64_t frontier = std::uint64_t{1} << start;
        colored |= frontier;
        while (frontier) {
            std::uint64_t next = 0;
            for (std::uint64_t m = frontier; m; m &= m - 1) {
                const std::uint64_t nb = g.neighbor_mask(std::countr_zero(m));
                // an edge inside one BFS layer closes an odd cycle
                if (nb & frontier) return false;
                next |= nb;
            }
            next &= ~colored;
            colored |= next;
            frontier = next;
        }
    }
    return true;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    const int n = g.vertex_count();
    if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permutation size mismatch");
    Graph out(n);
    for (const auto& [u, v] : g.edges())
        out.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return out;
}

Graph identify(const Graph& g, int u, const Graph& k, int v) {
    const int ng = g.vertex_count(), nk = k.vertex_count();
    if (u < 0 || u >= ng) throw std::invalid_argument("identify: u=" + std::to_string(u) + " not a vertex of the first graph");
    if (v < 0 || v >= nk) throw std::invalid_argument("identify: v=" + std::to_string(v) + " not a vertex of the second graph");
    if (!is_connected(g) || !is_connected(k)) throw std::invalid_argument("identify requires connected inputs");
    const int n = ng + nk - 1;
    if (n > Graph::max_vertices)
        throw std::invalid_argument("identified graph would have " + std::to_string(n) + " > 62 vertices");

    Graph out(n);
    for (const auto& [a, b] : g.edges()) out.add_edge(a, b);
    auto map_k = [&](int w) { return w == v ? u : ng + (w < v ? w : w - 1); };
    for (const auto& [a, b] : k.edges()) out.add_edge(map_k(a), map_k(b));
    return out;
}

}  // namespace distspec
