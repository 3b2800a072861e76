#ifndef DISTSPEC_GRAPH_HPP
#define DISTSPEC_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace distspec {

/// Labeled simple undirected graph on vertices 0..n-1, n <= 62.
/// Adjacency is stored as one 64-bit mask per vertex, which keeps BFS
/// frontiers and neighbourhood tests to a handful of word operations.
class Graph {
public:
    static constexpr int max_vertices = 62;

    Graph() = default;
    explicit Graph(int n);

    /// Build from an explicit edge list. Edges are normalized to (min,max)
    /// and deduplicated. Throws std::invalid_argument on an out-of-range
    /// endpoint or a self-loop, naming the offending pair.
    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const;

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    std::uint64_t neighbor_mask(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const;
    std::vector<int> neighbors(int v) const;

    /// Sorted list of (u,v) pairs with u < v.
    std::vector<std::pair<int, int>> edges() const;

    /// Sorted degree sequence.
    std::vector<int> degree_sequence() const;

    bool operator==(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);

/// Apply a relabeling: vertex v of g becomes perm[v] in the result.
Graph relabel(const Graph& g, const std::vector<int>& perm);

/// Glue k onto g by merging vertex v of k with vertex u of g.
/// Labeling contract: g keeps labels 0..n_g-1 (the merged vertex is u),
/// the remaining k-vertices take labels n_g..n_g+n_k-2 in increasing
/// order of their original label. Both inputs must be connected.
Graph identify(const Graph& g, int u, const Graph& k, int v);

}  // namespace distspec

#endif
