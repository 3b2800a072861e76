#include "distspec/random_graphs.hpp"

#include <algorithm>
#include <stdexcept>

namespace distspec {

Graph random_graph(std::mt19937_64& rng, int n, double edge_prob) {
    Graph g(n);
    std::bernoulli_distribution coin(std::clamp(edge_prob, 0.0, 1.0));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

Graph random_connected_graph(std::mt19937_64& rng, int n, double edge_prob) {
    if (n < 1) throw std::invalid_argument("random_connected_graph: n must be >= 1");
    double p = std::clamp(edge_prob, 0.0, 1.0);
    for (int attempt = 1;; ++attempt) {
        Graph g = random_graph(rng, n, p);
        if (is_connected(g)) return g;
        if (attempt % 32 == 0) p = std::min(1.0, p + 0.1);  // escape sparse dead ends
    }
}

Graph random_tree(std::mt19937_64& rng, int n) {
    if (n < 1) throw std::invalid_argument("random_tree: n must be >= 1");
    Graph g(n);
    if (n == 1) return g;
    if (n == 2) {
        g.add_edge(0, 1);
        return g;
    }
    // decode a random Pruefer sequence
    std::vector<int> seq(static_cast<std::size_t>(n - 2));
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int& s : seq) s = pick(rng);
    std::vector<int> deg(static_cast<std::size_t>(n), 1);
    for (int s : seq) ++deg[static_cast<std::size_t>(s)];
    std::vector<char> leaf_used(static_cast<std::size_t>(n), 0);
    for (int s : seq) {
        int leaf = -1;
        for (int v = 0; v < n; ++v)
            if (deg[static_cast<std::size_t>(v)] == 1 && !leaf_used[static_cast<std::size_t>(v)]) {
                leaf = v;
                break;
            }
        g.add_edge(leaf, s);
        leaf_used[static_cast<std::size_t>(leaf)] = 1;
        --deg[static_cast<std::size_t>(s)];
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v)
        if (deg[static_cast<std::size_t>(v)] == 1 && !leaf_used[static_cast<std::size_t>(v)]) (a < 0 ? a : b) = v;
    g.add_edge(a, b);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: n must be >= 3");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

}  // namespace distspec
