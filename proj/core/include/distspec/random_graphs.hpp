#ifndef DISTSPEC_RANDOM_GRAPHS_HPP
#define DISTSPEC_RANDOM_GRAPHS_HPP

#include <random>

#include "distspec/graph.hpp"

namespace distspec {

/// G(n,p); may be disconnected.
Graph random_graph(std::mt19937_64& rng, int n, double edge_prob);

/// G(n,p) resampled until connected (p is bumped after repeated misses).
Graph random_connected_graph(std::mt19937_64& rng, int n, double edge_prob);

/// Uniform labeled tree on n vertices (random Pruefer sequence).
Graph random_tree(std::mt19937_64& rng, int n);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);

}  // namespace distspec

#endif
