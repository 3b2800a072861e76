#include "distspec/distance.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace distspec {

DistanceMatrix DistanceMatrix::from_entries(int n, std::vector<std::uint16_t> entries) {
    if (n < 0 || entries.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw std::invalid_argument("entry vector size does not match n*n");
    DistanceMatrix m;
    m.n_ = n;
    m.d_ = std::move(entries);
    for (int i = 0; i < n; ++i) {
        if (m.at(i, i) != 0) throw std::invalid_argument("nonzero diagonal at " + std::to_string(i));
        for (int j = 0; j < n; ++j) {
            if (m.at(i, j) != m.at(j, i))
                throw std::invalid_argument("asymmetry at (" + std::to_string(i) + "," + std::to_string(j) + ")");
            if (i != j && m.at(i, j) < 1)
                throw std::invalid_argument("off-diagonal zero at (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l)
                if (m.at(i, l) > m.at(i, j) + m.at(j, l))
                    throw std::invalid_argument("triangle inequality fails at (" + std::to_string(i) + "," +
                                                std::to_string(j) + "," + std::to_string(l) + ")");
    return m;
}

std::uint16_t DistanceMatrix::max_entry() const {
    std::uint16_t best = 0;
    for (std::uint16_t v : d_) best = std::max(best, v);
    return best;
}

std::vector<std::uint16_t> bfs_distances(const Graph& g, int source, std::uint16_t unreachable) {
    const int n = g.vertex_count();
    if (source < 0 || source >= n) throw std::invalid_argument("bfs source out of range");
    std::vector<std::uint16_t> dist(static_cast<std::size_t>(n), unreachable);
    std::uint64_t frontier = std::uint64_t{1} << source;
    std::uint64_t seen = frontier;
    std::uint16_t level = 0;
    while (frontier) {
        for (std::uint64_t m = frontier; m; m &= m - 1)
            dist[static_cast<std::size_t>(std::countr_zero(m))] = level;
        std::uint64_t next = 0;
        for (std::uint64_t m = frontier; m; m &= m - 1)
            next |= g.neighbor_mask(std::countr_zero(m));
        frontier = next & ~seen;
        seen |= next;
        ++level;
    }
    return dist;
}

DistanceMatrix distance_matrix(const Graph& g) {
    const int n = g.vertex_count();
    if (!is_connected(g))
        throw std::invalid_argument("distance matrix is undefined for a disconnected graph");
    DistanceMatrix m;
    m.n_ = n;
    m.d_.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
        auto row = bfs_distances(g, s);
        std::copy(row.begin(), row.end(), m.d_.begin() + static_cast<std::size_t>(s) * static_cast<std::size_t>(n));
    }
    return m;
}

}  // namespace distspec
