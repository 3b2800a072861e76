#ifndef DISTSPEC_DISTANCE_HPP
#define DISTSPEC_DISTANCE_HPP

#include <cstdint>
#include <vector>

#include "distspec/graph.hpp"

namespace distspec {

/// Symmetric matrix of pairwise shortest-path hop counts.
/// Entries fit in 16 bits; the largest possible distance at n <= 62 is 61.
class DistanceMatrix {
public:
    DistanceMatrix() = default;

    /// Validates symmetry, zero diagonal, off-diagonal entries >= 1 and the
    /// triangle inequality; throws std::invalid_argument on violation.
    static DistanceMatrix from_entries(int n, std::vector<std::uint16_t> entries);

    int size() const { return n_; }
    std::uint16_t at(int i, int j) const {
        return d_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)];
    }
    std::uint16_t max_entry() const;
    const std::vector<std::uint16_t>& entries() const { return d_; }

    /// Row i as a contiguous slice of the entry vector.
    const std::uint16_t* row(int i) const { return d_.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(n_); }

    bool operator==(const DistanceMatrix& other) const { return n_ == other.n_ && d_ == other.d_; }

private:
    friend DistanceMatrix distance_matrix(const Graph& g);

    int n_ = 0;
    std::vector<std::uint16_t> d_;
};

/// All-pairs BFS distances. The distance matrix is undefined for a
/// disconnected graph; such input throws std::invalid_argument.
DistanceMatrix distance_matrix(const Graph& g);

/// Single-source BFS hop counts; unreachable vertices get `unreachable`.
std::vector<std::uint16_t> bfs_distances(const Graph& g, int source, std::uint16_t unreachable = 0xffff);

}  // namespace distspec

#endif
