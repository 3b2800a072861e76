#ifndef DISTSPEC_CANONICAL_HPP
#define DISTSPEC_CANONICAL_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <string>

#include "distspec/graph.hpp"

namespace distspec {

/// Total-order key for an isomorphism class. Two graphs have equal labels
/// iff they are isomorphic. The key is the graph6 string of the canonical
/// relabeling, so it doubles as a printable representative.
struct CanonicalLabel {
    std::string key;
    auto operator<=>(const CanonicalLabel&) const = default;
};

inline constexpr int canonical_default_cap = 12;

/// Canonical form by degree/distance-degree partition refinement followed by
/// backtracking over cell-respecting orderings, taking the lexicographically
/// smallest adjacency bit-string. Exact for every graph; throws
/// std::invalid_argument when n exceeds `cap`.
CanonicalLabel canonical_form(const Graph& g, int cap = canonical_default_cap);

/// The canonically relabeled graph itself (same order the label encodes).
Graph canonical_graph(const Graph& g, int cap = canonical_default_cap);

/// Exact isomorphism test. Cheap invariants (order, size, degree sequence,
/// component profile) decide most negatives at any n; ties are settled by
/// canonical_form, so equal-invariant graphs beyond the canonical cap throw.
bool are_isomorphic(const Graph& g1, const Graph& g2);

}  // namespace distspec

template <>
struct std::hash<distspec::CanonicalLabel> {
    std::size_t operator()(const distspec::CanonicalLabel& l) const noexcept {
        return std::hash<std::string>{}(l.key);
    }
};

#endif
