#ifndef DISTSPEC_GRAPH6_HPP
#define DISTSPEC_GRAPH6_HPP

#include <string>
#include <string_view>

#include "distspec/graph.hpp"

namespace distspec {

/// graph6 encoding for n <= 62: one size byte (n + 63) followed by the
/// upper-triangle adjacency bits in column order (j = 1..n-1, i = 0..j-1),
/// packed big-endian into 6-bit groups, each offset by 63.
std::string to_graph6(const Graph& g);

/// Inverse of to_graph6. Throws std::invalid_argument on a malformed
/// header byte, an out-of-range body byte or a truncated body; the message
/// carries the byte offset.
Graph from_graph6(std::string_view text);

/// Plain text edge-list format: first line "n", then one "u v" line per edge.
std::string to_edge_list_text(const Graph& g);
Graph from_edge_list_text(std::string_view text);

}  // namespace distspec

#endif
