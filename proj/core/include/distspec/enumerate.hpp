#ifndef DISTSPEC_ENUMERATE_HPP
#define DISTSPEC_ENUMERATE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "distspec/canonical.hpp"
#include "distspec/charpoly.hpp"
#include "distspec/graph.hpp"
#include "distspec/switching.hpp"

namespace distspec {

struct EnumerateOptions {
    bool allow_large_n = false;  // unlocks n = 10
    int threads = 1;
};

inline constexpr int enumerate_default_cap = 9;
inline constexpr int enumerate_hard_cap = 10;

/// One representative per isomorphism class of connected n-vertex graphs,
/// generated by vertex augmentation from the (n-1)-vertex classes with
/// canonical-form dedupe. Output is sorted by canonical label, so the
/// stream is deterministic. Throws when n exceeds the cap for the options.
std::vector<Graph> connected_graphs(int n, const EnumerateOptions& opts = {});

struct CospectralClass {
    CharPoly poly;
    std::vector<Graph> graphs;  // pairwise non-isomorphic, sorted by canonical label
};

/// Group all connected n-vertex classes by exact characteristic polynomial
/// and keep the groups of size >= 2, sorted by coefficient list.
std::vector<CospectralClass> cospectral_classes(int n, const EnumerateOptions& opts = {});

/// Witness that a cospectral pair arises from distance switching:
/// apply_switch(source graph, tuple) is isomorphic to the other member and
/// the tuple passes verify_distance_hypotheses.
struct SwitchCertificate {
    int source = 0;  // 0: tuple lives in the first graph, 1: in the second
    SwitchTuple tuple;
};

struct PairClassification {
    std::array<int, 2> edge_counts{};
    std::array<bool, 2> bipartite{};
    bool switching_explained = false;
    std::optional<SwitchCertificate> certificate;
};

/// Classify a certified cospectral pair. Throws when the inputs are not a
/// non-isomorphic exactly-cospectral pair.
PairClassification classify_pair(const Graph& g1, const Graph& g2);

struct ClassPair {
    int i = 0, j = 0;  // indices into the class's graph list, i < j
    PairClassification info;
};

struct ClassReport {
    CharPoly poly;
    std::vector<std::string> graphs;  // canonical graph6 strings
    std::vector<ClassPair> pairs;
};

struct SearchReport {
    int n = 0;
    std::int64_t connected_count = 0;
    std::vector<ClassReport> classes;
};

/// Full census at order n: enumerate, group, certify and classify every
/// cospectral pair. Deterministic for a given n.
SearchReport mine(int n, const EnumerateOptions& opts = {});

}  // namespace distspec

#endif
