#include "distspec/canonical.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <string>

#include "distspec/distance.hpp"
#include "distspec/graph6.hpp"

namespace distspec {

namespace {

// Per-vertex invariant: distance profile (count of vertices at each hop
// distance, unreachable bucketed at 63) refined by neighbor colors until the
// partition stabilizes. Colors are ranks of the sorted distinct keys, so the
// final coloring depends only on the isomorphism type.
std::vector<int> refine_colors(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> profile(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        auto dist = bfs_distances(g, v, 63);
        std::vector<int> counts(64, 0);
        for (int u = 0; u < n; ++u)
            if (u != v) ++counts[dist[static_cast<std::size_t>(u)]];
        profile[static_cast<std::size_t>(v)] = std::move(counts);
    }

    std::vector<int> color(static_cast<std::size_t>(n), 0);
    {
        std::map<std::vector<int>, int> rank;
        for (const auto& p : profile) rank.emplace(p, 0);
        int next = 0;
        for (auto& [key, r] : rank) r = next++;
        for (int v = 0; v < n; ++v) color[static_cast<std::size_t>(v)] = rank[profile[static_cast<std::size_t>(v)]];
    }

    for (int round = 0; round < n; ++round) {
        std::vector<std::vector<int>> key(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<int> k;
            k.push_back(color[static_cast<std::size_t>(v)]);
            for (int u : g.neighbors(v)) k.push_back(color[static_cast<std::size_t>(u)]);
            std::sort(k.begin() + 1, k.end());
            key[static_cast<std::size_t>(v)] = std::move(k);
        }
        std::map<std::vector<int>, int> rank;
        for (const auto& k : key) rank.emplace(k, 0);
        int next = 0;
        for (auto& [kk, r] : rank) r = next++;
        std::vector<int> fresh(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) fresh[static_cast<std::size_t>(v)] = rank[key[static_cast<std::size_t>(v)]];
        if (fresh == color) break;
        color = std::move(fresh);
    }
    return color;
}

struct CanonSearch {
    const Graph& g;
    int n;
    std::vector<std::vector<int>> cells;  // vertices grouped by color, color order
    std::vector<int> cell_of_pos;         // which cell fills position p

    std::vector<std::uint64_t> cur;   // column bit-codes of the current ordering
    std::vector<std::uint64_t> best;  // smallest complete code seen
    std::vector<int> placed;          // placed[p] = original vertex at position p
    std::vector<int> best_order;
    std::vector<char> used;
    bool have_best = false;

    explicit CanonSearch(const Graph& graph) : g(graph), n(graph.vertex_count()) {}

    // Column code for placing vertex v at position p: bit (p-1-i) holds
    // adjacency to the vertex at position i, so smaller code = lexicographically
    // smaller column of the adjacency bit-string.
    std::uint64_t column_code(int v, int p) const {
        std::uint64_t code = 0;
        for (int i = 0; i < p; ++i)
            code = (code << 1) | (g.has_edge(placed[static_cast<std::size_t>(i)], v) ? 1u : 0u);
        return code;
    }

    // state: 0 = prefix equals best, 1 = prefix strictly below best.
    void search(int p, int state) {
        if (p == n) {
            if (!have_best || cur < best) {
                best = cur;
                best_order = placed;
                have_best = true;
            }
            return;
        }
        const auto& cell = cells[static_cast<std::size_t>(cell_of_pos[static_cast<std::size_t>(p)])];
        std::vector<int> tried;
        for (int v : cell) {
            if (used[static_cast<std::size_t>(v)]) continue;
            // skip twins of an already-tried sibling: swapping the two is an
            // automorphism, so the subtree repeats verbatim
            bool twin = false;
            for (int u : tried) {
                const std::uint64_t off = ~((std::uint64_t{1} << u) | (std::uint64_t{1} << v));
                if (((g.neighbor_mask(u) ^ g.neighbor_mask(v)) & off) == 0) {
                    twin = true;
                    break;
                }
            }
            if (twin) continue;
            tried.push_back(v);
            const std::uint64_t code = column_code(v, p);
            int next_state = state;
            if (have_best && state == 0) {
                if (code > best[static_cast<std::size_t>(p)]) continue;  // cannot beat best
                if (code < best[static_cast<std::size_t>(p)]) next_state = 1;
            }
            cur[static_cast<std::size_t>(p)] = code;
            placed[static_cast<std::size_t>(p)] = v;
            used[static_cast<std::size_t>(v)] = 1;
            search(p + 1, next_state);
            used[static_cast<std::size_t>(v)] = 0;
        }
    }

    std::vector<int> run() {
        auto color = refine_colors(g);
        const int ncolors = color.empty() ? 0 : 1 + *std::max_element(color.begin(), color.end());
        cells.assign(static_cast<std::size_t>(ncolors), {});
        for (int v = 0; v < n; ++v) cells[static_cast<std::size_t>(color[static_cast<std::size_t>(v)])].push_back(v);
        cell_of_pos.clear();
        for (int c = 0; c < ncolors; ++c)
            for (std::size_t i = 0; i < cells[static_cast<std::size_t>(c)].size(); ++i) cell_of_pos.push_back(c);

        cur.assign(static_cast<std::size_t>(n), 0);
        best.assign(static_cast<std::size_t>(n), 0);
        placed.assign(static_cast<std::size_t>(n), -1);
        used.assign(static_cast<std::size_t>(n), 0);
        search(0, 0);
        return best_order;
    }
};

}  // namespace

Graph canonical_graph(const Graph& g, int cap) {
    const int n = g.vertex_count();
    if (n > cap)
        throw std::invalid_argument("canonical_form: n=" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    if (n <= 1) return g;
    CanonSearch search(g);
    auto order = search.run();
    // order[p] = original vertex at canonical position p; relabel wants perm[v]
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) perm[static_cast<std::size_t>(order[static_cast<std::size_t>(p)])] = p;
    return relabel(g, perm);
}

CanonicalLabel canonical_form(const Graph& g, int cap) {
    return CanonicalLabel{to_graph6(canonical_graph(g, cap))};
}

namespace {

// Label-independent fingerprint that is cheap at any order.
struct IsoInvariants {
    int n;
    int m;
    std::vector<int> degrees;
    std::vector<std::vector<int>> neighbor_degrees;  // sorted per vertex, then sorted
    std::vector<std::vector<int>> distance_profiles;

    explicit IsoInvariants(const Graph& g) : n(g.vertex_count()), m(g.edge_count()) {
        degrees = g.degree_sequence();
        neighbor_degrees.reserve(static_cast<std::size_t>(n));
        distance_profiles.reserve(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<int> nd;
            for (int u : g.neighbors(v)) nd.push_back(g.degree(u));
            std::sort(nd.begin(), nd.end());
            neighbor_degrees.push_back(std::move(nd));
            auto dist = bfs_distances(g, v, 63);
            std::vector<int> counts(64, 0);
            for (int u = 0; u < n; ++u)
                if (u != v) ++counts[dist[static_cast<std::size_t>(u)]];
            distance_profiles.push_back(std::move(counts));
        }
        std::sort(neighbor_degrees.begin(), neighbor_degrees.end());
        std::sort(distance_profiles.begin(), distance_profiles.end());
    }

    bool operator==(const IsoInvariants&) const = default;
};

}  // namespace

bool are_isomorphic(const Graph& g1, const Graph& g2) {
    if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return false;
    IsoInvariants a(g1), b(g2);
    if (!(a == b)) return false;
    const int n = g1.vertex_count();
    if (n > canonical_default_cap)
        throw std::runtime_error("are_isomorphic: invariants coincide at n=" + std::to_string(n) +
                                 " beyond the canonical cap; undecided");
    return canonical_form(g1) == canonical_form(g2);
}

}  // namespace distspec
