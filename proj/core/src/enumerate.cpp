#include "distspec/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "distspec/distance.hpp"
#include "distspec/graph6.hpp"
#include "distspec/parallel.hpp"

namespace distspec {

namespace {

void check_cap(int n, const EnumerateOptions& opts) {
    if (n < 1) throw std::invalid_argument("enumerate: n must be >= 1");
    const int cap = opts.allow_large_n ? enumerate_hard_cap : enumerate_default_cap;
    if (n > cap)
        throw std::invalid_argument("enumerate: n=" + std::to_string(n) + " exceeds the cap of " + std::to_string(cap) +
                                    (opts.allow_large_n ? "" : " (pass allow_large_n for n=10)"));
}

// Canonical labels of all connected graphs on n vertices, sorted. The label
// is a canonical graph6 string, so it doubles as the representative itself.
std::vector<std::string> connected_labels(int n, const EnumerateOptions& opts) {
    std::vector<std::string> level{to_graph6(Graph(1))};
    for (int order = 2; order <= n; ++order) {
        // every connected graph on `order` vertices arises from a connected
        // graph on order-1 vertices plus one vertex joined to a nonempty
        // subset of it (delete any non-cut vertex to see this)
        const std::size_t subsets = (std::size_t{1} << (order - 1)) - 1;
        std::unordered_set<std::string> unique;
        const std::size_t chunk_parents = std::max<std::size_t>(1, (1u << 18) / subsets);
        std::vector<std::string> labels(chunk_parents * subsets);
        for (std::size_t base = 0; base < level.size(); base += chunk_parents) {
            const std::size_t count = std::min(chunk_parents, level.size() - base);
            parallel_for(count, opts.threads, [&](std::size_t p) {
                const Graph parent = from_graph6(level[base + p]);
                for (std::size_t m = 1; m <= subsets; ++m) {
                    Graph g(order);
                    for (const auto& [a, b] : parent.edges()) g.add_edge(a, b);
                    for (std::uint64_t bits = m; bits; bits &= bits - 1)
                        g.add_edge(order - 1, std::countr_zero(bits));
                    labels[p * subsets + (m - 1)] = canonical_form(g).key;
                }
            });
            for (std::size_t i = 0; i < count * subsets; ++i) unique.insert(std::move(labels[i]));
        }
        level.assign(unique.begin(), unique.end());
        std::sort(level.begin(), level.end());
    }
    return level;
}

}  // namespace

std::vector<Graph> connected_graphs(int n, const EnumerateOptions& opts) {
    check_cap(n, opts);
    auto labels = connected_labels(n, opts);
    std::vector<Graph> out;
    out.reserve(labels.size());
    for (const auto& l : labels) out.push_back(from_graph6(l));
    return out;
}

namespace {

// Map: charpoly decimal key -> indices of member labels, keeping only groups
// of size >= 2. Labels arrive sorted, so members stay sorted per group.
std::unordered_map<std::string, std::vector<std::size_t>> poly_buckets(const std::vector<std::string>& labels,
                                                                       const EnumerateOptions& opts) {
    std::vector<std::string> keys(labels.size());
    parallel_for(labels.size(), opts.threads, [&](std::size_t i) {
        keys[i] = char_poly(distance_matrix(from_graph6(labels[i]))).decimal_key();
    });
    std::unordered_map<std::string, std::vector<std::size_t>> buckets;
    for (std::size_t i = 0; i < labels.size(); ++i) buckets[keys[i]].push_back(i);
    for (auto it = buckets.begin(); it != buckets.end();) {
        if (it->second.size() < 2)
            it = buckets.erase(it);
        else
            ++it;
    }
    return buckets;
}

}  // namespace

std::vector<CospectralClass> cospectral_classes(int n, const EnumerateOptions& opts) {
    check_cap(n, opts);
    auto labels = connected_labels(n, opts);
    auto buckets = poly_buckets(labels, opts);

    std::vector<CospectralClass> classes;
    for (auto& [key, members] : buckets) {
        CospectralClass cls;
        cls.poly = char_poly(distance_matrix(from_graph6(labels[members.front()])));
        for (std::size_t m : members) {
            cls.graphs.push_back(from_graph6(labels[m]));
            // confirm the grouping beyond the hash key
            if (!(char_poly(distance_matrix(cls.graphs.back())) == cls.poly))
                throw std::logic_error("cospectral_classes: key collision with unequal polynomials");
        }
        classes.push_back(std::move(cls));
    }
    std::sort(classes.begin(), classes.end(), [](const CospectralClass& a, const CospectralClass& b) {
        return a.poly.coeffs < b.poly.coeffs;
    });
    return classes;
}

PairClassification classify_pair(const Graph& g1, const Graph& g2) {
    if (!distance_cospectral(g1, g2))
        throw std::invalid_argument("classify_pair: inputs are not exactly distance cospectral");
    if (are_isomorphic(g1, g2))
        throw std::invalid_argument("classify_pair: inputs are isomorphic");

    PairClassification rep;
    rep.edge_counts = {g1.edge_count(), g2.edge_count()};
    rep.bipartite = {is_bipartite(g1), is_bipartite(g2)};

    const Graph* sides[2] = {&g1, &g2};
    for (int side = 0; side < 2 && !rep.switching_explained; ++side) {
        const Graph& from = *sides[side];
        const Graph& to = *sides[1 - side];
        for (const auto& t : find_switch_candidates(from)) {
            const Graph switched = apply_switch(from, t);
            if (!is_connected(switched)) continue;
            if (!verify_distance_hypotheses(from, switched, t)) continue;
            if (!are_isomorphic(switched, to)) continue;
            rep.switching_explained = true;
            rep.certificate = SwitchCertificate{side, t};
            break;
        }
    }
    return rep;
}

SearchReport mine(int n, const EnumerateOptions& opts) {
    check_cap(n, opts);
    SearchReport report;
    report.n = n;
    auto labels = connected_labels(n, opts);
    report.connected_count = static_cast<std::int64_t>(labels.size());
    auto buckets = poly_buckets(labels, opts);

    for (auto& [key, members] : buckets) {
        ClassReport cls;
        cls.poly = char_poly(distance_matrix(from_graph6(labels[members.front()])));
        std::vector<Graph> graphs;
        for (std::size_t m : members) {
            graphs.push_back(from_graph6(labels[m]));
            cls.graphs.push_back(labels[m]);
            if (!(char_poly(distance_matrix(graphs.back())) == cls.poly))
                throw std::logic_error("mine: key collision with unequal polynomials");
        }
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            for (std::size_t j = i + 1; j < graphs.size(); ++j) {
                ClassPair pair;
                pair.i = static_cast<int>(i);
                pair.j = static_cast<int>(j);
                pair.info = classify_pair(graphs[i], graphs[j]);
                cls.pairs.push_back(std::move(pair));
            }
        }
        report.classes.push_back(std::move(cls));
    }
    std::sort(report.classes.begin(), report.classes.end(), [](const ClassReport& a, const ClassReport& b) {
        return a.poly.coeffs < b.poly.coeffs;
    });
    return report;
}

}  // namespace distspec
