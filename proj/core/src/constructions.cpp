#include "distspec/constructions.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

namespace distspec {

namespace {

// Authoritative data for the two gadgets: their full distance matrices.
// Adjacency is recovered as "entry equals 1".
constexpr std::uint16_t kDistG[10][10] = {
    {0, 1, 1, 1, 2, 1, 2, 2, 2, 2},
    {1, 0, 2, 2, 3, 1, 3, 1, 2, 3},
    {1, 2, 0, 1, 1, 2, 1, 3, 3, 1},
    {1, 2, 1, 0, 1, 1, 1, 2, 2, 2},
    {2, 3, 1, 1, 0, 2, 2, 3, 3, 1},
    {1, 1, 2, 1, 2, 0, 2, 1, 1, 3},
    {2, 3, 1, 1, 2, 2, 0, 3, 3, 1},
    {2, 1, 3, 2, 3, 1, 3, 0, 2, 4},
    {2, 2, 3, 2, 3, 1, 3, 2, 0, 4},
    {2, 3, 1, 2, 1, 3, 1, 4, 4, 0},
};

constexpr std::uint16_t kDistH[10][10] = {
    {0, 1, 1, 1, 2, 1, 2, 2, 2, 2},
    {1, 0, 2, 2, 3, 1, 3, 1, 2, 3},
    {1, 2, 0, 1, 1, 1, 1, 3, 2, 1},
    {1, 2, 1, 0, 2, 2, 2, 2, 1, 2},
    {2, 3, 1, 2, 0, 2, 2, 4, 3, 1},
    {1, 1, 1, 2, 2, 0, 2, 2, 1, 2},
    {2, 3, 1, 2, 2, 2, 0, 4, 3, 1},
    {2, 1, 3, 2, 4, 2, 4, 0, 1, 4},
    {2, 2, 2, 1, 3, 1, 3, 1, 0, 3},
    {2, 3, 1, 2, 1, 2, 1, 4, 3, 0},
};

DistanceMatrix build_matrix(const std::uint16_t (&table)[10][10]) {
    std::vector<std::uint16_t> entries;
    entries.reserve(100);
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) entries.push_back(table[i][j]);
    return DistanceMatrix::from_entries(10, std::move(entries));
}

Graph graph_from_matrix(const DistanceMatrix& d) {
    Graph g(d.size());
    for (int i = 0; i < d.size(); ++i)
        for (int j = i + 1; j < d.size(); ++j)
            if (d.at(i, j) == 1) g.add_edge(i, j);
    return g;
}

// One-time self-check: BFS on the reconstructed gadgets must reproduce the
// stored tables entrywise.
void self_check() {
    static std::once_flag flag;
    std::call_once(flag, [] {
        const auto& dg = gadget_distance_matrix_g();
        const auto& dh = gadget_distance_matrix_h();
        const Graph g = graph_from_matrix(dg);
        const Graph h = graph_from_matrix(dh);
        if (!(distance_matrix(g) == dg) || !(distance_matrix(h) == dh))
            throw std::logic_error("gadget self-check failed: BFS does not reproduce the stored distance tables");
        if (g.edge_count() != 17 || h.edge_count() != 16)
            throw std::logic_error("gadget self-check failed: unexpected edge counts");
    });
}

}  // namespace

const DistanceMatrix& gadget_distance_matrix_g() {
    static const DistanceMatrix d = build_matrix(kDistG);
    return d;
}

const DistanceMatrix& gadget_distance_matrix_h() {
    static const DistanceMatrix d = build_matrix(kDistH);
    return d;
}

Graph gadget_graph_g() {
    self_check();
    return graph_from_matrix(gadget_distance_matrix_g());
}

Graph gadget_graph_h() {
    self_check();
    return graph_from_matrix(gadget_distance_matrix_h());
}

std::pair<Graph, Graph> build_pair(const Graph& k, int v, int u) {
    if (u != 0 && u != 1) throw std::invalid_argument("build_pair: u must be 0 or 1");
    if (v < 0 || v >= k.vertex_count()) throw std::invalid_argument("build_pair: v out of range");
    if (!is_connected(k)) throw std::invalid_argument("build_pair: K must be connected");
    return {identify(gadget_graph_g(), u, k, v), identify(gadget_graph_h(), u, k, v)};
}

namespace {

constexpr double kLambdaGuard = 1e-6;

void check_delta_preconditions(const std::vector<double>& x, double lambda, int n) {
    if (n < 10 || static_cast<int>(x.size()) != n)
        throw std::invalid_argument("gadget_delta: vector must cover the 10 gadget vertices");
    if (std::fabs(2.0 * lambda + 1.0) < 2.0 * kLambdaGuard)
        throw std::invalid_argument("gadget_delta: lambda too close to -1/2");
}

}  // namespace

double gadget_alpha(const std::vector<double>& x, double lambda) {
    return (-x[3] - x[5] - x[7] - x[8]) / (2.0 * lambda + 1.0);
}

double gadget_beta(const std::vector<double>& x, double lambda) {
    return (lambda + 1.0) / (2.0 * lambda + 1.0) * (x[5] + x[8]) -
           lambda / (2.0 * lambda + 1.0) * (x[3] + x[7]);
}

std::vector<double> gadget_delta(const std::vector<double>& x, double lambda, int n) {
    check_delta_preconditions(x, lambda, n);
    const double alpha = gadget_alpha(x, lambda);
    const double beta = gadget_beta(x, lambda);
    std::vector<double> delta(static_cast<std::size_t>(n), 0.0);
    delta[2] = alpha;
    delta[9] = alpha;
    delta[4] = -alpha;
    delta[6] = -alpha;
    delta[3] = beta;
    delta[7] = beta;
    delta[5] = -alpha - beta;
    delta[8] = alpha - beta;
    return delta;
}

std::array<double, 3> rowsum_identities_check(const Graph& gk, const EigenPair& pair) {
    const int n = gk.vertex_count();
    if (n < 10 || static_cast<int>(pair.x.size()) != n)
        throw std::invalid_argument("rowsum_identities_check: eigenvector does not match the graph order");
    const auto& x = pair.x;
    const double l = pair.lambda;
    const double r1 = std::fabs(2 * x[3] + x[4] + 2 * x[5] + x[6] + 2 * x[7] -
                                l * (x[2] - x[4] - x[5] - x[6] + x[8] + x[9]));
    const double r2 = std::fabs(x[2] - x[3] - 3 * x[5] - x[7] - 3 * x[8] + x[9] -
                                l * (-x[2] - x[3] + x[4] + 2 * x[5] + x[6] - x[7] - x[9]));
    const double r3 = std::fabs(x[2] + x[3] + x[4] - x[5] + x[6] + x[7] - 3 * x[8] + x[9] -
                                l * (-x[3] - x[7] + x[5] + x[8]));
    return {r1, r2, r3};
}

PerturbationReport verify_gadget_pair(const Graph& k, int v, int u, double tol_factor) {
    if (tol_factor <= 0.0) throw std::invalid_argument("verify_gadget_pair: tolerance must be positive");
    auto [gk, hk] = build_pair(k, v, u);
    const int n = gk.vertex_count();

    const DistanceMatrix dgk = distance_matrix(gk);
    const DistanceMatrix dhk = distance_matrix(hk);

    PerturbationReport report;
    report.cospectral = char_poly(dgk) == char_poly(dhk);
    const double scale = static_cast<double>(std::max(dgk.max_entry(), dhk.max_entry()));
    report.tolerance = tol_factor * n * scale;

    if (u == 0) {
        report.perturbation_checked = true;
        const RealMatrix mh = RealMatrix::from(dhk);
        auto pairs = eigen_decomposition(RealMatrix::from(dgk));
        for (const auto& pr : pairs) {
            if (std::fabs(pr.lambda + 0.5) < kLambdaGuard) {
                ++report.skipped;
                continue;
            }
            PerturbationRecord rec;
            rec.lambda = pr.lambda;
            rec.alpha = gadget_alpha(pr.x, pr.lambda);
            rec.beta = gadget_beta(pr.x, pr.lambda);
            rec.residual_before = residual(mh, pr.lambda, pr.x);
            auto delta = gadget_delta(pr.x, pr.lambda, n);
            std::vector<double> y(pr.x);
            for (int i = 0; i < n; ++i) y[static_cast<std::size_t>(i)] += delta[static_cast<std::size_t>(i)];
            rec.residual_after = residual(mh, pr.lambda, y);
            report.max_residual_after = std::max(report.max_residual_after, rec.residual_after);
            report.records.push_back(rec);
        }
        report.passed = report.cospectral && report.max_residual_after <= report.tolerance;
    } else {
        // the perturbation constants for the u = 1 root are not available;
        // the exact spectral check stands alone
        report.perturbation_checked = false;
        report.passed = report.cospectral;
    }
    return report;
}

std::vector<Graph> family(int k) {
    if (k < 1) throw std::invalid_argument("family: k must be at least 1");
    if (9 * k + 1 > Graph::max_vertices)
        throw std::invalid_argument("family: 9k+1 = " + std::to_string(9 * k + 1) + " exceeds the 62-vertex cap");
    const Graph g = gadget_graph_g();
    const Graph h = gadget_graph_h();
    std::vector<Graph> members;
    members.reserve(static_cast<std::size_t>(k) + 1);
    for (int j = 0; j <= k; ++j) {
        // j copies of H, k-j copies of G, all identified at vertex 0
        Graph acc = (j > 0) ? h : g;
        for (int c = 1; c < k; ++c) acc = identify(acc, 0, (c < j) ? h : g, 0);
        members.push_back(acc);
    }
    return members;
}

}  // namespace distspec
