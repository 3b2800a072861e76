#include "distspec/switching.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "distspec/charpoly.hpp"
#include "distspec/jacobi.hpp"

namespace distspec {

namespace {

constexpr double kLambdaGuard = 1e-6;

std::vector<int> c_values_from(const DistanceMatrix& d, int g1, int g2, int h1, int h2) {
    const int n = d.size();
    std::vector<int> c(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        c[static_cast<std::size_t>(v)] =
            static_cast<int>(d.at(v, g1)) + static_cast<int>(d.at(v, g2)) -
            static_cast<int>(d.at(v, h1)) - static_cast<int>(d.at(v, h2));
    return c;
}

void check_tuple_vertices(const Graph& g, const SwitchTuple& t) {
    const int n = g.vertex_count();
    const int vs[5] = {t.s, t.g1, t.g2, t.h1, t.h2};
    for (int v : vs)
        if (v < 0 || v >= n) throw std::invalid_argument("switch tuple: vertex out of range");
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (vs[i] == vs[j]) throw std::invalid_argument("switch tuple: vertices must be distinct");
}

// Validates all SwitchTuple invariants of t inside g, including the
// c-value partition; throws on violation.
void check_tuple_invariants(const Graph& g, const SwitchTuple& t) {
    check_tuple_vertices(g, t);
    if (!g.has_edge(t.s, t.g1) || !g.has_edge(t.s, t.g2))
        throw std::invalid_argument("switch tuple: s must be adjacent to g1 and g2");
    if (g.has_edge(t.s, t.h1) || g.has_edge(t.s, t.h2))
        throw std::invalid_argument("switch tuple: s must not be adjacent to h1 or h2");
    if (t.k < 0 || t.k > 2) throw std::invalid_argument("switch tuple: k must be in {0,1,2}");

    const auto c = c_values(g, t.g1, t.g2, t.h1, t.h2);
    if (c[static_cast<std::size_t>(t.g1)] != -t.k || c[static_cast<std::size_t>(t.g2)] != -t.k ||
        c[static_cast<std::size_t>(t.h1)] != t.k || c[static_cast<std::size_t>(t.h2)] != t.k)
        throw std::invalid_argument("switch tuple: c-values on {g1,g2,h1,h2} do not match -k/-k/+k/+k");

    std::vector<char> in_a(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<char> in_b(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : t.a) in_a[static_cast<std::size_t>(v)] = 1;
    for (int v : t.b) in_b[static_cast<std::size_t>(v)] = 1;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (v == t.g1 || v == t.g2 || v == t.h1 || v == t.h2) {
            if (in_a[static_cast<std::size_t>(v)] || in_b[static_cast<std::size_t>(v)])
                throw std::invalid_argument("switch tuple: marked vertex listed in A or B");
            continue;
        }
        const int cv = c[static_cast<std::size_t>(v)];
        if (cv == -2 && in_a[static_cast<std::size_t>(v)] && !in_b[static_cast<std::size_t>(v)]) continue;
        if (cv == 0 && in_b[static_cast<std::size_t>(v)] && !in_a[static_cast<std::size_t>(v)]) continue;
        throw std::invalid_argument("switch tuple: A/B partition inconsistent with c-values");
    }
}

}  // namespace

std::vector<int> c_values(const Graph& g, int g1, int g2, int h1, int h2) {
    const int vs[4] = {g1, g2, h1, h2};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (vs[i] == vs[j]) throw std::invalid_argument("c_values: vertices must be distinct");
    return c_values_from(distance_matrix(g), g1, g2, h1, h2);
}

std::vector<SwitchTuple> find_switch_candidates(const Graph& g) {
    const int n = g.vertex_count();
    const DistanceMatrix d = distance_matrix(g);
    std::vector<SwitchTuple> out;

    for (int s = 0; s < n; ++s) {
        const auto nbs = g.neighbors(s);
        std::vector<int> nonnbs;
        for (int v = 0; v < n; ++v)
            if (v != s && !g.has_edge(s, v)) nonnbs.push_back(v);
        if (nbs.size() < 2 || nonnbs.size() < 2) continue;

        for (std::size_t gi = 0; gi < nbs.size(); ++gi) {
            for (std::size_t gj = gi + 1; gj < nbs.size(); ++gj) {
                const int g1 = nbs[gi], g2 = nbs[gj];
                for (std::size_t hi = 0; hi < nonnbs.size(); ++hi) {
                    for (std::size_t hj = hi + 1; hj < nonnbs.size(); ++hj) {
                        const int h1 = nonnbs[hi], h2 = nonnbs[hj];
                        const auto c = c_values_from(d, g1, g2, h1, h2);
                        const int k = -c[static_cast<std::size_t>(g1)];
                        if (k < 0 || k > 2) continue;
                        if (c[static_cast<std::size_t>(g2)] != -k ||
                            c[static_cast<std::size_t>(h1)] != k ||
                            c[static_cast<std::size_t>(h2)] != k)
                            continue;
                        SwitchTuple t;
                        t.s = s;
                        t.g1 = g1;
                        t.g2 = g2;
                        t.h1 = h1;
                        t.h2 = h2;
                        t.k = k;
                        bool ok = true;
                        for (int v = 0; v < n && ok; ++v) {
                            if (v == g1 || v == g2 || v == h1 || v == h2) continue;
                            const int cv = c[static_cast<std::size_t>(v)];
                            if (cv == -2)
                                t.a.push_back(v);
                            else if (cv == 0)
                                t.b.push_back(v);
                            else
                                ok = false;
                        }
                        if (ok) out.push_back(std::move(t));
                    }
                }
            }
        }
    }
    return out;
}

Graph apply_switch(const Graph& g, const SwitchTuple& t) {
    check_tuple_invariants(g, t);
    Graph h = g;
    h.remove_edge(t.s, t.g1);
    h.remove_edge(t.s, t.g2);
    h.add_edge(t.s, t.h1);
    h.add_edge(t.s, t.h2);
    return h;
}

bool verify_distance_hypotheses(const Graph& g, const Graph& h, const SwitchTuple& t, std::string* reason) {
    check_tuple_vertices(g, t);
    if (g.vertex_count() != h.vertex_count()) {
        if (reason) *reason = "vertex sets differ";
        return false;
    }
    if (!is_connected(h)) {
        if (reason) *reason = "switched graph is disconnected; distance matrix undefined";
        return false;
    }
    const int n = g.vertex_count();
    const DistanceMatrix dg = distance_matrix(g);
    const DistanceMatrix dh = distance_matrix(h);

    for (int v : t.b) {
        for (int u = 0; u < n; ++u) {
            if (dh.at(v, u) != dg.at(v, u)) {
                if (reason)
                    *reason = "row " + std::to_string(v) + " of B changes at column " + std::to_string(u);
                return false;
            }
        }
    }
    for (int w : t.a) {
        for (int u = 0; u < n; ++u) {
            if (u == t.g1 || u == t.g2 || u == t.h1 || u == t.h2) continue;
            if (dh.at(w, u) != dg.at(w, u)) {
                if (reason)
                    *reason = "row " + std::to_string(w) + " of A changes at column " + std::to_string(u);
                return false;
            }
        }
        for (int u : {t.g1, t.g2}) {
            if (static_cast<int>(dh.at(w, u)) != static_cast<int>(dg.at(w, u)) + 1) {
                if (reason)
                    *reason = "row " + std::to_string(w) + " of A does not shift +1 at g-column " + std::to_string(u);
                return false;
            }
        }
        for (int u : {t.h1, t.h2}) {
            if (static_cast<int>(dh.at(w, u)) != static_cast<int>(dg.at(w, u)) - 1) {
                if (reason)
                    *reason = "row " + std::to_string(w) + " of A does not shift -1 at h-column " + std::to_string(u);
                return false;
            }
        }
    }
    return true;
}

std::vector<double> switch_delta(const std::vector<double>& x, double lambda, const SwitchTuple& t, int n) {
    if (static_cast<int>(x.size()) != n) throw std::invalid_argument("switch_delta: dimension mismatch");
    if (std::fabs(lambda + t.k) < kLambdaGuard)
        throw std::invalid_argument("switch_delta: lambda too close to -k");
    double s = 0.0;
    for (int j : t.a) s += x[static_cast<std::size_t>(j)];
    const double shift = s / (lambda + t.k);
    std::vector<double> delta(static_cast<std::size_t>(n), 0.0);
    delta[static_cast<std::size_t>(t.g1)] = shift;
    delta[static_cast<std::size_t>(t.g2)] = shift;
    delta[static_cast<std::size_t>(t.h1)] = -shift;
    delta[static_cast<std::size_t>(t.h2)] = -shift;
    return delta;
}

double switch_row_identity_residual(const std::vector<double>& x, double lambda, const SwitchTuple& t) {
    double s = 0.0;
    for (int j : t.a) s += x[static_cast<std::size_t>(j)];
    const double lhs = (lambda + t.k) * (x[static_cast<std::size_t>(t.g1)] + x[static_cast<std::size_t>(t.g2)] -
                                         x[static_cast<std::size_t>(t.h1)] - x[static_cast<std::size_t>(t.h2)]);
    return std::fabs(lhs + 2.0 * s);
}

PerturbationReport verify_switch_pair(const Graph& g, const SwitchTuple& t, double tol_factor) {
    if (tol_factor <= 0.0) throw std::invalid_argument("verify_switch_pair: tolerance must be positive");
    const Graph h = apply_switch(g, t);
    std::string reason;
    if (!verify_distance_hypotheses(g, h, t, &reason))
        throw std::invalid_argument("verify_switch_pair: distance hypotheses fail: " + reason);

    const int n = g.vertex_count();
    const DistanceMatrix dg = distance_matrix(g);
    const DistanceMatrix dh = distance_matrix(h);
    const CharPoly pg = char_poly(dg);

    PerturbationReport report;
    report.cospectral = pg == char_poly(dh);
    report.perturbation_checked = true;
    const double scale = static_cast<double>(std::max(dg.max_entry(), dh.max_entry()));
    report.tolerance = tol_factor * n * scale;

    const RealMatrix mh = RealMatrix::from(dh);
    auto pairs = eigen_decomposition(RealMatrix::from(dg));
    for (const auto& pr : pairs) {
        if (std::fabs(pr.lambda + t.k) < kLambdaGuard) {
            ++report.skipped;
            continue;
        }
        PerturbationRecord rec;
        rec.lambda = pr.lambda;
        double s = 0.0;
        for (int j : t.a) s += pr.x[static_cast<std::size_t>(j)];
        rec.alpha = s / (pr.lambda + t.k);  // the single perturbation constant
        rec.beta = 0.0;
        rec.residual_before = residual(mh, pr.lambda, pr.x);
        auto delta = switch_delta(pr.x, pr.lambda, t, n);
        std::vector<double> y(pr.x);
        for (int i = 0; i < n; ++i) y[static_cast<std::size_t>(i)] += delta[static_cast<std::size_t>(i)];
        rec.residual_after = residual(mh, pr.lambda, y);
        report.max_residual_after = std::max(report.max_residual_after, rec.residual_after);
        report.records.push_back(rec);
    }

    const int exact_mult = root_multiplicity_at_integer(pg, -static_cast<long long>(t.k));
    if (report.skipped != exact_mult)
        throw std::runtime_error("verify_switch_pair: numeric skip count " + std::to_string(report.skipped) +
                                 " does not match exact multiplicity " + std::to_string(exact_mult));
    report.passed = report.cospectral && report.max_residual_after <= report.tolerance;
    return report;
}

SwitchTuple extend_tuple(const Graph& g, const SwitchTuple& t, int u, int n_total) {
    const int ng = g.vertex_count();
    SwitchTuple ext = t;
    const bool u_in_a = std::find(t.a.begin(), t.a.end(), u) != t.a.end();
    for (int w = ng; w < n_total; ++w) {
        if (u_in_a)
            ext.a.push_back(w);
        else
            ext.b.push_back(w);
    }
    std::sort(ext.a.begin(), ext.a.end());
    std::sort(ext.b.begin(), ext.b.end());
    return ext;
}

std::pair<Graph, Graph> extend_switch_pair(const Graph& g, const SwitchTuple& t, int u, const Graph& k, int v) {
    check_tuple_invariants(g, t);
    if (u == t.g1 || u == t.g2 || u == t.h1 || u == t.h2)
        throw std::invalid_argument("extend_switch_pair: u must avoid {g1,g2,h1,h2}");
    const Graph h = apply_switch(g, t);
    std::string reason;
    if (!verify_distance_hypotheses(g, h, t, &reason))
        throw std::invalid_argument("extend_switch_pair: base pair fails the distance hypotheses: " + reason);

    const Graph gk = identify(g, u, k, v);
    const Graph hk = identify(h, u, k, v);
    const int n = gk.vertex_count();

    // the K-portion joins the side of u, and its c-values must equal c(u)
    const SwitchTuple ext = extend_tuple(g, t, u, n);
    const auto c_ext = c_values(gk, t.g1, t.g2, t.h1, t.h2);
    const auto c_base = c_values(g, t.g1, t.g2, t.h1, t.h2);
    for (int w = g.vertex_count(); w < n; ++w)
        if (c_ext[static_cast<std::size_t>(w)] != c_base[static_cast<std::size_t>(u)])
            throw std::runtime_error("extend_switch_pair: K-portion c-value differs from c(u) at vertex " + std::to_string(w));

    if (!verify_distance_hypotheses(gk, hk, ext, &reason))
        throw std::runtime_error("extend_switch_pair: extended pair fails the distance hypotheses: " + reason);
    if (!distance_cospectral(gk, hk))
        throw std::runtime_error("extend_switch_pair: identified pair is not exactly cospectral");
    return {gk, hk};
}

}  // namespace distspec
