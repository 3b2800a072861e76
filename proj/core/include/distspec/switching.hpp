#ifndef DISTSPEC_SWITCHING_HPP
#define DISTSPEC_SWITCHING_HPP

#include <string>
#include <utility>
#include <vector>

#include "distspec/constructions.hpp"
#include "distspec/distance.hpp"
#include "distspec/graph.hpp"

namespace distspec {

/// A local distance-switching candidate. In G: s is adjacent to g1,g2 and
/// non-adjacent to h1,h2. The c-function c(v) = d(v,g1)+d(v,g2)-d(v,h1)-d(v,h2)
/// takes value -2 on A, 0 on B, -k on {g1,g2} and +k on {h1,h2}, where A,B
/// partition the remaining vertices and k is in {0,1,2}.
struct SwitchTuple {
    int s = -1;
    int g1 = -1, g2 = -1;  // g1 < g2
    int h1 = -1, h2 = -1;  // h1 < h2
    int k = 0;
    std::vector<int> a;    // sorted
    std::vector<int> b;    // sorted

    bool operator==(const SwitchTuple&) const = default;
};

/// Exact c-values over all vertices. The four marked vertices must be
/// distinct; G must be connected.
std::vector<int> c_values(const Graph& g, int g1, int g2, int h1, int h2);

/// All normalized candidate tuples of G (g1<g2, h1<h2); the (g,h) roles are
/// not symmetrized. Empty result is normal.
std::vector<SwitchTuple> find_switch_candidates(const Graph& g);

/// E(H) = E(G) minus {(s,g1),(s,g2)} plus {(s,h1),(s,h2)}. Validates the
/// tuple invariants in G and throws if they fail.
Graph apply_switch(const Graph& g, const SwitchTuple& t);

/// The distance hypotheses of the switching theorem:
///  (a) every row indexed by B agrees between D(G) and D(H) on all of V;
///  (b) every row indexed by A agrees off {g1,g2,h1,h2} and shifts by +1 on
///      the g-columns and -1 on the h-columns.
/// A disconnected H is reported false (theorem inapplicable), with the
/// reason in *reason when given.
bool verify_distance_hypotheses(const Graph& g, const Graph& h, const SwitchTuple& t,
                                std::string* reason = nullptr);

/// The switching perturbation: y = x + delta maps eigenvectors of D(G) to
/// eigenvectors of D(H) for lambda != -k. delta is S/(lambda+k) on {g1,g2},
/// -S/(lambda+k) on {h1,h2} and 0 elsewhere, with S = sum of x over A.
/// Throws when |lambda + k| < 1e-6.
std::vector<double> switch_delta(const std::vector<double>& x, double lambda,
                                    const SwitchTuple& t, int n);

/// | (lambda+k)(x_g1 + x_g2 - x_h1 - x_h2) + 2 * sum_{j in A} x_j |,
/// zero for genuine eigenpairs.
double switch_row_identity_residual(const std::vector<double>& x, double lambda,
                                       const SwitchTuple& t);

/// Full verification for one candidate: requires the distance hypotheses,
/// runs the delta-map over every eigenpair with |lambda+k| >= 1e-6, asserts
/// exact cospectrality of (G, H), and cross-checks the skipped count against
/// the exact multiplicity of -k.
PerturbationReport verify_switch_pair(const Graph& g, const SwitchTuple& t, double tol_factor = 1e-8);

/// Identification extension: for u outside {g1,g2,h1,h2} and any connected K,
/// (GK(u,v), HK(u,v)) is again a switching pair. Extends the A/B partition
/// (the K-portion joins the side of u), asserts the K-portion c-values equal
/// c(u), re-verifies the distance hypotheses on the extended tuple, and
/// asserts exact cospectrality. Returns (GK, HK).
std::pair<Graph, Graph> extend_switch_pair(const Graph& g, const SwitchTuple& t, int u,
                                       const Graph& k, int v);

/// The extended tuple used by extend_switch_pair (exposed for reporting).
SwitchTuple extend_tuple(const Graph& g, const SwitchTuple& t, int u, int n_total);

}  // namespace distspec

#endif
