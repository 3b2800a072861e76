#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "distspec/canonical.hpp"
#include "distspec/charpoly.hpp"
#include "distspec/constructions.hpp"
#include "distspec/distance.hpp"
#include "distspec/graph.hpp"
#include "distspec/jacobi.hpp"
#include "distspec/random_graphs.hpp"

using namespace distspec;

TEST_CASE("gadget reconstruction") {
    const Graph g = gadget_graph_g();
    const Graph h = gadget_graph_h();
    CHECK(g.edge_count() == 17);
    CHECK(h.edge_count() == 16);
    CHECK(distance_matrix(g) == gadget_distance_matrix_g());
    CHECK(distance_matrix(h) == gadget_distance_matrix_h());

    SUBCASE("vertex 8 of G has the single neighbor 5") {
        CHECK(g.degree(8) == 1);
        CHECK(g.has_edge(8, 5));
    }
    SUBCASE("rows 0 and 1 coincide between the two matrices") {
        const auto& dg = gadget_distance_matrix_g();
        const auto& dh = gadget_distance_matrix_h();
        for (int i : {0, 1})
            for (int j = 0; j < 10; ++j) CHECK(dg.at(i, j) == dh.at(i, j));
    }
}

TEST_CASE("build_pair") {
    SUBCASE("K1 reproduces the gadgets") {
        auto [gk, hk] = build_pair(Graph(1), 0, 0);
        CHECK(gk == gadget_graph_g());
        CHECK(hk == gadget_graph_h());
    }
    SUBCASE("K = P2 at v=0, u=0") {
        auto [gk, hk] = build_pair(path_graph(2), 0, 0);
        CHECK(gk.vertex_count() == 11);
        CHECK(hk.vertex_count() == 11);
        CHECK(gk.edge_count() == 18);
        CHECK(hk.edge_count() == 17);
    }
    SUBCASE("K = C5 pair is exactly cospectral") {
        auto [gk, hk] = build_pair(cycle_graph(5), 0, 0);
        CHECK(distance_cospectral(gk, hk));
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(build_pair(Graph(1), 0, 2), std::invalid_argument);
        CHECK_THROWS_AS(build_pair(Graph(1), 1, 0), std::invalid_argument);
        CHECK_THROWS_AS(build_pair(Graph(2), 0, 0), std::invalid_argument);  // disconnected K
    }
}

TEST_CASE("gadget_delta") {
    SUBCASE("vanishes when the driving entries vanish") {
        std::vector<double> x(10, 0.0);
        x[0] = 1.0;
        x[1] = -2.0;
        x[2] = 0.5;  // entries 3,5,7,8 stay zero
        const auto delta = gadget_delta(x, 1.25, 10);
        for (double d : delta) CHECK(d == 0.0);
    }
    SUBCASE("case-table sum collapses to -2 beta") {
        std::mt19937_64 rng(3);
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        for (int t = 0; t < 20; ++t) {
            std::vector<double> x(12);
            for (double& e : x) e = dist(rng);
            const double lambda = 2.0 + dist(rng);
            const auto delta = gadget_delta(x, lambda, 12);
            const double beta = gadget_beta(x, lambda);
            const double sum = delta[2] + delta[4] + delta[5] + delta[6] + delta[8] + delta[9];
            CHECK(sum == doctest::Approx(-2.0 * beta).epsilon(1e-12));
        }
    }
    SUBCASE("lambda guard") {
        std::vector<double> x(10, 0.1);
        CHECK_THROWS_AS(gadget_delta(x, -0.5 + 1e-9, 10), std::invalid_argument);
    }
    SUBCASE("maps eigenvectors of D(G) to eigenvectors of D(H), K = K1") {
        const auto dg = gadget_distance_matrix_g();
        const RealMatrix mh = RealMatrix::from(gadget_distance_matrix_h());
        const double bound = 1e-8 * 10 * 4;
        for (const auto& pr : eigen_decomposition(RealMatrix::from(dg))) {
            if (std::fabs(pr.lambda + 0.5) < 1e-6) continue;
            auto delta = gadget_delta(pr.x, pr.lambda, 10);
            std::vector<double> y = pr.x;
            for (int i = 0; i < 10; ++i) y[static_cast<std::size_t>(i)] += delta[static_cast<std::size_t>(i)];
            CHECK(residual(mh, pr.lambda, y) <= bound);
        }
    }
}

TEST_CASE("verify_gadget_pair") {
    SUBCASE("K1 at u=0") {
        const auto rep = verify_gadget_pair(Graph(1), 0, 0);
        CHECK(rep.passed);
        CHECK(rep.cospectral);
        CHECK(rep.perturbation_checked);
        CHECK(rep.records.size() + static_cast<std::size_t>(rep.skipped) == 10);
        CHECK(rep.max_residual_after <= rep.tolerance);
        // numeric skip count must match the exact multiplicity of -1/2 (zero)
        CHECK(rep.skipped == root_multiplicity_at_neg_half(char_poly(gadget_distance_matrix_g())));
    }
    SUBCASE("star with the center identified") {
        const auto rep = verify_gadget_pair(star_graph(3), 0, 0);
        CHECK(rep.passed);
        CHECK(rep.cospectral);
    }
    SUBCASE("u=1 runs the exact check only") {
        const auto rep = verify_gadget_pair(path_graph(3), 1, 1);
        CHECK(rep.passed);
        CHECK(rep.cospectral);
        CHECK_FALSE(rep.perturbation_checked);
        CHECK(rep.records.empty());
    }
}

TEST_CASE("rowsum identities") {
    const Graph gk = identify(gadget_graph_g(), 0, cycle_graph(4), 0);
    const auto d = distance_matrix(gk);
    const double bound = 1e-8 * gk.vertex_count() * d.max_entry();
    SUBCASE("hold on every eigenpair") {
        for (const auto& pr : eigen_decomposition(RealMatrix::from(d))) {
            const auto [r1, r2, r3] = rowsum_identities_check(gk, pr);
            CHECK(r1 <= bound);
            CHECK(r2 <= bound);
            CHECK(r3 <= bound);
        }
    }
    SUBCASE("zero vector is degenerate-zero") {
        EigenPair zero;
        zero.lambda = 2.5;
        zero.x.assign(static_cast<std::size_t>(gk.vertex_count()), 0.0);
        const auto [r1, r2, r3] = rowsum_identities_check(gk, zero);
        CHECK(r1 == 0.0);
        CHECK(r2 == 0.0);
        CHECK(r3 == 0.0);
    }
    SUBCASE("random non-eigenvector violates at least one identity") {
        std::mt19937_64 rng(17);
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        int violated = 0;
        for (int t = 0; t < 10; ++t) {
            EigenPair fake;
            fake.lambda = 0.75;
            fake.x.resize(static_cast<std::size_t>(gk.vertex_count()));
            for (double& e : fake.x) e = dist(rng);
            const auto [r1, r2, r3] = rowsum_identities_check(gk, fake);
            if (r1 > 1e-6 || r2 > 1e-6 || r3 > 1e-6) ++violated;
        }
        CHECK(violated == 10);
    }
}

TEST_CASE("m-vector identity of the proof, entrywise exact") {
    // rows 2-4-5-6+8+9 of D(GK) collapse to 2e3+e4+2e5+e6+2e7
    std::mt19937_64 rng(21);
    for (int t = 0; t < 8; ++t) {
        const int nk = 1 + static_cast<int>(rng() % 6);
        const Graph k = random_connected_graph(rng, nk, 0.5);
        const int v = static_cast<int>(rng() % static_cast<std::uint64_t>(nk));
        const Graph gk = identify(gadget_graph_g(), 0, k, v);
        const auto d = distance_matrix(gk);
        const int n = gk.vertex_count();
        for (int col = 0; col < n; ++col) {
            const int m = d.at(2, col) - d.at(4, col) - d.at(5, col) - d.at(6, col) + d.at(8, col) + d.at(9, col);
            int expect = 0;
            if (col == 3 || col == 5 || col == 7) expect = 2;
            if (col == 4 || col == 6) expect = 1;
            CHECK(m == expect);
        }
    }
}

TEST_CASE("family") {
    SUBCASE("k=1 is the gadget pair") {
        const auto fam = family(1);
        REQUIRE(fam.size() == 2);
        CHECK(are_isomorphic(fam[0], gadget_graph_g()));
        CHECK(are_isomorphic(fam[1], gadget_graph_h()));
    }
    SUBCASE("k=2: three mutually cospectral graphs on 19 vertices") {
        const auto fam = family(2);
        REQUIRE(fam.size() == 3);
        for (const auto& g : fam) CHECK(g.vertex_count() == 19);
        CHECK(fam[0].edge_count() == 34);
        CHECK(fam[1].edge_count() == 33);
        CHECK(fam[2].edge_count() == 32);
        CHECK(distance_cospectral(fam[0], fam[1]));
        CHECK(distance_cospectral(fam[1], fam[2]));
        CHECK(distance_cospectral(fam[0], fam[2]));
    }
    SUBCASE("k=3: edge counts 48..51, all charpolys equal") {
        const auto fam = family(3);
        REQUIRE(fam.size() == 4);
        const auto p0 = char_poly(distance_matrix(fam[0]));
        for (std::size_t j = 0; j < fam.size(); ++j) {
            CHECK(fam[j].edge_count() == 51 - static_cast<int>(j));
            CHECK(char_poly(distance_matrix(fam[j])) == p0);
        }
    }
    SUBCASE("cap") {
        CHECK_THROWS_AS(family(0), std::invalid_argument);
        CHECK_THROWS_AS(family(7), std::invalid_argument);
    }
}

TEST_CASE("randomized identification sweep keeps the edge-count law") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 12; ++t) {
        const int nk = 2 + static_cast<int>(rng() % 7);
        Graph k = (t % 3 == 0) ? random_tree(rng, nk) : random_connected_graph(rng, nk, 0.45);
        const int v = static_cast<int>(rng() % static_cast<std::uint64_t>(nk));
        const int u = static_cast<int>(rng() % 2);
        auto [gk, hk] = build_pair(k, v, u);
        CHECK(gk.edge_count() - hk.edge_count() == 1);
        CHECK(distance_cospectral(gk, hk));
        CHECK_FALSE(are_isomorphic(gk, hk));
    }
}
