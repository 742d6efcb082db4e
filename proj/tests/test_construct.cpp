#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "sro/construct.hpp"

using namespace sro;

namespace {

Graph random_graph(int n, std::mt19937& rng) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng() & 1)
                g.add_edge(i, j);
    return g;
}

// Exact proof that the largest root of x^2 + b*x + c is an eigenvalue of g:
// assign 1 to block 0 and t - m to block 1 and check A*x = t*x in
// Z[t]/(t^2 + b*t + c). Evaluating at the largest root turns x into a
// nonzero eigenvector, so the root's minimal polynomial divides the
// characteristic polynomial. Costs O(n^2) integer work, independent of any
// characteristic-polynomial computation.
bool quadratic_eigen_certificate(const Graph& g, long long b, long long c,
                                 const std::vector<std::vector<int>>& blocks) {
    REQUIRE(blocks.size() == 2);
    const long long m = -(b >= 0 ? b / 2 : -((-b + 1) / 2));
    std::vector<int> owner(g.order(), -1);
    for (int i = 0; i < 2; ++i)
        for (int v : blocks[i])
            owner[v] = i;
    // value on block i as u + w*t
    const long long bu[2] = {1, -m}, bw[2] = {0, 1};
    for (int v = 0; v < g.order(); ++v) {
        long long su = 0, sw = 0;
        g.for_each_neighbor(v, [&](int nb) {
            su += bu[owner[nb]];
            sw += bw[owner[nb]];
        });
        // t * (u + w*t) = -c*w + (u - b*w)*t
        const long long u = bu[owner[v]], w = bw[owner[v]];
        if (su != -c * w || sw != u - b * w)
            return false;
    }
    return true;
}

}  // namespace

TEST_CASE("regular graphs") {
    for (int n = 1; n <= 12; ++n) {
        for (int k = 0; k <= n; ++k) {
            const bool exists = k <= n - 1 && (n * k) % 2 == 0;
            if (!exists) {
                REQUIRE_THROWS_AS(regular_graph(n, k), std::invalid_argument);
                continue;
            }
            const Graph g = regular_graph(n, k);
            REQUIRE(g.order() == n);
            for (int v = 0; v < n; ++v)
                REQUIRE(g.degree(v) == k);
        }
    }
    REQUIRE(regular_graph(5, 0).edge_count() == 0);
    REQUIRE(regular_graph(4, 3) == complete(4));
    REQUIRE_THROWS_AS(regular_graph(0, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(regular_graph(3, -1), std::invalid_argument);
}

TEST_CASE("equitable partition verification") {
    REQUIRE(verify_equitable(complete_bipartite(2, 3), {{0, 1}, {2, 3, 4}}) ==
            IntMatrix{{0, 3}, {2, 0}});
    REQUIRE(verify_equitable(path(3), {{0, 2}, {1}}) == IntMatrix{{0, 1}, {2, 0}});
    REQUIRE(verify_equitable(regular_graph(6, 3), {{0, 1, 2, 3, 4, 5}}) == IntMatrix{{3}});

    // singleton blocks reproduce the adjacency matrix
    const Graph p4 = path(4);
    REQUIRE(verify_equitable(p4, {{0}, {1}, {2}, {3}}) == adjacency_int_matrix(p4));

    try {
        verify_equitable(p4, {{0, 1}, {2, 3}});
        FAIL("expected NotEquitableError");
    } catch (const NotEquitableError& e) {
        REQUIRE(e.vertex == 1);
        REQUIRE(e.block == 1);
    }
    REQUIRE_THROWS_AS(verify_equitable(path(3), {{0, 1, 2}}), NotEquitableError);

    REQUIRE_THROWS_AS(verify_equitable(p4, {{0, 1}, {}, {2, 3}}), std::invalid_argument);
    REQUIRE_THROWS_AS(verify_equitable(p4, {{0, 1}, {1, 2, 3}}), std::invalid_argument);
    REQUIRE_THROWS_AS(verify_equitable(p4, {{0, 1}, {2, 4}}), std::invalid_argument);
    REQUIRE_THROWS_AS(verify_equitable(p4, {{0, 1}, {2}}), std::invalid_argument);
}

TEST_CASE("quotient radius") {
    REQUIRE(quotient2_radius({{3}}) == Catch::Approx(3.0));
    REQUIRE(quotient2_radius({{1, 1}, {3, 1}}) == Catch::Approx(1 + std::sqrt(3.0)));
    REQUIRE(quotient2_radius({{0, 3}, {2, 0}}) == Catch::Approx(std::sqrt(6.0)));
    REQUIRE_THROWS_AS(quotient2_radius(IntMatrix(3, std::vector<BigInt>(3, 1))),
                      std::invalid_argument);
}

TEST_CASE("two block realization examples") {
    const auto r = realize_quadratic(-2, -2, 2);
    REQUIRE(r.graph.order() == 8);
    REQUIRE(r.graph.edge_count() == 10);
    REQUIRE(r.m == 1);
    REQUIRE(r.M == 2);
    REQUIRE(r.quotient == IntMatrix{{1, 1}, {3, 1}});
    REQUIRE(r.blocks[0].size() == 6);
    REQUIRE(r.blocks[1].size() == 2);
    REQUIRE(verify_equitable(r.graph, r.blocks) == r.quotient);
    REQUIRE(divides(IntPolynomial{-2, -2, 1}, char_poly(r.graph)));
    REQUIRE(spectral_radius(r.graph) == Catch::Approx(1 + std::sqrt(3.0)).margin(1e-9));
    REQUIRE(r.lambda == Catch::Approx(1 + std::sqrt(3.0)));

    // default block multiplicity for m = 1 is 2: identical construction
    REQUIRE(realize_quadratic(-2, -2).graph == r.graph);
    // a larger multiplicity keeps the quotient and the radius
    const auto r4 = realize_quadratic(-2, -2, 4);
    REQUIRE(r4.graph.order() == 16);
    REQUIRE(r4.quotient == r.quotient);
    REQUIRE(spectral_radius(r4.graph) == Catch::Approx(1 + std::sqrt(3.0)).margin(1e-9));

    // c = floor(b^2/4) collapses to a complete graph
    const auto comp = realize_quadratic(-4, 4);
    REQUIRE(comp.graph == complete(3));
    REQUIRE(comp.quotient == IntMatrix{{2}});
    REQUIRE(comp.M == 0);
    REQUIRE(spectral_radius(comp.graph) == Catch::Approx(2.0).margin(1e-9));

    // b = 0: disjoint stars, radius sqrt(-c)
    const auto stars = realize_quadratic(0, -2);
    REQUIRE(stars.graph.order() == 6);
    REQUIRE(stars.m == 0);
    REQUIRE(spectral_radius(stars.graph) == Catch::Approx(std::sqrt(2.0)).margin(1e-9));
    REQUIRE(!is_connected(stars.graph));

    const auto odd = realize_quadratic(-3, -1);  // largest root (3+sqrt(13))/2
    REQUIRE(odd.m == 2);
    REQUIRE(odd.M == 4);
    REQUIRE(odd.graph.order() == 16);
    REQUIRE(spectral_radius(odd.graph) ==
            Catch::Approx((3 + std::sqrt(13.0)) / 2).margin(1e-9));

    REQUIRE_THROWS_AS(realize_quadratic(2, -2), std::invalid_argument);
    REQUIRE_THROWS_AS(realize_quadratic(0, 2), std::invalid_argument);
    REQUIRE_THROWS_AS(realize_quadratic(0, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(realize_quadratic(-2, -2, 3), std::invalid_argument);   // odd M
    REQUIRE_THROWS_AS(realize_quadratic(-2, -2, 0), std::invalid_argument);   // M <= m
    REQUIRE_THROWS_AS(realize_quadratic(-4, -30, 2), std::invalid_argument);  // M <= m
    REQUIRE_THROWS_AS(realize_quadratic(0, -20000), std::invalid_argument);   // too large
}

TEST_CASE("realization sweep") {
    int cases = 0;
    for (long long b = -8; b <= 0; ++b) {
        for (long long c = -20; c <= (b * b) / 4; ++c) {
            if (!check_condition_quadratic(b, c).satisfied)
                continue;
            ++cases;
            const auto r = realize_quadratic(b, c);
            REQUIRE(verify_equitable(r.graph, r.blocks) == r.quotient);
            REQUIRE(quotient2_radius(r.quotient) == Catch::Approx(r.lambda).margin(1e-9));
            REQUIRE(spectral_radius(r.graph) == Catch::Approx(r.lambda).margin(1e-9));

            const IntPolynomial mp = QuadraticTarget(b, c).min_poly();
            if (r.quotient.size() == 2) {
                REQUIRE(r.quotient[0][0] + r.quotient[1][1] == -b);
                REQUIRE(r.quotient[0][0] * r.quotient[1][1] - r.quotient[0][1] * r.quotient[1][0] ==
                        c);
                REQUIRE(quadratic_eigen_certificate(r.graph, b, c, r.blocks));
                if (r.graph.order() <= 30)
                    REQUIRE(divides(mp, char_poly(r.graph)));
            } else {
                REQUIRE(divides(mp, char_poly(r.graph)));
            }
        }
    }
    REQUIRE(cases >= 150);
}

TEST_CASE("bipartite witness family") {
    const Graph g = family_bipartite_witness(2, 3);
    REQUIRE(g == complete_bipartite(2, 5));
    REQUIRE(spectral_radius(g) == Catch::Approx(std::sqrt(10.0)).margin(1e-9));

    REQUIRE(family_bipartite_hypothesis(1, 1));
    REQUIRE(family_bipartite_hypothesis(1, 2));
    REQUIRE(family_bipartite_hypothesis(2, 3));
    REQUIRE(!family_bipartite_hypothesis(1, 3));  // 4 > 4 fails
    REQUIRE(!family_bipartite_hypothesis(2, 5));  // 8 > 16 fails

    for (int n = 1; n <= 6; ++n) {
        for (int m = 1; m <= 6; ++m) {
            const Graph w = family_bipartite_witness(n, m);
            REQUIRE(w.order() == 2 * n + m);
            REQUIRE(spectral_radius(w) ==
                    Catch::Approx(family_bipartite_lambda(n, m)).margin(1e-9));
            REQUIRE(divides(IntPolynomial{-(long long)n * (n + m), 0, 1}, char_poly(w)));
        }
    }
    REQUIRE_THROWS_AS(family_bipartite_witness(0, 1), std::invalid_argument);
}

TEST_CASE("join witness family") {
    const Graph g = family_join_witness(4, 2);
    REQUIRE(g.order() == 4);
    REQUIRE(g.edge_count() == 5);
    REQUIRE(spectral_radius(g) == Catch::Approx((1 + std::sqrt(17.0)) / 2).margin(1e-9));

    REQUIRE(family_join_hypothesis(4, 2));
    REQUIRE(family_join_hypothesis(3, 2));  // 3 > (2-1)^2 + 1
    REQUIRE(!family_join_hypothesis(5, 3));
    REQUIRE(family_join_hypothesis(11, 4));
    REQUIRE(!family_join_hypothesis(10, 4));

    for (int m = 2; m <= 6; ++m) {
        for (int n = m + 1; n <= 12; ++n) {
            const Graph w = family_join_witness(n, m);
            REQUIRE(w.order() == n);
            REQUIRE(spectral_radius(w) == Catch::Approx(family_join_lambda(n, m)).margin(1e-9));

            // clique part vs independent part is an equitable partition
            std::vector<std::vector<int>> blocks(2);
            for (int v = 0; v < n - m; ++v)
                blocks[0].push_back(v);
            for (int v = n - m; v < n; ++v)
                blocks[1].push_back(v);
            REQUIRE(verify_equitable(w, blocks) ==
                    IntMatrix{{n - m - 1, m}, {n - m, 0}});
            REQUIRE(divides(IntPolynomial{-(long long)m * (n - m), -(n - m - 1), 1},
                            char_poly(w)));

            const auto p = perron(w);
            REQUIRE(p.vector[n - 1] / p.vector[0] ==
                    Catch::Approx(family_join_perron_ratio(n, m)).margin(1e-9));
        }
    }
    REQUIRE_THROWS_AS(family_join_witness(2, 2), std::invalid_argument);
    REQUIRE_THROWS_AS(family_join_witness(5, 1), std::invalid_argument);
}

TEST_CASE("sum and product realizations") {
    REQUIRE(realize_sum(path(2), path(2)) == cartesian_product(path(2), path(2)));
    REQUIRE(spectral_radius(realize_sum(path(2), path(2))) == Catch::Approx(2.0).margin(1e-9));
    REQUIRE(spectral_radius(realize_product(complete(3), path(2))) ==
            Catch::Approx(2.0).margin(1e-9));

    std::mt19937 rng(91);
    for (int trial = 0; trial < 25; ++trial) {
        Graph a = random_graph(2 + int(rng() % 4), rng);
        Graph b = random_graph(2 + int(rng() % 4), rng);
        const double la = spectral_radius(a), lb = spectral_radius(b);
        REQUIRE(spectral_radius(realize_sum(a, b)) == Catch::Approx(la + lb).margin(1e-9));
        REQUIRE(spectral_radius(realize_product(a, b)) == Catch::Approx(la * lb).margin(1e-9));
    }
}

TEST_CASE("signless laplacian realization") {
    REQUIRE(signless_laplacian_radius(complete(2)) == Catch::Approx(2.0).margin(1e-9));
    REQUIRE(signless_laplacian_radius(path(3)) == Catch::Approx(3.0).margin(1e-9));
    REQUIRE(signless_laplacian_radius(edgeless(4)) == Catch::Approx(0.0).margin(1e-9));

    REQUIRE(realize_signless_laplacian_radius(complete(2)) == complete(3));
    REQUIRE(realize_signless_laplacian_radius(edgeless(4)) == complete(1));

    auto check = [](const Graph& g) {
        const double mu = signless_laplacian_radius(g);
        const Graph r = realize_signless_laplacian_radius(g);
        REQUIRE(spectral_radius(r) == Catch::Approx(mu).margin(1e-9));
        if (g.edge_count() >= 1)
            REQUIRE(spectral_radius(line_graph(g)) == Catch::Approx(mu - 2).margin(1e-9));
    };
    for (int n = 1; n <= 4; ++n) {
        const std::uint64_t total = std::uint64_t(1) << (n * (n - 1) / 2);
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            Graph g(n);
            int bit = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j, ++bit)
                    if (mask >> bit & 1)
                        g.add_edge(i, j);
            check(g);
        }
    }
    std::mt19937 rng(92);
    for (int trial = 0; trial < 30; ++trial)
        check(random_graph(5 + int(rng() % 3), rng));
}
