#pragma once

// Graph constructions with prescribed spectral radius: circulant regular
// graphs, the two-block realization of a quadratic's largest root via an
// equitable partition, join/bipartite witness families, product
// realizations, and the signless-Laplacian realization.

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sro/algebraic.hpp"
#include "sro/exact.hpp"
#include "sro/graph.hpp"
#include "sro/spectral.hpp"

namespace sro {

// k-regular graph on n vertices (circulant with offsets 1..k/2, plus the
// antipodal offset when k is odd). Exists iff n >= k+1 and n*k is even.
inline Graph regular_graph(int n, int k) {
    if (n < 1 || k < 0)
        throw std::invalid_argument("regular_graph: need n >= 1, k >= 0");
    if (k > n - 1)
        throw std::invalid_argument("regular_graph: need k <= n-1");
    if ((static_cast<long long>(n) * k) % 2 != 0)
        throw std::invalid_argument("regular_graph: n*k must be even");
    Graph g(n);
    for (int off = 1; off <= k / 2; ++off)
        for (int i = 0; i < n; ++i)
            g.set_edge(i, (i + off) % n, true);
    if (k % 2 == 1)
        for (int i = 0; i < n / 2; ++i)
            g.add_edge(i, i + n / 2);
    return g;
}

struct NotEquitableError : std::domain_error {
    int vertex;
    int block;
    NotEquitableError(int v, int b)
        : std::domain_error("partition not equitable: vertex " + std::to_string(v) +
                            " disagrees on neighbors in block " + std::to_string(b)),
          vertex(v),
          block(b) {}
};

// Checks that every vertex of block i has the same number of neighbors in
// block j for all i, j, and returns that count matrix. Throws
// std::invalid_argument for a non-partition and NotEquitableError (with
// the offending vertex/block) when the counts disagree.
inline IntMatrix verify_equitable(const Graph& g, const std::vector<std::vector<int>>& blocks) {
    const int n = g.order();
    std::vector<int> owner(n, -1);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (blocks[i].empty())
            throw std::invalid_argument("verify_equitable: empty block");
        for (int v : blocks[i]) {
            if (v < 0 || v >= n)
                throw std::invalid_argument("verify_equitable: vertex out of range");
            if (owner[v] != -1)
                throw std::invalid_argument("verify_equitable: vertex repeated");
            owner[v] = static_cast<int>(i);
        }
    }
    for (int v = 0; v < n; ++v)
        if (owner[v] == -1)
            throw std::invalid_argument("verify_equitable: vertex not covered");

    const int nb = static_cast<int>(blocks.size());
    IntMatrix quotient(nb, std::vector<BigInt>(nb, 0));
    for (int i = 0; i < nb; ++i) {
        std::vector<long long> expected(nb, -1);
        for (int v : blocks[i]) {
            std::vector<long long> counts(nb, 0);
            g.for_each_neighbor(v, [&](int w) { ++counts[owner[w]]; });
            if (expected[0] == -1)
                expected = counts;
            else
                for (int j = 0; j < nb; ++j)
                    if (counts[j] != expected[j])
                        throw NotEquitableError(v, j);
        }
        for (int j = 0; j < nb; ++j)
            quotient[i][j] = expected[j];
    }
    return quotient;
}

struct Realization {
    Graph graph;
    long long m = 0;   // -floor(b/2)
    long long M = 0;   // block multiplicity (0 when the graph is complete)
    IntMatrix quotient;                    // 1x1 [m] or 2x2 equitable quotient
    std::vector<std::vector<int>> blocks;  // partition matching the quotient
    double lambda = 0.0;                   // largest root of x^2 + b*x + c
};

namespace detail {
inline long long floor_div2(long long b) { return b >= 0 ? b / 2 : -((-b + 1) / 2); }
}

// Builds a graph whose spectral radius is the largest root of
// x^2 + b*x + c (which must pass check_condition_quadratic). When
// c = floor(b^2/4) the answer is a complete graph; otherwise two circulant
// regular graphs joined by M disjoint complete bipartite blocks form an
// equitable partition with quotient [[m, 1], [a21, a22]].
inline Realization realize_quadratic(long long b, long long c,
                                     std::optional<long long> M_opt = std::nullopt) {
    const ConditionReport cond = check_condition_quadratic(b, c);
    if (!cond.satisfied)
        throw std::invalid_argument(
            "realize_quadratic: largest root not realizable (need b <= 0, c <= floor(b^2/4), "
            "positive root)");
    const long long m = -detail::floor_div2(b);
    const long long flq = (b * b) / 4;

    Realization out;
    out.m = m;
    out.lambda = cond.value;

    if (M_opt) {
        if (*M_opt <= m || *M_opt % 2 != 0)
            throw std::invalid_argument("realize_quadratic: M must be even and > m");
    }

    if (c == flq) {  // lambda = m, realized by K_{m+1}
        out.graph = complete(static_cast<int>(m + 1));
        out.quotient = {{BigInt(m)}};
        out.blocks.emplace_back();
        for (int v = 0; v <= m; ++v)
            out.blocks[0].push_back(v);
        return out;
    }

    const long long a11 = m, a12 = 1;
    const long long a21 = (b == -2 * m) ? m * m - c : m * m - m - c;
    const long long a22 = (b == -2 * m) ? m : m - 1;
    if (a11 + a22 != -b || a11 * a22 - a12 * a21 != c)
        throw std::logic_error("realize_quadratic: quotient mismatch (bug)");

    const long long M = M_opt.value_or(m % 2 == 0 ? m + 2 : m + 1);
    const long long n1 = M * a21, n2 = M * a12;
    if (n1 + n2 > 20000)
        throw std::invalid_argument("realize_quadratic: output graph too large");

    Graph g(static_cast<int>(n1 + n2));
    const Graph g1 = regular_graph(static_cast<int>(n1), static_cast<int>(a11));
    for (auto [u, v] : g1.edges())
        g.add_edge(u, v);
    const Graph g2 = regular_graph(static_cast<int>(n2), static_cast<int>(a22));
    for (auto [u, v] : g2.edges())
        g.add_edge(static_cast<int>(n1) + u, static_cast<int>(n1) + v);
    for (long long t = 0; t < M; ++t)
        for (long long u = t * a21; u < (t + 1) * a21; ++u)
            g.add_edge(static_cast<int>(u), static_cast<int>(n1 + t));

    out.graph = std::move(g);
    out.M = M;
    out.quotient = {{BigInt(a11), BigInt(a12)}, {BigInt(a21), BigInt(a22)}};
    out.blocks.resize(2);
    for (long long v = 0; v < n1; ++v)
        out.blocks[0].push_back(static_cast<int>(v));
    for (long long v = n1; v < n1 + n2; ++v)
        out.blocks[1].push_back(static_cast<int>(v));
    return out;
}

// Largest eigenvalue of a nonnegative 2x2 integer quotient.
inline double quotient2_radius(const IntMatrix& q) {
    if (q.size() == 1)
        return q[0][0].convert_to<double>();
    if (q.size() != 2 || q[0].size() != 2 || q[1].size() != 2)
        throw std::invalid_argument("quotient2_radius: need 1x1 or 2x2");
    const double a = q[0][0].convert_to<double>(), bb = q[0][1].convert_to<double>();
    const double cc = q[1][0].convert_to<double>(), d = q[1][1].convert_to<double>();
    return ((a + d) + std::sqrt((a - d) * (a - d) + 4 * bb * cc)) / 2;
}

// ---- witness families ----

// K_{n,n+m}: spectral radius sqrt(n(n+m)); smallest such graph when
// 4n > (m-1)^2.
inline Graph family_bipartite_witness(int n, int m) {
    if (n < 1 || m < 1)
        throw std::invalid_argument("family_bipartite_witness: need n, m >= 1");
    return complete_bipartite(n, n + m);
}

inline bool family_bipartite_hypothesis(int n, int m) {
    return 4LL * n > static_cast<long long>(m - 1) * (m - 1);
}

inline double family_bipartite_lambda(int n, int m) {
    return std::sqrt(static_cast<double>(n) * (n + m));
}

// Join of K_{n-m} with m isolated vertices: spectral radius
// (n-m-1 + sqrt((n-m-1)^2 + 4m(n-m)))/2; smallest such graph when
// n > (m-1)^2 + 1.
inline Graph family_join_witness(int n, int m) {
    if (m < 2 || n <= m)
        throw std::invalid_argument("family_join_witness: need n > m >= 2");
    return join(complete(n - m), edgeless(m));
}

inline bool family_join_hypothesis(int n, int m) {
    return n > static_cast<long long>(m - 1) * (m - 1) + 1;
}

inline double family_join_lambda(int n, int m) {
    const double t = n - m - 1;
    return (t + std::sqrt(t * t + 4.0 * m * (n - m))) / 2;
}

// Perron-vector value on the independent part when the clique part is
// scaled to 1.
inline double family_join_perron_ratio(int n, int m) {
    const double t = n - m - 1;
    return (-t + std::sqrt(t * t + 4.0 * m * (n - m))) / (2.0 * m);
}

// ---- closure under sum and product ----

inline Graph realize_sum(const Graph& a, const Graph& b) { return cartesian_product(a, b); }

inline Graph realize_product(const Graph& a, const Graph& b) { return kronecker_product(a, b); }

// ---- signless Laplacian ----

inline double signless_laplacian_radius(const Graph& g, double tol = kDefaultTol) {
    if (g.order() < 1)
        throw std::invalid_argument("signless_laplacian_radius: graph must have >= 1 vertex");
    return symmetric_radius(signless_laplacian_matrix(g), g.order(), tol);
}

// Graph whose adjacency spectral radius equals the signless-Laplacian
// radius of g: the line graph (radius mu - 2) Cartesian K_3 (radius 2).
// An edgeless g has mu = 0, realized by a single vertex.
inline Graph realize_signless_laplacian_radius(const Graph& g) {
    if (g.order() < 1)
        throw std::invalid_argument("realize_signless_laplacian_radius: graph must have >= 1 vertex");
    if (g.edge_count() == 0)
        return complete(1);
    return cartesian_product(line_graph(g), complete(3));
}

}  // namespace sro
