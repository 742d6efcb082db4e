#pragma once

// Dense symmetric eigensolver (cyclic Jacobi) plus the graph-spectrum
// wrappers built on it. No external linear algebra dependency: the
// stopping rule and Perron normalization here are part of the library's
// contract, so the solver is kept in-house and small.

#include <cmath>
#include <cstddef>
#include <deque>
#include <stdexcept>
#include <vector>

#include "sro/graph.hpp"

namespace sro {

inline constexpr double kDefaultTol = 1e-12;

struct EigenSystem {
    std::vector<double> values;               // descending
    std::vector<std::vector<double>> vectors; // vectors[k] pairs with values[k]
};

// Cyclic Jacobi on a dense symmetric matrix (row-major, n*n). Sweeps
// until the off-diagonal Frobenius norm drops below tol*n.
inline EigenSystem jacobi_eigen(std::vector<double> a, int n, double tol = kDefaultTol,
                                bool want_vectors = false) {
    if (n < 1)
        throw std::invalid_argument("jacobi_eigen: n >= 1 required");
    if (a.size() != static_cast<std::size_t>(n) * n)
        throw std::invalid_argument("jacobi_eigen: bad matrix size");
    if (!(tol > 0))
        throw std::invalid_argument("jacobi_eigen: tol must be positive");

    std::vector<double> v;
    if (want_vectors) {
        v.assign(static_cast<std::size_t>(n) * n, 0.0);
        for (int i = 0; i < n; ++i)
            v[static_cast<std::size_t>(i) * n + i] = 1.0;
    }

    auto off_norm = [&]() {
        double s = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                s += 2 * a[static_cast<std::size_t>(i) * n + j] * a[static_cast<std::size_t>(i) * n + j];
        return std::sqrt(s);
    };

    const int max_sweeps = 64;
    int sweep = 0;
    while (off_norm() >= tol * n) {
        if (++sweep > max_sweeps)
            throw std::runtime_error("jacobi_eigen: no convergence (bug)");
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                const double apq = a[static_cast<std::size_t>(p) * n + q];
                if (apq == 0.0)
                    continue;
                const double app = a[static_cast<std::size_t>(p) * n + p];
                const double aqq = a[static_cast<std::size_t>(q) * n + q];
                const double theta = (aqq - app) / (2 * apq);
                double t;
                if (std::abs(theta) > 1e150)
                    t = 1 / (2 * theta);
                else
                    t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                const double c = 1 / std::sqrt(t * t + 1);
                const double s = t * c;

                for (int k = 0; k < n; ++k) {
                    double& akp = a[static_cast<std::size_t>(k) * n + p];
                    double& akq = a[static_cast<std::size_t>(k) * n + q];
                    const double x = akp, y = akq;
                    akp = c * x - s * y;
                    akq = s * x + c * y;
                }
                for (int k = 0; k < n; ++k) {
                    double& apk = a[static_cast<std::size_t>(p) * n + k];
                    double& aqk = a[static_cast<std::size_t>(q) * n + k];
                    const double x = apk, y = aqk;
                    apk = c * x - s * y;
                    aqk = s * x + c * y;
                }
                if (want_vectors)
                    for (int k = 0; k < n; ++k) {
                        double& vkp = v[static_cast<std::size_t>(k) * n + p];
                        double& vkq = v[static_cast<std::size_t>(k) * n + q];
                        const double x = vkp, y = vkq;
                        vkp = c * x - s * y;
                        vkq = s * x + c * y;
                    }
            }
    }

    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i)
        idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](int i, int j) {
        return a[static_cast<std::size_t>(i) * n + i] > a[static_cast<std::size_t>(j) * n + j];
    });

    EigenSystem out;
    out.values.resize(n);
    for (int k = 0; k < n; ++k)
        out.values[k] = a[static_cast<std::size_t>(idx[k]) * n + idx[k]];
    if (want_vectors) {
        out.vectors.assign(n, std::vector<double>(n));
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                out.vectors[k][i] = v[static_cast<std::size_t>(i) * n + idx[k]];
    }
    return out;
}

inline std::vector<double> adjacency_matrix(const Graph& g) {
    const int n = g.order();
    std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
    for (auto [u, v] : g.edges()) {
        a[static_cast<std::size_t>(u) * n + v] = 1.0;
        a[static_cast<std::size_t>(v) * n + u] = 1.0;
    }
    return a;
}

// Adjacency plus degree diagonal.
inline std::vector<double> signless_laplacian_matrix(const Graph& g) {
    const int n = g.order();
    auto a = adjacency_matrix(g);
    for (int i = 0; i < n; ++i)
        a[static_cast<std::size_t>(i) * n + i] = g.degree(i);
    return a;
}

struct Spectrum {
    std::vector<double> eigenvalues;  // descending
    double tolerance = kDefaultTol;
};

inline Spectrum spectrum(const Graph& g, double tol = kDefaultTol) {
    if (g.order() < 1)
        throw std::invalid_argument("spectrum: graph must have >= 1 vertex");
    Spectrum sp;
    sp.tolerance = tol;
    sp.eigenvalues = jacobi_eigen(adjacency_matrix(g), g.order(), tol, false).values;
    return sp;
}

inline double spectral_radius(const Graph& g, double tol = kDefaultTol) {
    return spectrum(g, tol).eigenvalues.front();
}

inline double symmetric_radius(std::vector<double> m, int n, double tol = kDefaultTol) {
    return jacobi_eigen(std::move(m), n, tol, false).values.front();
}

inline bool is_connected(const Graph& g) {
    const int n = g.order();
    if (n < 1)
        throw std::invalid_argument("is_connected: graph must have >= 1 vertex");
    std::vector<char> seen(n, 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        g.for_each_neighbor(u, [&](int w) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                queue.push_back(w);
            }
        });
    }
    return reached == n;
}

struct BipartiteCheck {
    bool bipartite = false;
    std::vector<int> coloring;  // 0/1 per vertex when bipartite
    std::vector<int> odd_walk;  // closed walk of odd length otherwise
};

inline BipartiteCheck is_bipartite(const Graph& g) {
    const int n = g.order();
    if (n < 1)
        throw std::invalid_argument("is_bipartite: graph must have >= 1 vertex");
    BipartiteCheck out;
    std::vector<int> color(n, -1), parent(n, -1);
    for (int root = 0; root < n; ++root) {
        if (color[root] != -1)
            continue;
        color[root] = 0;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            int clash = -1;
            g.for_each_neighbor(u, [&](int w) {
                if (color[w] == -1) {
                    color[w] = color[u] ^ 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (color[w] == color[u] && clash < 0) {
                    clash = w;
                }
            });
            if (clash >= 0) {
                // walk u -> root -> clash plus the closing edge: odd length
                std::vector<int> up, down;
                for (int x = u; x != -1; x = parent[x])
                    up.push_back(x);
                for (int x = clash; x != -1; x = parent[x])
                    down.push_back(x);
                out.odd_walk = up;
                auto it = down.rbegin();
                ++it;  // up already ends at the shared root
                for (; it != down.rend(); ++it)
                    out.odd_walk.push_back(*it);
                out.odd_walk.push_back(u);
                return out;
            }
        }
    }
    out.bipartite = true;
    out.coloring = std::move(color);
    return out;
}

struct PerronData {
    double radius = 0.0;
    std::vector<double> vector;  // unit norm, entries >= 0
};

// Perron eigenpair of a connected graph. The eigenvector sign is fixed by
// making its largest-magnitude entry positive; entries within 10*tol
// below zero are clamped to 0.
inline PerronData perron(const Graph& g, double tol = kDefaultTol) {
    if (!is_connected(g))
        throw std::invalid_argument("perron: graph must be connected");
    const int n = g.order();
    auto sys = jacobi_eigen(adjacency_matrix(g), n, tol, true);
    PerronData out;
    out.radius = sys.values.front();
    out.vector = sys.vectors.front();

    double big = 0.0;
    for (double x : out.vector)
        if (std::abs(x) > std::abs(big))
            big = x;
    if (big < 0)
        for (double& x : out.vector)
            x = -x;
    double norm2 = 0.0;
    for (double& x : out.vector) {
        if (x < 0) {
            if (x < -10 * tol)
                throw std::runtime_error("perron: negative eigenvector entry (bug)");
            x = 0.0;
        }
        norm2 += x * x;
    }
    norm2 = std::sqrt(norm2);
    for (double& x : out.vector)
        x /= norm2;
    return out;
}

}  // namespace sro
