#pragma once

// Simple labeled graphs on n vertices, adjacency kept as a packed bit
// matrix (one row of 64-bit words per vertex, mirrored on write).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sro {

class Graph {
public:
    Graph() = default;

    explicit Graph(int n) {
        if (n < 0)
            throw std::invalid_argument("Graph: order must be nonnegative");
        n_ = n;
        row_words_ = (n + 63) / 64;
        bits_.assign(static_cast<std::size_t>(n) * row_words_, 0);
    }

    int order() const noexcept { return n_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            return false;
        return (word(u, v) >> (v & 63)) & 1u;
    }

    void set_edge(int u, int v, bool present) {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw std::invalid_argument("Graph: no self-loops");
        std::uint64_t mu = std::uint64_t(1) << (v & 63);
        std::uint64_t mv = std::uint64_t(1) << (u & 63);
        if (present) {
            word(u, v) |= mu;
            word(v, u) |= mv;
        } else {
            word(u, v) &= ~mu;
            word(v, u) &= ~mv;
        }
    }

    void add_edge(int u, int v) { set_edge(u, v, true); }
    void remove_edge(int u, int v) { set_edge(u, v, false); }

    int degree(int v) const {
        check_vertex(v);
        int d = 0;
        for (int w = 0; w < row_words_; ++w)
            d += std::popcount(bits_[static_cast<std::size_t>(v) * row_words_ + w]);
        return d;
    }

    int max_degree() const {
        int m = 0;
        for (int v = 0; v < n_; ++v)
            m = std::max(m, degree(v));
        return m;
    }

    std::size_t edge_count() const {
        std::size_t total = 0;
        for (const auto w : bits_)
            total += static_cast<std::size_t>(std::popcount(w));
        return total / 2;
    }

    template <typename F>
    void for_each_neighbor(int u, F&& f) const {
        check_vertex(u);
        const std::size_t base = static_cast<std::size_t>(u) * row_words_;
        for (int w = 0; w < row_words_; ++w) {
            std::uint64_t m = bits_[base + w];
            while (m) {
                int b = std::countr_zero(m);
                f(w * 64 + b);
                m &= m - 1;
            }
        }
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(edge_count());
        for (int u = 0; u < n_; ++u)
            for_each_neighbor(u, [&](int v) {
                if (u < v)
                    out.emplace_back(u, v);
            });
        return out;  // lexicographically sorted by construction
    }

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("Graph: vertex out of range");
    }
    std::uint64_t& word(int u, int v) {
        return bits_[static_cast<std::size_t>(u) * row_words_ + (v >> 6)];
    }
    const std::uint64_t& word(int u, int v) const {
        return bits_[static_cast<std::size_t>(u) * row_words_ + (v >> 6)];
    }

    int n_ = 0;
    int row_words_ = 0;
    std::vector<std::uint64_t> bits_;
};

inline std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> d(g.order());
    for (int v = 0; v < g.order(); ++v)
        d[v] = g.degree(v);
    return d;
}

// ---- families ----

inline Graph complete(int n) {
    if (n < 1)
        throw std::invalid_argument("complete: n >= 1 required");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            g.add_edge(i, j);
    return g;
}

inline Graph complete_bipartite(int s, int t) {
    if (s < 1 || t < 1)
        throw std::invalid_argument("complete_bipartite: both sides >= 1 required");
    Graph g(s + t);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < t; ++j)
            g.add_edge(i, s + j);
    return g;
}

inline Graph path(int n) {
    if (n < 1)
        throw std::invalid_argument("path: n >= 1 required");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i)
        g.add_edge(i, i + 1);
    return g;
}

inline Graph edgeless(int n) {
    if (n < 1)
        throw std::invalid_argument("edgeless: n >= 1 required");
    return Graph(n);
}

// ---- operations ----

inline Graph complement(const Graph& g) {
    Graph h(g.order());
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j)
            if (!g.has_edge(i, j))
                h.add_edge(i, j);
    return h;
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.order() + b.order());
    for (auto [u, v] : a.edges())
        g.add_edge(u, v);
    for (auto [u, v] : b.edges())
        g.add_edge(a.order() + u, a.order() + v);
    return g;
}

inline Graph join(const Graph& a, const Graph& b) {
    Graph g = disjoint_union(a, b);
    for (int u = 0; u < a.order(); ++u)
        for (int v = 0; v < b.order(); ++v)
            g.add_edge(u, a.order() + v);
    return g;
}

// Vertex (i, j) of a product is index i*|V(b)| + j.
inline Graph cartesian_product(const Graph& a, const Graph& b) {
    const int na = a.order(), nb = b.order();
    Graph g(na * nb);
    for (int i = 0; i < na; ++i)
        for (auto [u, v] : b.edges())
            g.add_edge(i * nb + u, i * nb + v);
    for (auto [u, v] : a.edges())
        for (int j = 0; j < nb; ++j)
            g.add_edge(u * nb + j, v * nb + j);
    return g;
}

inline Graph kronecker_product(const Graph& a, const Graph& b) {
    const int nb = b.order();
    Graph g(a.order() * nb);
    for (auto [u, v] : a.edges())
        for (auto [x, y] : b.edges()) {
            g.add_edge(u * nb + x, v * nb + y);
            g.add_edge(u * nb + y, v * nb + x);
        }
    return g;
}

// Line graph; vertex k of the result is the k-th edge of g in the
// lexicographic order produced by Graph::edges().
inline Graph line_graph(const Graph& g) {
    const auto es = g.edges();
    Graph lg(static_cast<int>(es.size()));
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            const auto [a, b] = es[i];
            const auto [c, d] = es[j];
            if (a == c || a == d || b == c || b == d)
                lg.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    return lg;
}

// ---- graph6 ----
// Header byte n+63 (n <= 62), then the upper triangle read column by
// column ((0,1),(0,2),(1,2),(0,3),...) packed big-endian into 6-bit
// groups, zero padded, each group offset by 63.

inline std::string graph6_encode(const Graph& g) {
    const int n = g.order();
    if (n > 62)
        throw std::invalid_argument("graph6_encode: order must be <= 62");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0)
        out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

inline Graph graph6_decode(std::string_view s) {
    if (s.empty())
        throw std::invalid_argument("graph6_decode: empty input");
    const int n = static_cast<unsigned char>(s[0]) - 63;
    if (n < 0 || n > 62)
        throw std::invalid_argument("graph6_decode: bad length byte");
    const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t payload = (nbits + 5) / 6;
    if (s.size() != 1 + payload)
        throw std::invalid_argument("graph6_decode: wrong payload length");
    Graph g(n);
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            const unsigned char c = static_cast<unsigned char>(s[1 + bit / 6]);
            if (c < 63 || c > 126)
                throw std::invalid_argument("graph6_decode: byte out of range");
            if ((c - 63) >> (5 - bit % 6) & 1)
                g.add_edge(i, j);
        }
    // validate any trailing padding bytes too
    for (std::size_t k = 1; k < s.size(); ++k) {
        const unsigned char c = static_cast<unsigned char>(s[k]);
        if (c < 63 || c > 126)
            throw std::invalid_argument("graph6_decode: byte out of range");
    }
    return g;
}

// ---- edge list text form: "n m" then one "u v" line per edge, u < v ----

inline void edge_list_write(const Graph& g, std::ostream& os) {
    const auto es = g.edges();
    os << g.order() << ' ' << es.size() << '\n';
    for (auto [u, v] : es)
        os << u << ' ' << v << '\n';
}

inline std::string edge_list_string(const Graph& g) {
    std::ostringstream os;
    edge_list_write(g, os);
    return os.str();
}

inline Graph edge_list_parse(std::istream& is) {
    long long n = -1, m = -1;
    if (!(is >> n >> m))
        throw std::invalid_argument("edge list: missing header");
    if (n < 0 || m < 0 || m > n * (n - 1) / 2)
        throw std::invalid_argument("edge list: bad header");
    Graph g(static_cast<int>(n));
    for (long long k = 0; k < m; ++k) {
        long long u, v;
        if (!(is >> u >> v))
            throw std::invalid_argument("edge list: truncated");
        if (u < 0 || v < 0 || u >= n || v >= n || u >= v)
            throw std::invalid_argument("edge list: bad edge (need 0 <= u < v < n)");
        if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
            throw std::invalid_argument("edge list: duplicate edge");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    return g;
}

inline Graph edge_list_parse(const std::string& text) {
    std::istringstream is(text);
    return edge_list_parse(is);
}

}  // namespace sro
