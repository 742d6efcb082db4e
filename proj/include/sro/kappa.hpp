#pragma once

// Exhaustive search for kappa(lambda): the least order of a graph whose
// spectral radius is exactly lambda. Candidates stream in edge-bitmask
// order; cheap filters (degree bound, numeric proximity) come before the
// exact certificate (minimal-polynomial divisibility plus Sturm). Two
// sound prunes: no order-n graph has radius above n-1, and when the
// minimal polynomial is x^2 - D every witness is bipartite, capping the
// radius at n/2.

#include <cmath>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "sro/algebraic.hpp"
#include "sro/exact.hpp"
#include "sro/graph.hpp"
#include "sro/spectral.hpp"

namespace sro {

class SearchTarget {
public:
    static SearchTarget integer(long long t) {
        SearchTarget s;
        s.int_t_ = t;
        return s;
    }
    static SearchTarget quadratic(long long b, long long c) {
        SearchTarget s;
        s.quad_.emplace(b, c);
        return s;
    }

    bool is_integer() const { return !quad_.has_value(); }

    double value() const { return quad_ ? quad_->value() : double(int_t_); }

    IntPolynomial min_poly() const {
        if (quad_)
            return quad_->min_poly();
        return IntPolynomial{-int_t_, 1};
    }

    ConditionReport condition() const {
        if (quad_)
            return quad_->condition();
        ConditionReport r;
        r.totally_real = true;
        r.dominant = true;
        r.positive = int_t_ > 0;
        r.satisfied = r.positive;
        r.value = double(int_t_);
        return r;
    }

    // Witnesses must be bipartite when the minimal polynomial is x^2 - D:
    // then -lambda is an eigenvalue too, so the spectrum is symmetric.
    bool forces_bipartite() const {
        return quad_ && !quad_->degenerate() && quad_->b() == 0 && quad_->c() < 0;
    }

    bool exceeds(long long t) const { return quad_ ? quad_->exceeds(t) : int_t_ > t; }
    bool exceeds_half(long long n) const {
        return quad_ ? quad_->exceeds_half(n) : 2 * int_t_ > n;
    }

    RationalBracket bracket() const {
        if (quad_)
            return quad_->bracket();
        const BigRat w(BigInt(1), boost::multiprecision::pow(BigInt(10), 12));
        return RationalBracket(BigRat(int_t_) - w / 2, BigRat(int_t_) + w / 2);
    }

    std::string describe() const {
        if (!quad_)
            return "x - " + std::to_string(int_t_);
        return IntPolynomial{quad_->c(), quad_->b(), 1}.to_string();
    }

private:
    SearchTarget() = default;
    std::optional<QuadraticTarget> quad_;
    long long int_t_ = 0;
};

struct RadiusCertificate {
    bool divisible = false;  // minimal polynomial divides char poly
    bool largest = false;    // target is the maximum root of char poly
    bool numeric = false;    // |lambda_1 - target| <= 1e-9
    double lambda1 = std::numeric_limits<double>::quiet_NaN();

    bool ok() const { return divisible && largest && numeric; }

    std::string failure() const {
        std::string why;
        if (!divisible)
            why += "minimal polynomial does not divide char poly; ";
        if (!largest)
            why += "target is not the largest root; ";
        if (!numeric)
            why += "numeric spectral radius does not match; ";
        return why.empty() ? "ok" : why;
    }
};

inline RadiusCertificate verify_radius(const Graph& g, const SearchTarget& target) {
    if (g.order() < 1)
        throw std::invalid_argument("verify_radius: graph must have >= 1 vertex");
    RadiusCertificate cert;
    cert.lambda1 = spectral_radius(g);
    cert.numeric = std::abs(cert.lambda1 - target.value()) <= 1e-9;
    const IntPolynomial poly = char_poly(g);
    const IntPolynomial mp = target.min_poly();
    cert.divisible = divides(mp, poly);
    cert.largest = cert.divisible && certify_largest_root(poly, mp, target.bracket());
    return cert;
}

// ---- enumeration ----

// Bit k of an edge mask is pair (i,j), i < j, in row-major order
// (0,1),(0,2),...,(0,n-1),(1,2),...
inline Graph graph_from_mask(int n, std::uint64_t mask) {
    Graph g(n);
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (mask >> bit & 1)
                g.add_edge(i, j);
    return g;
}

inline std::uint64_t graph_mask_count(int n) {
    if (n < 1 || n > 10)
        throw std::invalid_argument("graph_mask_count: need 1 <= n <= 10");
    return std::uint64_t(1) << (n * (n - 1) / 2);
}

// Streams every simple graph on n labeled vertices once, in ascending
// edge-bitmask order, optionally restricted to bipartite graphs.
class GraphEnumerator {
public:
    explicit GraphEnumerator(int n, bool bipartite_only = false, std::uint64_t lo = 0,
                             std::uint64_t hi = UINT64_MAX)
        : n_(n), bipartite_only_(bipartite_only), next_(lo) {
        const std::uint64_t total = graph_mask_count(n);
        hi_ = hi == UINT64_MAX ? total : hi;
        if (next_ > hi_ || hi_ > total)
            throw std::invalid_argument("GraphEnumerator: bad mask range");
    }

    std::optional<Graph> next() {
        while (next_ < hi_) {
            Graph g = graph_from_mask(n_, next_);
            mask_ = next_++;
            if (!bipartite_only_ || is_bipartite(g).bipartite)
                return g;
        }
        return std::nullopt;
    }

    std::uint64_t current_mask() const { return mask_; }

private:
    int n_;
    bool bipartite_only_;
    std::uint64_t next_ = 0, hi_ = 0, mask_ = 0;
};

// ---- the search ----

enum class KappaOutcome { found, not_up_to };

// For an enumerated order, examined + pruned equals the number of graphs
// streamed (all 2^(n(n-1)/2), or only the bipartite ones when filtered);
// "pruned" counts rejections by the degree bound, "examined" candidates
// that reached the numeric stage. A skipped order reports the full mask
// count as pruned.
struct OrderStats {
    int order = 0;
    std::uint64_t examined = 0;
    std::uint64_t pruned = 0;
    bool skipped = false;
    bool bipartite_only = false;
    bool found = false;
};

struct KappaResult {
    KappaOutcome outcome = KappaOutcome::not_up_to;
    int order = 0;  // found order, or the max order searched
    std::optional<Graph> witness;
    std::vector<OrderStats> orders;
};

inline constexpr int kMaxSearchOrder = 10;

namespace detail {

struct WorkerResult {
    std::uint64_t examined = 0, pruned = 0;
    std::optional<std::uint64_t> found_mask;
};

inline void scan_range(int n, bool bipartite_only, const SearchTarget& target, std::uint64_t lo,
                       std::uint64_t hi, WorkerResult& out) {
    GraphEnumerator en(n, bipartite_only, lo, hi);
    while (auto g = en.next()) {
        if (target.exceeds(g->max_degree())) {  // radius <= max degree
            ++out.pruned;
            continue;
        }
        ++out.examined;
        const double l1 = spectral_radius(*g);
        if (std::abs(l1 - target.value()) > 1e-6)
            continue;
        if (verify_radius(*g, target).ok()) {
            out.found_mask = en.current_mask();
            return;
        }
    }
}

}  // namespace detail

inline KappaResult kappa(const SearchTarget& target, int max_order, bool use_pruning = true,
                         int jobs = 1, std::ostream* diag = nullptr) {
    if (!target.condition().satisfied)
        throw std::invalid_argument("kappa: target fails the realizability condition (" +
                                    target.describe() + ")");
    if (max_order < 1 || max_order > kMaxSearchOrder)
        throw std::invalid_argument("kappa: max_order must be in 1.." +
                                    std::to_string(kMaxSearchOrder));
    if (jobs < 1 || jobs > 256)
        throw std::invalid_argument("kappa: jobs must be in 1..256");

    KappaResult result;
    for (int n = 1; n <= max_order; ++n) {
        OrderStats st;
        st.order = n;
        const std::uint64_t total = graph_mask_count(n);

        const bool bip = use_pruning && target.forces_bipartite();
        if (use_pruning && (target.exceeds(n - 1) || (bip && target.exceeds_half(n)))) {
            st.skipped = true;
            st.pruned = total;
        } else {
            st.bipartite_only = bip;
            const int workers = static_cast<int>(
                std::min<std::uint64_t>(total, static_cast<std::uint64_t>(jobs)));
            std::vector<detail::WorkerResult> parts(workers);
            if (workers == 1) {
                detail::scan_range(n, bip, target, 0, total, parts[0]);
            } else {
                const std::uint64_t chunk = (total + workers - 1) / workers;
                std::vector<std::thread> pool;
                for (int w = 0; w < workers; ++w)
                    pool.emplace_back([&, w] {
                        const std::uint64_t lo = w * chunk;
                        const std::uint64_t hi = std::min(total, lo + chunk);
                        detail::scan_range(n, bip, target, lo, hi, parts[w]);
                    });
                for (auto& t : pool)
                    t.join();
            }
            std::optional<std::uint64_t> best;
            for (const auto& p : parts) {
                st.examined += p.examined;
                st.pruned += p.pruned;
                if (p.found_mask && (!best || *p.found_mask < *best))
                    best = p.found_mask;
            }
            if (best) {
                st.found = true;
                result.witness = graph_from_mask(n, *best);
            }
        }

        if (diag)
            (*diag) << "order=" << n << " examined=" << st.examined << " pruned=" << st.pruned
                    << " found=" << (st.found ? 1 : 0) << std::endl;
        result.orders.push_back(st);

        if (st.found) {
            if (!verify_radius(*result.witness, target).ok())
                throw std::logic_error("kappa: witness failed re-verification (bug)");
            result.outcome = KappaOutcome::found;
            result.order = n;
            return result;
        }
    }
    result.outcome = KappaOutcome::not_up_to;
    result.order = max_order;
    return result;
}

}  // namespace sro
