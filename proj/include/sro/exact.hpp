#pragma once

// Exact integer/rational machinery: dense integer polynomials, the
// characteristic polynomial via Faddeev-LeVerrier, exact divisibility,
// Sturm root counting over rational brackets, and a fraction-free
// (Bareiss) integer determinant.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sro/graph.hpp"

namespace sro {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

using IntMatrix = std::vector<std::vector<BigInt>>;

inline int sign_of(const BigInt& x) { return x == 0 ? 0 : (x > 0 ? 1 : -1); }

// Dense integer polynomial, coefficients ascending; the zero polynomial
// has an empty coefficient vector and degree -1.
class IntPolynomial {
public:
    IntPolynomial() = default;

    IntPolynomial(std::initializer_list<long long> coeffs) {
        for (long long c : coeffs)
            c_.emplace_back(c);
        normalize();
    }

    static IntPolynomial from_coeffs(std::vector<BigInt> coeffs) {
        IntPolynomial p;
        p.c_ = std::move(coeffs);
        p.normalize();
        return p;
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    const BigInt& coeff(int k) const {
        static const BigInt zero = 0;
        if (k < 0 || k >= static_cast<int>(c_.size()))
            return zero;
        return c_[k];
    }

    const BigInt& leading() const {
        if (c_.empty())
            throw std::logic_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    const std::vector<BigInt>& coeffs() const { return c_; }

    BigInt evaluate(const BigInt& x) const {
        BigInt r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            r = r * x + *it;
        return r;
    }

    BigRat evaluate(const BigRat& x) const {
        BigRat r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            r = r * x + BigRat(*it);
        return r;
    }

    double evaluate(double x) const {
        double r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            r = r * x + it->convert_to<double>();
        return r;
    }

    // Sign of p(a/b) for b > 0, via the homogeneous integer form.
    int sign_at(const BigRat& x) const {
        if (is_zero())
            return 0;
        const BigInt a = boost::multiprecision::numerator(x);
        const BigInt b = boost::multiprecision::denominator(x);
        BigInt acc = 0, bpow = 1;
        // sum c_i a^i b^(d-i), built from the top down
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc = acc * a + *it * bpow;
            if (it + 1 != c_.rend())
                bpow *= b;
        }
        return sign_of(acc);
    }

    IntPolynomial derivative() const {
        std::vector<BigInt> d;
        for (std::size_t i = 1; i < c_.size(); ++i)
            d.push_back(c_[i] * static_cast<long long>(i));
        return from_coeffs(std::move(d));
    }

    BigInt content() const {
        BigInt g = 0;
        for (const auto& c : c_)
            g = boost::multiprecision::gcd(g, c);
        return g;  // 0 for the zero polynomial, positive otherwise
    }

    IntPolynomial primitive_part() const {
        if (is_zero())
            return {};
        const BigInt g = content();
        std::vector<BigInt> d(c_);
        for (auto& c : d)
            c /= g;
        return from_coeffs(std::move(d));
    }

    friend IntPolynomial operator+(const IntPolynomial& f, const IntPolynomial& g) {
        std::vector<BigInt> c(std::max(f.c_.size(), g.c_.size()), 0);
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] = f.coeff(static_cast<int>(i)) + g.coeff(static_cast<int>(i));
        return from_coeffs(std::move(c));
    }

    friend IntPolynomial operator-(const IntPolynomial& f, const IntPolynomial& g) {
        std::vector<BigInt> c(std::max(f.c_.size(), g.c_.size()), 0);
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] = f.coeff(static_cast<int>(i)) - g.coeff(static_cast<int>(i));
        return from_coeffs(std::move(c));
    }

    friend IntPolynomial operator*(const IntPolynomial& f, const IntPolynomial& g) {
        if (f.is_zero() || g.is_zero())
            return {};
        std::vector<BigInt> c(f.c_.size() + g.c_.size() - 1, 0);
        for (std::size_t i = 0; i < f.c_.size(); ++i)
            for (std::size_t j = 0; j < g.c_.size(); ++j)
                c[i + j] += f.c_[i] * g.c_[j];
        return from_coeffs(std::move(c));
    }

    IntPolynomial operator-() const {
        std::vector<BigInt> c(c_);
        for (auto& x : c)
            x = -x;
        return from_coeffs(std::move(c));
    }

    bool operator==(const IntPolynomial&) const = default;

    // "c0 + c1*x + ... + ck*x^k": ascending degree, zero terms omitted.
    std::string to_string() const {
        if (is_zero())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0)
                continue;
            const bool neg = c_[i] < 0;
            BigInt mag = neg ? BigInt(-c_[i]) : c_[i];
            if (first)
                os << (neg ? "-" : "");
            else
                os << (neg ? " - " : " + ");
            first = false;
            if (i == 0)
                os << mag;
            else {
                if (mag != 1)
                    os << mag << "*";
                os << "x";
                if (i > 1)
                    os << "^" << i;
            }
        }
        return os.str();
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }

    std::vector<BigInt> c_;
};

// ---- characteristic polynomial (Faddeev-LeVerrier) ----

inline IntMatrix adjacency_int_matrix(const Graph& g) {
    const int n = g.order();
    IntMatrix a(n, std::vector<BigInt>(n, 0));
    for (auto [u, v] : g.edges()) {
        a[u][v] = 1;
        a[v][u] = 1;
    }
    return a;
}

inline IntMatrix signless_laplacian_int_matrix(const Graph& g) {
    auto a = adjacency_int_matrix(g);
    for (int i = 0; i < g.order(); ++i)
        a[i][i] = g.degree(i);
    return a;
}

// det(xI - A), exact. The interim divisions below are exact over the
// integers; that is asserted rather than assumed.
inline IntPolynomial char_poly(const IntMatrix& a) {
    const std::size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n)
            throw std::invalid_argument("char_poly: matrix must be square");
    if (n == 0)
        return IntPolynomial{1};

    std::vector<BigInt> coeff(n + 1, 0);
    coeff[n] = 1;
    IntMatrix nmat(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        nmat[i][i] = 1;

    for (std::size_t k = 1; k <= n; ++k) {
        IntMatrix m(n, std::vector<BigInt>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) {
                if (a[i][l] == 0)
                    continue;
                for (std::size_t j = 0; j < n; ++j)
                    m[i][j] += a[i][l] * nmat[l][j];
            }
        BigInt tr = 0;
        for (std::size_t i = 0; i < n; ++i)
            tr += m[i][i];
        BigInt q, r;
        boost::multiprecision::divide_qr(BigInt(-tr), BigInt(k), q, r);
        if (r != 0)
            throw std::logic_error("char_poly: non-exact trace division (bug)");
        coeff[n - k] = q;
        nmat = std::move(m);
        for (std::size_t i = 0; i < n; ++i)
            nmat[i][i] += q;
    }
    return IntPolynomial::from_coeffs(std::move(coeff));
}

inline IntPolynomial char_poly(const Graph& g) { return char_poly(adjacency_int_matrix(g)); }

// ---- exact division ----

// True iff d divides p over the rationals (exact arithmetic).
inline bool divides(const IntPolynomial& d, const IntPolynomial& p) {
    if (d.is_zero())
        throw std::invalid_argument("divides: zero divisor");
    if (p.is_zero())
        return true;
    if (p.degree() < d.degree())
        return false;
    std::vector<BigRat> rem(p.degree() + 1);
    for (int i = 0; i <= p.degree(); ++i)
        rem[i] = BigRat(p.coeff(i));
    const BigRat lead(d.leading());
    for (int k = p.degree(); k >= d.degree(); --k) {
        const BigRat f = rem[k] / lead;
        if (f == 0)
            continue;
        for (int j = 0; j <= d.degree(); ++j)
            rem[k - d.degree() + j] -= f * BigRat(d.coeff(j));
    }
    for (const auto& c : rem)
        if (c != 0)
            return false;
    return true;
}

// Quotient p/d for monic d when the division is exact.
inline std::optional<IntPolynomial> divide_monic(const IntPolynomial& p, const IntPolynomial& d) {
    if (d.is_zero() || d.leading() != 1)
        throw std::invalid_argument("divide_monic: divisor must be monic");
    std::vector<BigInt> rem(p.coeffs());
    rem.resize(std::max<std::size_t>(rem.size(), 1), 0);
    std::vector<BigInt> quot(p.degree() >= d.degree() ? p.degree() - d.degree() + 1 : 0, 0);
    for (int k = p.degree(); k >= d.degree(); --k) {
        const BigInt f = rem[k];
        if (f == 0)
            continue;
        quot[k - d.degree()] = f;
        for (int j = 0; j <= d.degree(); ++j)
            rem[k - d.degree() + j] -= f * d.coeff(j);
    }
    for (const auto& c : rem)
        if (c != 0)
            return std::nullopt;
    return IntPolynomial::from_coeffs(std::move(quot));
}

// ---- rational root bracket ----

struct RationalBracket {
    BigRat lo, hi;
    RationalBracket(BigRat l, BigRat h) : lo(std::move(l)), hi(std::move(h)) {
        if (!(lo < hi))
            throw std::invalid_argument("RationalBracket: lo < hi required");
    }
};

// Cauchy bound: every real root of p has |root| < 1 + max |c_i| / |c_d|.
inline BigRat root_bound(const IntPolynomial& p) {
    if (p.is_zero())
        throw std::invalid_argument("root_bound: zero polynomial");
    BigInt top = 0;
    for (int i = 0; i < p.degree(); ++i) {
        BigInt m = p.coeff(i) < 0 ? BigInt(-p.coeff(i)) : p.coeff(i);
        if (m > top)
            top = m;
    }
    BigInt lead = p.leading() < 0 ? BigInt(-p.leading()) : p.leading();
    return BigRat(1) + BigRat(top, lead);
}

// ---- Sturm chains ----

namespace detail {

// Pseudo-remainder of (lc(g)^(deg f - deg g + 1) * f) mod g, integer-only.
inline IntPolynomial pseudo_rem(const IntPolynomial& f, const IntPolynomial& g, int& mult_parity_neg) {
    const int df = f.degree(), dg = g.degree();
    const BigInt& lg = g.leading();
    std::vector<BigInt> r(f.coeffs());
    int steps = df - dg + 1;
    mult_parity_neg = (lg < 0 && (steps % 2 == 1)) ? 1 : 0;
    for (int k = df; k >= dg; --k) {
        const BigInt top = r[k];
        for (auto& c : r)
            c *= lg;
        if (top != 0)
            for (int j = 0; j <= dg; ++j)
                r[k - dg + j] -= top * g.coeff(j);
        // r[k] is now zero; keep full vector, normalization happens later
    }
    r.resize(dg > 0 ? dg : 0);
    return IntPolynomial::from_coeffs(std::move(r));
}

inline std::vector<IntPolynomial> sturm_chain(const IntPolynomial& p) {
    std::vector<IntPolynomial> chain;
    chain.push_back(p.primitive_part());
    IntPolynomial d = p.derivative();
    if (d.is_zero())
        return chain;
    chain.push_back(d.primitive_part());
    while (true) {
        const IntPolynomial& a = chain[chain.size() - 2];
        const IntPolynomial& b = chain.back();
        if (b.degree() < 1)
            break;
        int neg_mult = 0;
        IntPolynomial r = pseudo_rem(a, b, neg_mult);
        if (r.is_zero())
            break;
        // next element is -rem(a, b) up to a positive factor
        IntPolynomial next = neg_mult ? r.primitive_part() : (-r).primitive_part();
        chain.push_back(std::move(next));
    }
    return chain;
}

inline int sign_variations(const std::vector<IntPolynomial>& chain, const BigRat& x) {
    int prev = 0, var = 0;
    for (const auto& s : chain) {
        const int sg = s.sign_at(x);
        if (sg == 0)
            continue;
        if (prev != 0 && sg != prev)
            ++var;
        prev = sg;
    }
    return var;
}

}  // namespace detail

// Number of distinct real roots of p in (lo, hi]. If hi lands exactly on
// a root it is nudged upward by a tiny rational so the root still counts;
// lo landing on a root is an error.
inline int sturm_count(const IntPolynomial& p, const RationalBracket& bracket) {
    if (p.is_zero())
        throw std::invalid_argument("sturm_count: zero polynomial");
    BigRat lo = bracket.lo, hi = bracket.hi;
    if (p.sign_at(lo) == 0)
        throw std::invalid_argument("sturm_count: lower endpoint is a root");
    if (p.sign_at(hi) == 0) {
        const BigRat eps(BigInt(1), BigInt(1) << 80);
        hi += eps;
        if (p.sign_at(hi) == 0)
            throw std::invalid_argument("sturm_count: endpoint still a root after perturbation");
    }
    const auto chain = detail::sturm_chain(p);
    return detail::sign_variations(chain, lo) - detail::sign_variations(chain, hi);
}

// True iff minpoly divides p, the bracket isolates the largest real root
// of minpoly, and p has no root above the bracket -- so that root is also
// the maximum root of p.
inline bool certify_largest_root(const IntPolynomial& p, const IntPolynomial& minpoly,
                                 const RationalBracket& bracket) {
    if (p.is_zero() || minpoly.is_zero())
        throw std::invalid_argument("certify_largest_root: zero polynomial");
    if (!divides(minpoly, p))
        return false;
    BigRat top = root_bound(p);
    const BigRat top_m = root_bound(minpoly);
    if (top_m > top)
        top = top_m;
    if (top <= bracket.hi)
        top = bracket.hi + 1;
    if (sturm_count(minpoly, bracket) != 1)
        return false;
    if (sturm_count(minpoly, RationalBracket(bracket.hi, top)) != 0)
        return false;
    return sturm_count(p, RationalBracket(bracket.hi, top)) == 0;
}

// ---- exact determinant (Bareiss) ----

inline BigInt det_exact(IntMatrix a) {
    const std::size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n)
            throw std::invalid_argument("det_exact: matrix must be square");
    if (n == 0)
        return 1;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k] == 0)
                ++swap_row;
            if (swap_row == n)
                return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                BigInt q, r;
                boost::multiprecision::divide_qr(num, prev, q, r);
                if (r != 0)
                    throw std::logic_error("det_exact: non-exact division (bug)");
                a[i][j] = std::move(q);
            }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : BigInt(-a[n - 1][n - 1]);
}

}  // namespace sro
