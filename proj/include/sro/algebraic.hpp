#pragma once

// Algebraic targets and screens: which numbers can be a spectral radius
// at all (totally real, dominant, positive), classification of 2cos(2*pi*k/n)
// values, Hoffman's limit values, and the equiangular-lines count.

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "sro/exact.hpp"

namespace sro {

struct ConditionReport {
    bool totally_real = false;  // both roots real
    bool dominant = false;      // largest root >= |other root|
    bool positive = false;      // largest root > 0
    bool satisfied = false;
    double value = std::numeric_limits<double>::quiet_NaN();      // largest root
    double conjugate = std::numeric_limits<double>::quiet_NaN();  // other root
};

// Screen for x^2 + b*x + c: the largest root is realizable as a spectral
// radius only if it is real, dominates its conjugate in absolute value,
// and is positive. All three tests are exact integer comparisons.
inline ConditionReport check_condition_quadratic(long long b, long long c) {
    ConditionReport r;
    const BigInt D = BigInt(b) * b - BigInt(4) * c;
    r.totally_real = D >= 0;
    r.dominant = b <= 0;
    r.positive = (D >= 0) && (c < 0 || (b < 0));
    r.satisfied = r.totally_real && r.dominant && r.positive;
    if (D >= 0) {
        const double sd = std::sqrt(D.convert_to<double>());
        r.value = (-double(b) + sd) / 2;
        r.conjugate = (-double(b) - sd) / 2;
    }
    return r;
}

inline bool is_perfect_square(const BigInt& x) {
    if (x < 0)
        return false;
    const BigInt s = boost::multiprecision::sqrt(x);
    return s * s == x;
}

// Largest root of x^2 + b*x + c with both roots real.
class QuadraticTarget {
public:
    QuadraticTarget(long long b, long long c) : b_(b), c_(c), disc_(BigInt(b) * b - BigInt(4) * c) {
        if (disc_ < 0)
            throw std::invalid_argument("QuadraticTarget: complex roots (b^2 - 4c < 0)");
    }

    long long b() const { return b_; }
    long long c() const { return c_; }
    const BigInt& discriminant() const { return disc_; }

    bool degenerate() const { return is_perfect_square(disc_); }  // rational roots

    double value() const {
        return (-double(b_) + std::sqrt(disc_.convert_to<double>())) / 2;
    }
    double conjugate_value() const {
        return (-double(b_) - std::sqrt(disc_.convert_to<double>())) / 2;
    }

    // For rational (hence integer) roots the minimal polynomial drops to
    // degree one; otherwise it is x^2 + b*x + c itself.
    IntPolynomial min_poly() const {
        if (!degenerate())
            return IntPolynomial{c_, b_, 1};
        const BigInt s = boost::multiprecision::sqrt(disc_);
        const BigInt two_root = s - b_;  // always even: b and s share parity
        if ((two_root & 1) != 0)
            throw std::logic_error("QuadraticTarget: parity bug");
        return IntPolynomial::from_coeffs({BigInt(-(two_root / 2)), BigInt(1)});
    }

    ConditionReport condition() const { return check_condition_quadratic(b_, c_); }

    // Exact: largest root > t.
    bool exceeds(long long t) const {
        // largest root <= t  <=>  t is right of the vertex and q(t) >= 0
        const bool le = (2 * t + b_ >= 0) && (BigInt(t) * t + BigInt(b_) * t + c_ >= 0);
        return !le;
    }

    // Exact: largest root > n/2.
    bool exceeds_half(long long n) const {
        const bool le = (n + b_ >= 0) && (BigInt(n) * n + BigInt(2) * b_ * n + BigInt(4) * c_ >= 0);
        return !le;
    }

    // Rational bracket of width <= 1e-12 isolating the largest root,
    // produced by exact bisection; endpoints are never roots.
    RationalBracket bracket() const {
        const BigRat w(BigInt(1), boost::multiprecision::pow(BigInt(10), 12));
        if (degenerate()) {
            const BigInt s = boost::multiprecision::sqrt(disc_);
            const BigRat root(s - b_, 2);
            return RationalBracket(root - w / 2, root + w / 2);
        }
        const IntPolynomial q{c_, b_, 1};
        BigRat lo(-b_, 2);  // vertex: q < 0 there since disc > 0
        BigRat hi(std::llabs(b_) + std::llabs(c_) + 1);
        while (hi - lo > w) {
            const BigRat mid = (lo + hi) / 2;
            if (q.sign_at(mid) < 0)
                lo = mid;
            else
                hi = mid;
        }
        return RationalBracket(lo, hi);
    }

private:
    long long b_, c_;
    BigInt disc_;
};

// ---- classification of lambda = 2cos(2*pi*k/n) ----

enum class ClassifyKind { path_order, special_two, rejected };
enum class RejectReason { none, not_positive, not_dominant };

struct ClassifyResult {
    int k = 0, n = 0;
    ClassifyKind kind = ClassifyKind::rejected;
    RejectReason reason = RejectReason::none;
    int q = 0;  // lambda = 2cos(pi/q), spectral radius of a path on q-1 vertices
    double lambda = std::numeric_limits<double>::quiet_NaN();
    int conjugate_k = 0;  // dominating conjugate witness for rejections
    double conjugate_value = std::numeric_limits<double>::quiet_NaN();
};

// Decides whether 2cos(2*pi*k/n) is realizable as a spectral radius.
// Positivity and conjugate dominance reduce to integer comparisons: with
// d(k') = distance of 2k' to the nearest multiple of n, the conjugates of
// lambda are 2cos(2*pi*k'/n) over k' coprime to n and |2cos(2*pi*k'/n)| =
// 2cos(pi*d(k')/n). Accepted values are exactly lambda = 2cos(pi/q).
inline ClassifyResult classify_leq2(int k, int n) {
    ClassifyResult r;
    r.k = k;
    r.n = n;
    if (n < 1 || k < 1 || k > n)
        throw std::invalid_argument("classify_leq2: need 1 <= k <= n");
    if (std::gcd(k, n) != 1)
        throw std::invalid_argument("classify_leq2: k and n must be coprime");
    if (k == n) {  // only (1,1) survives the gcd check: lambda = 2
        r.kind = ClassifyKind::special_two;
        r.lambda = 2.0;
        return r;
    }
    r.lambda = 2 * std::cos(2 * std::numbers::pi * k / n);

    const long long fourk = 4LL * k;
    if (!(fourk < n || fourk > 3LL * n)) {  // cos <= 0
        r.kind = ClassifyKind::rejected;
        r.reason = RejectReason::not_positive;
        return r;
    }

    // lambda > 0 here. Dominant positive values require even n with
    // k = 1 or n-1 (then d(k) = 2, the minimum over all conjugates).
    if (n % 2 == 0 && (k == 1 || k == n - 1)) {
        r.kind = ClassifyKind::path_order;
        r.q = n / 2;
        return r;
    }
    r.kind = ClassifyKind::rejected;
    r.reason = RejectReason::not_dominant;
    r.conjugate_k = (n % 2 == 1) ? (n - 1) / 2 : 1;
    r.conjugate_value = 2 * std::cos(2 * std::numbers::pi * r.conjugate_k / n);
    return r;
}

// ---- Hoffman limit values ----

// alpha_n = sqrt(beta_n) + 1/sqrt(beta_n) where beta_n is the unique
// root >= 1 of x^(n+1) = 1 + x + ... + x^(n-1), found by bisection on
// [1, 2]. The alpha_n increase strictly toward sqrt(2 + sqrt(5)).
inline double hoffman_alpha(int n, double tol = 1e-13) {
    if (n < 1)
        throw std::invalid_argument("hoffman_alpha: n >= 1 required");
    if (n > 1000)
        throw std::invalid_argument("hoffman_alpha: n too large");
    const auto eval = [n](double x) {
        // x^(n+1) - (x^(n-1) + ... + x + 1), Horner
        double r = 1.0;   // degree n+1 coefficient
        r = r * x + 0.0;  // degree n
        for (int i = n - 1; i >= 0; --i)
            r = r * x - 1.0;
        return r;
    };
    double lo = 1.0, hi = 2.0;  // eval(1) = 1-n <= 0, eval(2) = 2^n + 1 > 0
    while (hi - lo > tol) {
        const double mid = (lo + hi) / 2;
        if (eval(mid) <= 0)
            lo = mid;
        else
            hi = mid;
    }
    const double beta = (lo + hi) / 2;
    const double s = std::sqrt(beta);
    return s + 1 / s;
}

// ---- equiangular lines ----

// Maximum number of equiangular lines in dimension d at angle
// arccos(1/(2*lambda+1)) given kappa = kappa(lambda):
// floor((d-1)*kappa / (kappa-1)).
inline long long equiangular_count(long long d, long long kappa) {
    if (d < 1)
        throw std::invalid_argument("equiangular_count: d >= 1 required");
    if (kappa < 2)
        throw std::invalid_argument("equiangular_count: kappa >= 2 required");
    if (d > 1000000000LL || kappa > 1000000000LL)
        throw std::invalid_argument("equiangular_count: argument too large");
    return (d - 1) * kappa / (kappa - 1);
}

// lambda = (1 - alpha) / (2 alpha) for alpha = p/q, exact.
inline BigRat lambda_from_alpha(long long p, long long q) {
    if (p < 1 || q < 1 || p >= q)
        throw std::invalid_argument("lambda_from_alpha: need 0 < p/q < 1");
    return BigRat(BigInt(q - p), BigInt(2 * p));
}

}  // namespace sro
