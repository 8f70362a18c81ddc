#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "heroncurves/errors.hpp"
#include "heroncurves/rational.hpp"

namespace heroncurves {

/// Short Weierstrass model y^2 = x^3 + Ax + B over the rationals.
/// Singular models (discriminant 0) are representable; only the group law
/// is gated on the `elliptic` flag.
class WeierstrassCurve {
public:
    WeierstrassCurve(Rational a, Rational b)
        : a_(std::move(a)), b_(std::move(b)),
          disc_(-16 * (4 * a_ * a_ * a_ + 27 * b_ * b_)) {}

    const Rational& A() const { return a_; }
    const Rational& B() const { return b_; }
    const Rational& discriminant() const { return disc_; }
    bool elliptic() const { return !disc_.is_zero(); }

    Rational rhs(const Rational& x) const { return x * x * x + a_ * x + b_; }

    friend bool operator==(const WeierstrassCurve& e1, const WeierstrassCurve& e2) {
        return e1.a_ == e2.a_ && e1.b_ == e2.b_;
    }

private:
    Rational a_, b_, disc_;
};

/// Quadratic twist-free rescaling (x, y) -> (lambda^2 x, lambda^3 y):
/// (A, B) -> (lambda^4 A, lambda^6 B).
inline WeierstrassCurve scale_curve(const WeierstrassCurve& e, const Rational& lambda) {
    Rational l2 = lambda * lambda;
    Rational l4 = l2 * l2;
    return WeierstrassCurve(l4 * e.A(), l4 * l2 * e.B());
}

struct ECPoint {
    bool infinity = true;
    Rational x, y;

    static ECPoint infinite() { return ECPoint{}; }
    static ECPoint affine(Rational px, Rational py) { return ECPoint{false, std::move(px), std::move(py)}; }

    friend bool operator==(const ECPoint& p, const ECPoint& r) {
        if (p.infinity || r.infinity) return p.infinity == r.infinity;
        return p.x == r.x && p.y == r.y;
    }
    friend bool operator!=(const ECPoint& p, const ECPoint& r) { return !(p == r); }
};

inline bool on_curve(const WeierstrassCurve& e, const ECPoint& p) {
    if (p.infinity) return true;
    return p.y * p.y == e.rhs(p.x);
}

inline ECPoint negate(const ECPoint& p) {
    if (p.infinity) return p;
    return ECPoint::affine(p.x, -p.y);
}

namespace detail {

// chord-tangent law; assumes both points on the curve
inline ECPoint add_unchecked(const WeierstrassCurve& e, const ECPoint& p, const ECPoint& r) {
    if (p.infinity) return r;
    if (r.infinity) return p;
    Rational lambda;
    if (p.x == r.x) {
        if ((p.y + r.y).is_zero()) return ECPoint::infinite();
        lambda = (3 * p.x * p.x + e.A()) / (2 * p.y);
    } else {
        lambda = (r.y - p.y) / (r.x - p.x);
    }
    Rational x3 = lambda * lambda - p.x - r.x;
    Rational y3 = lambda * (p.x - x3) - p.y;
    return ECPoint::affine(x3, y3);
}

inline void require_group(const WeierstrassCurve& e, const ECPoint& p) {
    if (!e.elliptic()) throw singular_curve_error();
    if (!on_curve(e, p)) throw not_on_curve_error();
}

}  // namespace detail

inline ECPoint add(const WeierstrassCurve& e, const ECPoint& p, const ECPoint& r) {
    detail::require_group(e, p);
    detail::require_group(e, r);
    return detail::add_unchecked(e, p, r);
}

/// k*P by double-and-add; negative k through the inverse.
inline ECPoint scalar_mul(const WeierstrassCurve& e, long k, const ECPoint& p) {
    detail::require_group(e, p);
    if (k < 0) return scalar_mul(e, -k, negate(p));
    ECPoint acc = ECPoint::infinite();
    ECPoint base = p;
    while (k) {
        if (k & 1) acc = detail::add_unchecked(e, acc, base);
        base = detail::add_unchecked(e, base, base);
        k >>= 1;
    }
    return acc;
}

namespace detail {

// Integer roots of the monic cubic z^3 + p z + r. The real roots lie in
// [-M, M] with M = 1 + max(|p|, |r|); the integer line is split into at
// most three ranges on which the cubic is monotone, and each range is
// binary-searched for an exact zero.
inline std::vector<Integer> monic_cubic_integer_roots(const Integer& p, const Integer& r) {
    auto f = [&](const Integer& z) -> Integer { return z * z * z + p * z + r; };
    Integer m = 1 + std::max(Integer(::abs(p)), Integer(::abs(r)));

    std::vector<std::pair<Integer, Integer>> ranges;
    if (p >= 0) {
        ranges.emplace_back(-m, m);
    } else {
        Integer third;
        mpz_fdiv_q_ui(third.get_mpz_t(), Integer(-p).get_mpz_t(), 3);
        Integer zf;
        mpz_sqrt(zf.get_mpz_t(), third.get_mpz_t());  // zf = floor(sqrt(-p/3))
        ranges.emplace_back(-m, -zf - 1);   // increasing
        ranges.emplace_back(-zf, zf);       // decreasing
        ranges.emplace_back(zf + 1, m);     // increasing
    }

    std::vector<Integer> roots;
    for (auto& [lo, hi] : ranges) {
        if (lo > hi) continue;
        Integer flo = f(lo), fhi = f(hi);
        if (flo == 0) roots.push_back(lo);
        if (fhi == 0 && hi != lo) roots.push_back(hi);
        bool increasing = flo <= fhi;
        Integer neg = increasing ? flo : fhi;
        Integer pos = increasing ? fhi : flo;
        if (neg > 0 || pos < 0) continue;
        Integer a = lo, b = hi;
        while (b - a > 1) {
            Integer mid = (a + b) / 2;
            Integer fm = f(mid);
            if (fm == 0) { roots.push_back(mid); break; }
            bool below = increasing ? (fm < 0) : (fm > 0);
            (below ? a : b) = mid;
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace detail

/// All rational 2-torsion points (r, 0): rational roots of x^3 + Ax + B,
/// found on the denominator-cleared monic integer cubic. List length is
/// 0, 1 or 3 for an elliptic curve.
inline std::vector<ECPoint> two_torsion(const WeierstrassCurve& e) {
    if (!e.elliptic()) throw singular_curve_error();
    Integer k = lcm(e.A().den(), e.B().den());
    Rational kq(k);
    Integer p = (e.A() * kq * kq).num();
    Integer r = (e.B() * kq * kq * kq).num();
    std::vector<ECPoint> out;
    for (const Integer& z : detail::monic_cubic_integer_roots(p, r))
        out.push_back(ECPoint::affine(Rational(z, k), Rational(0)));
    return out;
}

/// Exact order of P when finite, absent when P has infinite order. By
/// Mazur's theorem a rational torsion point has order in {1..10, 12}, so
/// checking multiples up to 12 certifies infinite order.
inline std::optional<int> torsion_order(const WeierstrassCurve& e, const ECPoint& p) {
    detail::require_group(e, p);
    if (p.infinity) return 1;
    ECPoint acc = p;
    for (int k = 2; k <= 12; ++k) {
        acc = detail::add_unchecked(e, acc, p);
        if (acc.infinity) return k;
    }
    return std::nullopt;
}

/// The lambda with lambda^4 A1 = A2 and lambda^6 B1 = B2, if the curves are
/// isomorphic over Q; absent otherwise. Positive root returned.
inline std::optional<Rational> curves_isomorphic(const WeierstrassCurve& e1, const WeierstrassCurve& e2) {
    if (!e1.elliptic() || !e2.elliptic()) throw singular_curve_error();
    auto verify = [&](const Rational& l) {
        Rational l2 = l * l, l4 = l2 * l2, l6 = l4 * l2;
        return l4 * e1.A() == e2.A() && l6 * e1.B() == e2.B();
    };
    if (!e1.A().is_zero() && !e1.B().is_zero()) {
        if (e2.A().is_zero() || e2.B().is_zero()) return std::nullopt;
        Rational l2 = (e1.A() * e2.B()) / (e2.A() * e1.B());
        auto l = rational_sqrt(l2);
        if (!l || l->is_zero() || !verify(*l)) return std::nullopt;
        return *l;
    }
    if (e1.A().is_zero()) {
        if (!e2.A().is_zero()) return std::nullopt;
        auto l2 = rational_cbrt(e2.B() / e1.B());
        if (!l2) return std::nullopt;
        auto l = rational_sqrt(*l2);
        if (!l || l->is_zero() || !verify(*l)) return std::nullopt;
        return *l;
    }
    // B1 = 0
    if (!e2.B().is_zero()) return std::nullopt;
    auto l2 = rational_sqrt(e2.A() / e1.A());
    if (!l2) return std::nullopt;
    auto l = rational_sqrt(*l2);
    if (!l || l->is_zero() || !verify(*l)) return std::nullopt;
    return *l;
}

inline double log_of_integer(const Integer& n) {
    long exp2;
    double d = mpz_get_d_2exp(&exp2, n.get_mpz_t());
    return std::log(std::fabs(d)) + static_cast<double>(exp2) * std::log(2.0);
}

struct HeightEstimate {
    double value = 0.0;                 // log(naive_height(x(2^depth P))) / 4^depth
    std::vector<double> sequence;       // the same quantity for n = 1..depth
};

/// Doubling-limit estimate of the canonical height. Shallow depth keeps the
/// bignum sizes tractable; the per-step sequence is reported so callers can
/// observe stabilization. Torsion input is an error (its height is exactly 0).
inline HeightEstimate canonical_height(const WeierstrassCurve& e, const ECPoint& p, int depth) {
    if (depth < 1 || depth > 5) throw std::invalid_argument("canonical_height: depth must be in [1, 5]");
    detail::require_group(e, p);
    if (p.infinity || torsion_order(e, p).has_value()) throw torsion_point_error();
    HeightEstimate est;
    ECPoint q = p;
    double denom = 1.0;
    for (int n = 1; n <= depth; ++n) {
        q = detail::add_unchecked(e, q, q);
        denom *= 4.0;
        est.sequence.push_back(log_of_integer(naive_height(q.x)) / denom);
    }
    est.value = est.sequence.back();
    return est;
}

namespace detail {

inline double height_or_zero(const WeierstrassCurve& e, const ECPoint& p, int depth) {
    if (p.infinity || torsion_order(e, p).has_value()) return 0.0;
    return canonical_height(e, p, depth).value;
}

}  // namespace detail

/// Height-pairing Gram determinant h(P)h(Q) - <P,Q>^2 with
/// <P,Q> = (h(P+Q) - h(P) - h(Q)) / 2 at the given estimation depth.
inline double independence_gram_det(const WeierstrassCurve& e, const ECPoint& p, const ECPoint& q,
                                    int depth) {
    detail::require_group(e, p);
    detail::require_group(e, q);
    if (torsion_order(e, p).has_value() || torsion_order(e, q).has_value())
        throw torsion_point_error();
    double hp = canonical_height(e, p, depth).value;
    double hq = canonical_height(e, q, depth).value;
    double hpq = detail::height_or_zero(e, detail::add_unchecked(e, p, q), depth);
    double pairing = (hpq - hp - hq) / 2.0;
    return hp * hq - pairing * pairing;
}

/// Heuristic linear-independence test: true iff the Gram determinant
/// estimate exceeds the tolerance. This is evidence, not a proof.
inline bool independence_heuristic(const WeierstrassCurve& e, const ECPoint& p, const ECPoint& q,
                                   int depth, double tolerance) {
    return independence_gram_det(e, p, q, depth) > tolerance;
}

}  // namespace heroncurves
