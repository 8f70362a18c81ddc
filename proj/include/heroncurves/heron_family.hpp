#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "heroncurves/errors.hpp"
#include "heroncurves/geometry.hpp"
#include "heroncurves/rational.hpp"
#include "heroncurves/weierstrass.hpp"

namespace heroncurves {

/// Parameters of the Heron family: base endpoint (q, 0) and vertex line
/// y = mx + 1. The general intercept b only enters build_IJ; everything
/// else works with b = 1, justified by the scaling isomorphism
/// E_{m,b,q} ~ E_{m,1,q/b}.
struct HeronParams {
    Rational m, q;
};

inline bool params_elliptic(const HeronParams& p) {
    return !p.q.is_zero() && !(p.m * p.q + 1).is_zero();
}

/// Projective point on the quadric-intersection curve C_{m,q} in P^3.
struct CPoint {
    Rational x1, x2, x3, x4;

    friend bool operator==(const CPoint& a, const CPoint& b) {
        return a.x1 == b.x1 && a.x2 == b.x2 && a.x3 == b.x3 && a.x4 == b.x4;
    }
    friend bool operator!=(const CPoint& a, const CPoint& b) { return !(a == b); }
    friend bool operator<(const CPoint& a, const CPoint& b) {
        return std::tie(a.x1, a.x2, a.x3, a.x4) < std::tie(b.x1, b.x2, b.x3, b.x4);
    }
};

/// Point on the quartic model C'_{m,q} in weighted projective space with
/// weights (1, 2, 1): (x : y : z) ~ (lx : l^2 y : lz).
struct CQuarticPoint {
    Rational x, y, z;

    friend bool operator==(const CQuarticPoint& a, const CQuarticPoint& b) {
        return a.x == b.x && a.y == b.y && a.z == b.z;
    }
    friend bool operator!=(const CQuarticPoint& a, const CQuarticPoint& b) { return !(a == b); }
};

// ---------------------------------------------------------------------------
// curve constructions

/// The classical invariants I_{m,b,q}, J_{m,b,q} of the intersection curve.
inline std::pair<Rational, Rational> build_IJ(const Rational& m, const Rational& b, const Rational& q) {
    Rational m2 = m * m;
    Rational i = 256 * (pow_int(b, 4) + 2 * pow_int(b, 3) * m * q + (5 * m2 + 4) * b * b * q * q +
                        4 * m * b * (m2 + 1) * pow_int(q, 3) + pow_int(m2 + 1, 2) * pow_int(q, 4));
    Rational j = 4096 * (2 * b * b + 2 * b * m * q + (m2 + 1) * q * q) *
                 (pow_int(b, 4) + 2 * pow_int(b, 3) * m * q - b * b * (7 * m2 + 8) * q * q -
                  8 * b * m * (m2 + 1) * pow_int(q, 3) - 2 * pow_int(m2 + 1, 2) * pow_int(q, 4));
    return {i, j};
}

/// The short Weierstrass model E_{m,q}. Singular exactly when mq + 1 = 0
/// (flagged, not thrown); q = 0 is rejected outright.
inline WeierstrassCurve build_E(const Rational& m, const Rational& q) {
    if (q.is_zero()) throw degenerate_params_error("build_E: q = 0");
    Rational m2 = m * m, q2 = q * q;
    Rational m2p1 = m2 + 1;
    Rational a = -(pow_int(m2p1, 2) * q2 * q2 + 4 * m * m2p1 * q2 * q + (5 * m2 + 4) * q2 +
                   2 * m * q + 1) / 3;
    Rational b = (2 * pow_int(m2p1, 2) * q2 * q2 + 8 * m * m2p1 * q2 * q + (7 * m2 + 8) * q2 -
                  2 * m * q - 1) *
                 (m2p1 * q2 + 2 * m * q + 2) / 27;
    auto [i, j] = build_IJ(m, Rational(1), q);
    if (a * 768 != -i || b * 110592 != -j)
        throw std::logic_error("build_E: model disagrees with I/J invariants");
    return WeierstrassCurve(a, b);
}

// ---------------------------------------------------------------------------
// membership

/// Exact membership in both quadrics of C_{m,q} (homogeneous, raw coordinates).
inline bool c_on_curve(const HeronParams& p, const CPoint& c) {
    if (c.x1.is_zero() && c.x2.is_zero() && c.x3.is_zero() && c.x4.is_zero()) return false;
    Rational m2p1 = p.m * p.m + 1;
    Rational q1 = m2p1 * c.x1 * c.x1 + 2 * p.m * c.x1 * c.x4 + c.x4 * c.x4 - c.x2 * c.x2;
    Rational q2 = m2p1 * c.x1 * c.x1 + 2 * (p.m - p.q) * c.x1 * c.x4 +
                  (1 + p.q * p.q) * c.x4 * c.x4 - c.x3 * c.x3;
    return q1.is_zero() && q2.is_zero();
}

/// Right-hand side of the quartic model as a binary form in (x, z).
inline Rational quartic_form(const HeronParams& p, const Rational& x, const Rational& z) {
    Rational c = (1 + p.m * p.q) / 2;
    Rational mid = (1 - p.m * p.m / Rational(2)) * p.q * p.q - p.m * p.q + Rational(1, 2);
    return c * c * pow_int(x, 4) + p.q * (1 + p.m * p.q) * pow_int(x, 3) * z +
           mid * x * x * z * z - p.q * (1 + p.m * p.q) * x * pow_int(z, 3) + c * c * pow_int(z, 4);
}

inline bool cprime_on_curve(const HeronParams& p, const CQuarticPoint& c) {
    if (c.x.is_zero() && c.y.is_zero() && c.z.is_zero()) return false;
    return c.y * c.y == quartic_form(p, c.x, c.z);
}

// ---------------------------------------------------------------------------
// equivalence classes

/// The class representative with x4 = 1 and x2, x3 >= 0. Classes, not
/// points, correspond to triangles; all class-level comparisons go through
/// this normalization.
inline CPoint canonicalize_class(const CPoint& p) {
    if (p.x4.is_zero()) throw infinite_point_error();
    return CPoint{p.x1 / p.x4, abs(p.x2 / p.x4), abs(p.x3 / p.x4), Rational(1)};
}

inline bool same_class(const CPoint& a, const CPoint& b) {
    return canonicalize_class(a) == canonicalize_class(b);
}

/// Normal form of a weighted projective point: z = 1 charts use (x/z, y/z^2, 1),
/// points at infinity are scaled to x = 1.
inline CQuarticPoint normalize_quartic(const CQuarticPoint& p) {
    if (!p.z.is_zero()) return CQuarticPoint{p.x / p.z, p.y / (p.z * p.z), Rational(1)};
    if (p.x.is_zero()) throw error("normalize_quartic: (0 : y : 0) is not on the curve");
    return CQuarticPoint{Rational(1), p.y / (p.x * p.x), Rational(0)};
}

// ---------------------------------------------------------------------------
// the isomorphisms C <-> C' <-> E
//
// The forward quadratic map psi collapses x1 + x2 = 0, which on the curve
// happens exactly at the pair (-1/m : 1/m : +-(q + 1/m) : 1); those two go
// to the points at infinity of the quartic. phi sends the quartic infinity
// with y/x^2 = +(mq+1)/2 to the group identity and its mirror to (b/3, q),
// and (b/3, -q) pulls back to an affine quartic point. All of this is the
// unwinding of one isomorphism of smooth genus-1 curves, so round trips are
// exact identities on points.

namespace detail {

inline void require_psi_domain(const HeronParams& p) {
    if (p.m.is_zero()) throw zero_slope_error();
    if (!params_elliptic(p)) throw singular_curve_error();
}

}  // namespace detail

inline CQuarticPoint psi(const HeronParams& p, const CPoint& c) {
    detail::require_psi_domain(p);
    Rational w = c.x1 + c.x2;
    if (!w.is_zero())
        return CQuarticPoint{p.m * c.x1 + c.x4, c.x3 * w, w};
    // exceptional pair (-1/m : 1/m : +-(q + 1/m) : 1)
    if (c.x4.is_zero() || c.x1 / c.x4 != Rational(-1) / p.m) throw not_on_curve_error();
    Rational target = p.q + Rational(1) / p.m;
    Rational x3 = c.x3 / c.x4;
    Rational half = (p.m * p.q + 1) / 2;
    if (x3 == target) return CQuarticPoint{Rational(1), half, Rational(0)};
    if (x3 == -target) return CQuarticPoint{Rational(1), -half, Rational(0)};
    throw not_on_curve_error();
}

inline CPoint psi_inv(const HeronParams& p, const CQuarticPoint& c) {
    detail::require_psi_domain(p);
    if (c.z.is_zero()) {
        if (c.x.is_zero()) throw not_on_curve_error();
        Rational s = c.y / (c.x * c.x);
        Rational half = (p.m * p.q + 1) / 2;
        Rational minv = Rational(1) / p.m;
        if (s == half) return CPoint{-minv, minv, p.q + minv, Rational(1)};
        if (s == -half) return CPoint{-minv, minv, -p.q - minv, Rational(1)};
        throw not_on_curve_error();
    }
    Rational x = c.x / c.z, y = c.y / (c.z * c.z);
    Rational x2 = x * x;
    return CPoint{(1 - x2) / 2, (x2 + 1) / 2, y, (p.m * (x2 - 1) + 2 * x) / 2};
}

inline Rational phi_inv_b(const HeronParams& p) {
    return p.m * p.m * p.q * p.q + 2 * p.m * p.q + p.q * p.q - 1;
}

inline Rational phi_inv_a(const HeronParams& p) {
    Rational m2 = p.m * p.m, q2 = p.q * p.q;
    return pow_int(q2, 3) * pow_int(m2 + 1, 3) + 6 * p.m * q2 * q2 * p.q * pow_int(m2 + 1, 2) +
           3 * q2 * q2 * (3 * m2 - 1) * (m2 + 1) - 4 * p.m * q2 * p.q * (m2 + 3) -
           3 * q2 * (3 * m2 + 8) + 6 * p.m * p.q - 1;
}

inline ECPoint phi(const HeronParams& p, const CQuarticPoint& c) {
    if (!params_elliptic(p)) throw singular_curve_error();
    Rational mq1 = p.m * p.q + 1;
    if (c.z.is_zero()) {
        if (c.x.is_zero()) throw not_on_curve_error();
        Rational s = c.y / (c.x * c.x);
        if (s == mq1 / 2) return ECPoint::infinite();
        if (s == -(mq1 / 2)) return ECPoint::affine(phi_inv_b(p) / 3, p.q);
        throw not_on_curve_error();
    }
    Rational x = c.x / c.z, y = c.y / (c.z * c.z);
    Rational m2q2 = p.m * p.m * p.q * p.q;
    // the x^2 coefficient is (mq+1)^2/2; validated against the inverse map
    Rational bigx = y * mq1 + mq1 * mq1 / 2 * x * x + p.q * mq1 * x +
                    (1 - 2 * p.m * p.q + 2 * p.q * p.q - m2q2) / 6;
    Rational bigy = mq1 / 2 *
                    (2 * p.q * y + 2 * mq1 * x * y + mq1 * mq1 * x * x * x +
                     3 * p.q * mq1 * x * x + x * (1 - m2q2 + 2 * p.q * p.q - 2 * p.m * p.q) -
                     p.q * mq1);
    return ECPoint::affine(bigx, bigy);
}

inline CQuarticPoint phi_inv(const HeronParams& p, const ECPoint& pt) {
    if (!params_elliptic(p)) throw singular_curve_error();
    Rational mq1 = p.m * p.q + 1;
    if (pt.infinity) return CQuarticPoint{Rational(1), mq1 / 2, Rational(0)};
    Rational b = phi_inv_b(p);
    Rational pole = b - 3 * pt.x;
    if (pole.is_zero()) {
        if (pt.y == p.q) return CQuarticPoint{Rational(1), -(mq1 / 2), Rational(0)};
        if (pt.y == -p.q) {
            // resolvable 0/0: the one affine preimage of (b/3, -q)
            Rational x0 = p.m * (p.m * p.q + 2) / (2 * mq1);
            Rational m2 = p.m * p.m;
            Rational y0 = -(m2 * m2 * p.q * p.q + 4 * m2 * p.m * p.q + 4 * m2 + 4) / (8 * mq1);
            return CQuarticPoint{x0, y0, Rational(1)};
        }
        throw exceptional_denominator_error();
    }
    Rational m2 = p.m * p.m;
    Rational x = -(3 * pt.y + (2 - 3 * pt.x) * p.q + 2 * p.m * p.q * p.q + (1 + m2) * pow_int(p.q, 3)) /
                 (mq1 * pole);
    Rational y = (54 * pow_int(pt.x, 3) - 27 * b * pt.x * pt.x - 27 * pt.y * pt.y -
                  54 * p.q * pt.y + phi_inv_a(p)) /
                 (6 * mq1 * pole * pole);
    return CQuarticPoint{x, y, Rational(1)};
}

inline ECPoint c_to_E(const HeronParams& p, const CPoint& c) { return phi(p, psi(p, c)); }

inline CPoint E_to_c(const HeronParams& p, const ECPoint& pt) { return psi_inv(p, phi_inv(p, pt)); }

// ---------------------------------------------------------------------------
// torsion structure of E_{m,q}

/// Abscissa of the guaranteed rational 2-torsion point of E_{m,q}.
inline Rational two_torsion_x(const Rational& m, const Rational& q) {
    Rational x1 = ((m * m + 1) * q * q + 2 * m * q + 2) / 3;
    if (!build_E(m, q).rhs(x1).is_zero())
        throw std::logic_error("two_torsion_x: closed-form root fails the cubic");
    return x1;
}

/// The C-point corresponding to the 2-torsion point, canonicalized.
inline CPoint two_torsion_cpoint(const HeronParams& p) {
    if (p.m.is_zero()) throw zero_slope_error();
    Rational minv = Rational(1) / p.m;
    return canonicalize_class(CPoint{-minv, -minv, -p.q - minv, Rational(1)});
}

/// (1+m^2)((1+m^2)q^2 + 4mq + 4): E_{m,q} has full rational 2-torsion iff
/// this is a rational square.
inline Rational full_two_torsion_square_value(const Rational& m, const Rational& q) {
    Rational m2p1 = m * m + 1;
    return m2p1 * (m2p1 * q * q + 4 * m * q + 4);
}

inline bool has_full_two_torsion(const Rational& m, const Rational& q) {
    return rational_sqrt(full_two_torsion_square_value(m, q)).has_value();
}

/// The conic parametrization q(n) forcing full rational 2-torsion.
inline Rational full_two_torsion_q(const Rational& m, const Rational& n) {
    if (m.is_zero()) throw denominator_zero_error("full_two_torsion_q: m = 0");
    Rational m2 = m * m;
    Rational den = m * (1 + m2 * (2 + m2) - n * n);
    if (den.is_zero()) throw denominator_zero_error("full_two_torsion_q: parametrization denominator");
    return (1 - m2 * (2 + 3 * m2) + 2 * (1 + m2) * n + n * n) / den;
}

struct Order4Point {
    Rational q;
    ECPoint point;
};

/// The order-4 family: q(t) and a point of exact order 4 on E_{m,q(t)}.
/// The order is certified through the group law itself rather than any
/// closed-form duplication shortcut.
inline Order4Point order4_point(const Rational& m, const Rational& t) {
    Rational den = 1 + m * m - 4 * t * t;
    if (den.is_zero()) throw denominator_zero_error("order4_point: 1 + m^2 - 4t^2 = 0");
    Rational q = 4 * (2 * t - m) / den;
    if (q.is_zero()) throw degenerate_params_error("order4_point: q = 0");
    if ((m * q + 1).is_zero()) throw singular_curve_error("order4_point: q = -1/m gives a singular curve");
    Rational m2 = m * m, t2 = t * t;
    Rational x = (pow_int(m, 4) - 24 * m2 * m * t + (104 * t2 + 6) * m2 - m * t * (160 * t2 + 24) +
                  80 * t2 * t2 + 24 * t2 + 5) /
                 (3 * den * den);
    Rational y = -2 * (3 * m2 - 8 * m * t + 4 * t2 - 1) * (m2 - 4 * m * t + 4 * t2 + 1) / (den * den);
    ECPoint pt = ECPoint::affine(x, y);
    WeierstrassCurve e = build_E(m, q);
    auto order = torsion_order(e, pt);
    ECPoint dbl = add(e, pt, pt);
    if (!order || *order != 4 || dbl.infinity || !dbl.y.is_zero())
        throw std::logic_error("order4_point: constructed point is not of order 4");
    return {q, pt};
}

// ---------------------------------------------------------------------------
// rank witnesses

/// P_{m,q}, the generic rank witness. Generically of infinite order, but
/// torsion at special parameters; consumers must check per instance.
inline ECPoint rank_witness_P(const Rational& m, const Rational& q) {
    WeierstrassCurve e = build_E(m, q);
    if (!e.elliptic()) throw singular_curve_error();
    Rational x = -((2 * m * m - 1) * q * q + 4 * m * q + 1) / 3;
    Rational y = q * (m * q + 1) * (m * q + 1);
    ECPoint pt = ECPoint::affine(x, y);
    if (!on_curve(e, pt)) throw std::logic_error("rank_witness_P: point off curve");
    return pt;
}

struct WitnessQ {
    Rational q;
    ECPoint point;
    CPoint cpoint;  // (0 : 1 : (1+h^2)/(2h) : 1)
};

/// Q_{m,q(h)} with q(h) = (1-h^2)/(2h); the second independent witness.
inline WitnessQ rank_witness_Q(const Rational& m, const Rational& h) {
    if (h.is_zero() || h == Rational(1) || h == Rational(-1))
        throw degenerate_params_error("rank_witness_Q: h in {0, +-1}");
    Rational q = (1 - h * h) / (2 * h);
    WeierstrassCurve e = build_E(m, q);
    if (!e.elliptic()) throw singular_curve_error();
    Rational h2 = h * h, m2 = m * m;
    Rational x = (h2 * h2 * (1 + m2) - 4 * h2 * h * m - 2 * h2 * (m2 + 3 * m - 3) + 4 * h * (m + 3) +
                  m2 + 6 * m + 1) /
                 (12 * h2);
    Rational y = (m * h2 - 2 * h - m) * (h + 1) * (h * m - m - h - 1) / (4 * h2 * h);
    ECPoint pt = ECPoint::affine(x, y);
    if (!on_curve(e, pt)) throw std::logic_error("rank_witness_Q: point off curve");
    CPoint cp{Rational(0), Rational(1), (1 + h2) / (2 * h), Rational(1)};
    if (!c_on_curve(HeronParams{m, q}, cp)) throw std::logic_error("rank_witness_Q: C-point off curve");
    return {q, pt, cp};
}

/// |1 - h^2| / |4h|: area of the right Heron triangle attached to Q_{m,q(h)},
/// hence a congruent number.
inline Rational congruent_number_A(const Rational& h) {
    if (h.is_zero() || h == Rational(1) || h == Rational(-1))
        throw degenerate_params_error("congruent_number_A: h in {0, +-1}");
    return abs((1 - h * h) / (4 * h));
}

struct WitnessH {
    Rational q;
    ECPoint point;
    Rational area;
    CPoint cpoint;
};

/// H_{m,q(u,m)} with q = 2(u-m)/(1+m^2-u^2); the third witness. The attached
/// triangle is right-angled with a congruent-number area.
inline WitnessH rank_witness_H(const Rational& m, const Rational& u) {
    Rational den = 1 + m * m - u * u;
    if (den.is_zero()) throw denominator_zero_error("rank_witness_H: 1 + m^2 - u^2 = 0");
    if (u == m) throw degenerate_params_error("rank_witness_H: u = m gives q = 0");
    Rational q = 2 * (u - m) / den;
    WeierstrassCurve e = build_E(m, q);
    if (!e.elliptic()) throw singular_curve_error();
    Rational m2 = m * m, u2 = u * u;
    Rational x = (5 * m2 * m2 + (6 - 10 * u) * m2 * m + (4 * u2 - 6 * u + 10) * m2 +
                  2 * (u2 * u - 3 * u2 - 5 * u + 3) * m - u2 * u2 + 6 * u2 * u - 6 * u + 5) /
                 (3 * den * den);
    Rational y = 2 * pow_int(m - u + 1, 2) * (m2 - u * m + 1) / (den * den);
    ECPoint pt = ECPoint::affine(x, y);
    if (!on_curve(e, pt)) throw std::logic_error("rank_witness_H: point off curve");
    Rational dd = m2 - u2 + 1;  // equals den
    CPoint cp{q, (m2 - 2 * m * u + u2 + 1) / dd, -(m - 1 - u) * (m + 1 - u) / dd, Rational(1)};
    HeronParams params{m, q};
    if (!c_on_curve(params, cp)) throw std::logic_error("rank_witness_H: C-point off curve");
    if (q * q + cp.x3 * cp.x3 != cp.x2 * cp.x2)
        throw std::logic_error("rank_witness_H: triangle is not right-angled");
    Rational area = abs((m - u) * (m - u - 1) * (m - u + 1) / (dd * dd));
    return {q, pt, area, cp};
}

inline Rational congruent_number_H(const Rational& m, const Rational& u) {
    return rank_witness_H(m, u).area;
}

// ---------------------------------------------------------------------------
// the triangle correspondence

/// Triangle O, (q, 0), (X, mX+1) attached to a C-point with x4 != 0; absent
/// when the vertex falls on the base line. Cross-checks the area formula
/// |q(mX+1)|/2 against the coordinate computation.
inline std::optional<TriangleRecord> triangle_from_cpoint(const HeronParams& p, const CPoint& c) {
    if (c.x4.is_zero()) throw infinite_point_error();
    if (!c_on_curve(p, c)) throw not_on_curve_error();
    Rational x = c.x1 / c.x4;
    Rational r = abs(c.x2 / c.x4), s = abs(c.x3 / c.x4);
    Point2 origin{Rational(0), Rational(0)};
    Point2 base{p.q, Rational(0)};
    Point2 vertex{x, p.m * x + 1};
    TriangleFailure why;
    auto tri = make_triangle(origin, base, vertex, &why);
    if (!tri) {
        if (why == TriangleFailure::Degenerate) return std::nullopt;
        throw std::logic_error("triangle_from_cpoint: sides not rational for an on-curve point");
    }
    if (tri->side12 != s || tri->side20 != r || tri->side01 != abs(p.q))
        throw std::logic_error("triangle_from_cpoint: stored sides disagree with the C-point");
    TriangleRecord rec = make_record(*tri);
    if (rec.area != abs(p.q * (p.m * x + 1)) / 2)
        throw std::logic_error("triangle_from_cpoint: area formula |q(mX+1)|/2 violated");
    return rec;
}

/// Reverse direction of the correspondence: a triangle with vertices
/// O, (q, 0), P on y = mx + 1 determines the class (X : R : S : 1).
inline CPoint cpoint_from_triangle(const HeronParams& p, const Triangle& tri) {
    const Point2 origin{Rational(0), Rational(0)};
    const Point2 base{p.q, Rational(0)};
    const Point2* verts[3] = {&tri.v0, &tri.v1, &tri.v2};
    int io = -1, ib = -1;
    for (int i = 0; i < 3; ++i) {
        if (*verts[i] == origin && io < 0) io = i;
        else if (*verts[i] == base && ib < 0) ib = i;
    }
    if (io < 0 || ib < 0) throw error("cpoint_from_triangle: triangle lacks vertices O and (q, 0)");
    int ip = 3 - io - ib;
    const Point2& vertex = *verts[ip];
    if (vertex.y != p.m * vertex.x + 1)
        throw error("cpoint_from_triangle: third vertex is not on y = mx + 1");
    auto r = rational_distance(origin, vertex);
    auto s = rational_distance(base, vertex);
    if (!r || !s) throw error("cpoint_from_triangle: distances are not rational");
    Rational x = (p.q * p.q + *r * *r - *s * *s) / (2 * p.q);
    if (x != vertex.x) throw std::logic_error("cpoint_from_triangle: abscissa identity violated");
    return CPoint{x, *r, *s, Rational(1)};
}

struct GenerationResult {
    std::vector<TriangleRecord> triangles;
    std::vector<CPoint> cpoints;    // canonical class of each triangle
    std::vector<long> multiples;    // which k*P produced it
    bool witness_exhausted = false; // witness was torsion and its orbit ran out
};

/// Walks k * P_{m,q} through the curve isomorphisms and collects the first
/// `count` distinct non-degenerate Heron triangles with base |q| and vertex
/// on y = mx + 1. A torsion witness yields a finite list and sets the
/// exhaustion flag.
inline GenerationResult generate_heron_triangles(const Rational& m, const Rational& q, long count) {
    if (count < 1) throw std::invalid_argument("generate_heron_triangles: count >= 1");
    HeronParams params{m, q};
    if (m.is_zero()) throw zero_slope_error();
    WeierstrassCurve e = build_E(m, q);
    if (!e.elliptic()) throw singular_curve_error();
    ECPoint witness = rank_witness_P(m, q);

    GenerationResult result;
    std::map<CPoint, bool> seen;
    ECPoint multiple = ECPoint::infinite();
    for (long k = 1; static_cast<long>(result.triangles.size()) < count; ++k) {
        if (k > 12 + 8 * count) throw std::logic_error("generate_heron_triangles: orbit walk overran");
        multiple = detail::add_unchecked(e, multiple, witness);
        if (multiple.infinity) {  // witness is torsion; orbit wrapped
            result.witness_exhausted = true;
            break;
        }
        CPoint raw = E_to_c(params, multiple);
        if (raw.x4.is_zero()) continue;  // class at infinity: no triangle
        CPoint canon = canonicalize_class(raw);
        if (seen.count(canon)) continue;
        seen.emplace(canon, true);
        auto rec = triangle_from_cpoint(params, canon);
        if (!rec) continue;  // degenerate class
        result.triangles.push_back(*rec);
        result.cpoints.push_back(canon);
        result.multiples.push_back(k);
    }
    return result;
}

}  // namespace heroncurves
