#pragma once

#include <algorithm>
#include <optional>
#include <thread>
#include <tuple>
#include <vector>

#include "heroncurves/errors.hpp"
#include "heroncurves/geometry.hpp"
#include "heroncurves/rational.hpp"

namespace heroncurves {

/// Base endpoint of the genus-3 family: Q = (q, 0), apex on the parabola x = y^2.
struct GenusThreeParams {
    Rational q;
};

/// Projective point on the curve C_q in P^4, the intersection of three quadrics.
struct CqPoint {
    Rational x1, x2, x3, x4, x5;

    friend bool operator==(const CqPoint& a, const CqPoint& b) {
        return a.x1 == b.x1 && a.x2 == b.x2 && a.x3 == b.x3 && a.x4 == b.x4 && a.x5 == b.x5;
    }
    friend bool operator!=(const CqPoint& a, const CqPoint& b) { return !(a == b); }
    friend bool operator<(const CqPoint& a, const CqPoint& b) {
        return std::tie(a.x1, a.x2, a.x3, a.x4, a.x5) < std::tie(b.x1, b.x2, b.x3, b.x4, b.x5);
    }
};

/// Exact membership in all three quadrics (raw homogeneous coordinates).
inline bool cq_on_curve(const GenusThreeParams& p, const CqPoint& c) {
    if (c.x1.is_zero() && c.x2.is_zero() && c.x3.is_zero() && c.x4.is_zero() && c.x5.is_zero())
        return false;
    Rational e1 = c.x1 * c.x1 + c.x2 * c.x2 - c.x3 * c.x3;
    Rational d = c.x1 - p.q * c.x5;
    Rational e2 = d * d + c.x2 * c.x2 - c.x4 * c.x4;
    Rational e3 = c.x2 * c.x2 - c.x1 * c.x5;
    return e1.is_zero() && e2.is_zero() && e3.is_zero();
}

namespace detail {

inline void require_genus3_params(const GenusThreeParams& p) {
    if (p.q.is_zero()) throw degenerate_params_error("genus3: q must be nonzero");
}

}  // namespace detail

/// The two ordinary double points (0 : 0 : 0 : +-q : 1). They lie on the
/// curve but correspond to degenerate triangles (apex at the origin).
inline std::vector<CqPoint> singular_points(const GenusThreeParams& p) {
    detail::require_genus3_params(p);
    return {CqPoint{Rational(0), Rational(0), Rational(0), p.q, Rational(1)},
            CqPoint{Rational(0), Rational(0), Rational(0), -p.q, Rational(1)}};
}

struct GenusThreeSpecial {
    Rational q;
    CqPoint point;
};

namespace detail {

inline void require_genus3_u(const Rational& u) {
    if (u.is_zero() || u == Rational(1) || u == Rational(-1))
        throw degenerate_params_error("genus3: u must avoid {0, +-1}");
}

}  // namespace detail

/// Explicit isosceles family: q = (u^2+1)^2 / (8u^2) and an explicit
/// point with S = q.
inline GenusThreeSpecial isosceles_point(const Rational& u) {
    detail::require_genus3_u(u);
    Rational u2 = u * u;
    Rational q = pow_int(u2 + 1, 2) / (8 * u2);
    CqPoint pt{pow_int(u2 - 1, 2) / (4 * u2), (u2 - 1) / (2 * u), (u2 * u2 - 1) / (4 * u2), q,
               Rational(1)};
    GenusThreeParams params{q};
    if (!cq_on_curve(params, pt)) throw std::logic_error("isosceles_point: point off curve");
    if (pt.x4 != q * pt.x5) throw std::logic_error("isosceles_point: S = q certificate failed");
    return {q, pt};
}

/// Explicit right-triangle family: q = (u^2-1)^2 / (4u^2) with
/// q^2 + S^2 = R^2.
inline GenusThreeSpecial right_point(const Rational& u) {
    detail::require_genus3_u(u);
    Rational u2 = u * u;
    Rational q = pow_int(u2 - 1, 2) / (4 * u2);
    CqPoint pt{q, (u2 - 1) / (2 * u), (u2 * u2 - 1) / (4 * u2), (u2 - 1) / (2 * u), Rational(1)};
    GenusThreeParams params{q};
    if (!cq_on_curve(params, pt)) throw std::logic_error("right_point: point off curve");
    if (q * q + pt.x4 * pt.x4 != pt.x3 * pt.x3)
        throw std::logic_error("right_point: right-angle identity failed");
    return {q, pt};
}

/// (u^2-1)^3 / (16u^3), the congruent number attached to the right family:
/// it equals qS/2, the area of the right triangle with legs q and S, and
/// the identity is asserted here.
inline Rational congruent_number_genus3(const Rational& u) {
    detail::require_genus3_u(u);
    Rational u2 = u * u;
    Rational value = pow_int(u2 - 1, 3) / (16 * u2 * u);
    GenusThreeSpecial rp = right_point(u);
    if (value != rp.q * rp.point.x4 / 2)
        throw std::logic_error("congruent_number_genus3: qS/2 identity failed");
    return value;
}

/// Triangle O, (q, 0), (x1/x5, x2/x5). The parabola membership is the third
/// quadric, so it holds by construction; degenerate points are rejected.
inline std::optional<TriangleRecord> triangle_from_cqpoint(const GenusThreeParams& p, const CqPoint& c) {
    detail::require_genus3_params(p);
    if (c.x5.is_zero()) throw infinite_point_error();
    if (!cq_on_curve(p, c)) throw not_on_curve_error();
    Rational x = c.x1 / c.x5, y = c.x2 / c.x5;
    if (x != y * y) throw std::logic_error("triangle_from_cqpoint: apex not on the parabola");
    TriangleFailure why;
    auto tri = make_triangle(Point2{Rational(0), Rational(0)}, Point2{p.q, Rational(0)}, Point2{x, y},
                             &why);
    if (!tri) {
        if (why == TriangleFailure::Degenerate) return std::nullopt;
        throw std::logic_error("triangle_from_cqpoint: sides not rational for an on-curve point");
    }
    return make_record(*tri);
}

/// Canonical representative used by the search: x5 = 1 and x2, x3, x4 >= 0
/// (the x2 -> -x2 mirror symmetry is folded away).
inline CqPoint canonicalize_cqpoint(const CqPoint& c) {
    if (c.x5.is_zero()) throw infinite_point_error();
    return CqPoint{c.x1 / c.x5, abs(c.x2 / c.x5), abs(c.x3 / c.x5), abs(c.x4 / c.x5), Rational(1)};
}

/// Exhaustive bounded-height search for rational points of C_q: apex
/// candidates (Y^2, Y) run over all positive rationals of height <= bound
/// (the mirror apex -Y gives the same canonical point), keeping those whose
/// two distances are rational squares. Deterministic output sorted by
/// coordinate height; `jobs` only partitions the work.
inline std::vector<CqPoint> search_points(const GenusThreeParams& p, long height_bound, int jobs = 1) {
    detail::require_genus3_params(p);
    if (height_bound < 1) throw std::invalid_argument("search_points: height_bound >= 1");
    std::vector<Rational> ys = positive_rationals_up_to_height(height_bound);

    auto scan = [&p](const std::vector<Rational>& chunk, std::vector<CqPoint>& out) {
        for (const Rational& y : chunk) {
            Rational x = y * y;
            auto r = rational_sqrt(x * x + y * y);
            if (!r) continue;
            Rational dx = x - p.q;
            auto s = rational_sqrt(dx * dx + y * y);
            if (!s) continue;
            out.push_back(CqPoint{x, y, *r, *s, Rational(1)});
        }
    };

    std::vector<CqPoint> hits;
    if (jobs <= 1) {
        scan(ys, hits);
    } else {
        int workers = std::min<int>(jobs, 64);
        std::vector<std::vector<Rational>> chunks(workers);
        for (std::size_t i = 0; i < ys.size(); ++i) chunks[i % workers].push_back(ys[i]);
        std::vector<std::vector<CqPoint>> results(workers);
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w] { scan(chunks[w], results[w]); });
        for (auto& th : pool) th.join();
        for (auto& part : results) hits.insert(hits.end(), part.begin(), part.end());
    }

    auto height_of = [](const CqPoint& c) {
        Integer h = naive_height(c.x1);
        for (const Rational* r : {&c.x2, &c.x3, &c.x4, &c.x5}) {
            Integer hr = naive_height(*r);
            if (hr > h) h = hr;
        }
        return h;
    };
    std::sort(hits.begin(), hits.end(), [&](const CqPoint& a, const CqPoint& b) {
        Integer ha = height_of(a), hb = height_of(b);
        if (ha != hb) return ha < hb;
        return a < b;
    });
    return hits;
}

}  // namespace heroncurves
