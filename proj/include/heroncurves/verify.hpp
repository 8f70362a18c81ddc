#pragma once

// Independent re-checker for emitted reports. Everything here is re-derived
// from the raw data in the record using only exact rational arithmetic and
// plane geometry: curve coefficients are re-evaluated with their own Horner
// arrangements and the group-law steps are re-implemented locally, so a bug
// in the generators cannot silently verify itself.

#include <optional>
#include <string>
#include <vector>

#include "heroncurves/geometry.hpp"
#include "heroncurves/json_io.hpp"
#include "heroncurves/rational.hpp"

namespace heroncurves {

struct RecordCheck {
    std::size_t index = 0;
    std::string type;
    bool ok = true;
    std::vector<std::string> problems;
};

struct VerifyOutcome {
    std::vector<RecordCheck> records;
    std::size_t checked = 0;
    std::size_t failed = 0;

    json to_json() const {
        json recs = json::array();
        for (const auto& r : records) {
            json item{{"index", r.index}, {"type", r.type}, {"ok", r.ok}};
            if (!r.problems.empty()) item["problems"] = r.problems;
            recs.push_back(item);
        }
        return json{{"schema", kSchemaName}, {"command", "verify"}, {"checked", checked},
                    {"failed", failed},      {"records", recs}};
    }
};

namespace vdetail {

// local affine point and chord-tangent step, reimplemented for independence
struct VPoint {
    bool inf = true;
    Rational x, y;
};

inline std::optional<VPoint> vadd(const Rational& a, const VPoint& p, const VPoint& r) {
    if (p.inf) return r;
    if (r.inf) return p;
    Rational slope;
    if (p.x == r.x) {
        if ((p.y + r.y).is_zero()) return VPoint{};
        if (p.y.is_zero()) return std::nullopt;  // would need a vertical tangent
        slope = (3 * p.x * p.x + a) / (2 * p.y);
    } else {
        slope = (r.y - p.y) / (r.x - p.x);
    }
    Rational x3 = slope * slope - p.x - r.x;
    return VPoint{false, x3, slope * (p.x - x3) - p.y};
}

inline bool v_on_curve(const Rational& a, const Rational& b, const VPoint& p) {
    if (p.inf) return true;
    return p.y * p.y == (p.x * p.x + a) * p.x + b;
}

// E_{m,q} coefficients, Horner in q
inline Rational vA(const Rational& m, const Rational& q) {
    Rational m2 = m * m;
    Rational c4 = (m2 + 1) * (m2 + 1), c3 = 4 * m * (m2 + 1), c2 = 5 * m2 + 4, c1 = 2 * m;
    return -((((c4 * q + c3) * q + c2) * q + c1) * q + 1) / 3;
}

inline Rational vB(const Rational& m, const Rational& q) {
    Rational m2 = m * m;
    Rational d4 = 2 * (m2 + 1) * (m2 + 1), d3 = 8 * m * (m2 + 1), d2 = 7 * m2 + 8, d1 = -2 * m;
    Rational first = (((d4 * q + d3) * q + d2) * q + d1) * q - 1;
    Rational second = ((m2 + 1) * q + 2 * m) * q + 2;
    return first * second / 27;
}

inline Rational vI(const Rational& m, const Rational& b, const Rational& q) {
    Rational m2 = m * m;
    return 256 * ((((m2 + 1) * (m2 + 1) * q + 4 * m * b * (m2 + 1)) * q + (5 * m2 + 4) * b * b) * q * q +
                  (2 * b * b * b * m) * q + b * b * b * b);
}

inline Rational vJ(const Rational& m, const Rational& b, const Rational& q) {
    Rational m2 = m * m;
    Rational lead = ((m2 + 1) * q + 2 * b * m) * q + 2 * b * b;
    Rational tail = b * b * b * b + 2 * b * b * b * m * q - b * b * (7 * m2 + 8) * q * q -
                    8 * b * m * (m2 + 1) * q * q * q - 2 * (m2 + 1) * (m2 + 1) * q * q * q * q;
    return 4096 * lead * tail;
}

struct Ctx {
    RecordCheck* check;
    void fail(const std::string& what) {
        check->ok = false;
        check->problems.push_back(what);
    }
    void require(bool cond, const std::string& what) {
        if (!cond) fail(what);
    }
};

inline void check_triangle(Ctx& c, const json& rec) {
    const json& vj = rec.at("vertices");
    const json& sj = rec.at("sides");
    if (!vj.is_array() || vj.size() != 3 || !sj.is_array() || sj.size() != 3) {
        c.fail("triangle: need 3 vertices and 3 sides");
        return;
    }
    Point2 v0 = point2_from_json(vj[0]), v1 = point2_from_json(vj[1]), v2 = point2_from_json(vj[2]);
    Rational s01 = rational_from_json(sj[0]), s12 = rational_from_json(sj[1]),
             s20 = rational_from_json(sj[2]);
    Rational area = rational_from_json(rec.at("area"));

    auto d01 = rational_distance(v0, v1);
    auto d12 = rational_distance(v1, v2);
    auto d20 = rational_distance(v2, v0);
    c.require(d01.has_value() && d12.has_value() && d20.has_value(),
              "triangle: some pairwise distance is irrational");
    if (d01) c.require(*d01 == s01, "triangle: side01 does not match the vertex distance");
    if (d12) c.require(*d12 == s12, "triangle: side12 does not match the vertex distance");
    if (d20) c.require(*d20 == s20, "triangle: side20 does not match the vertex distance");

    Rational shoelace = twice_signed_area(v0, v1, v2);
    c.require(!shoelace.is_zero(), "triangle: vertices are collinear");
    c.require(area == abs(shoelace) / 2, "triangle: area does not match the coordinate formula");
    c.require(area > Rational(0), "triangle: area must be positive");

    for (const auto& tag : rec.value("tags", json::array())) {
        std::string name = tag.get<std::string>();
        Rational a2 = s01 * s01, b2 = s12 * s12, c2 = s20 * s20;
        if (name == "right")
            c.require(a2 + b2 == c2 || b2 + c2 == a2 || c2 + a2 == b2, "triangle: right tag is false");
        else if (name == "isosceles")
            c.require(s01 == s12 || s12 == s20 || s20 == s01, "triangle: isosceles tag is false");
        else if (name == "heron")
            ;  // rational area is already established exactly
        else
            c.fail("triangle: unknown tag " + name);
    }
    if (rec.contains("congruent_number")) {
        Rational cn = rational_from_json(rec.at("congruent_number"));
        c.require(cn == area, "triangle: congruent_number differs from the area");
        bool tagged_right = false;
        for (const auto& tag : rec.value("tags", json::array()))
            if (tag.get<std::string>() == "right") tagged_right = true;
        c.require(tagged_right, "triangle: congruent_number on a non-right triangle");
    }

    // family context, when present, ties the triangle to its curve data
    if (rec.contains("m") && rec.contains("q")) {
        Rational m = rational_from_json(rec.at("m")), q = rational_from_json(rec.at("q"));
        c.require(v0 == Point2{Rational(0), Rational(0)}, "triangle: first vertex must be O");
        c.require(v1 == Point2{q, Rational(0)}, "triangle: second vertex must be (q, 0)");
        c.require(v2.y == m * v2.x + 1, "triangle: vertex is off the line y = mx + 1");
        c.require(s01 == abs(q), "triangle: base is not |q|");
        c.require(area == abs(q * (m * v2.x + 1)) / 2, "triangle: area formula |q(mX+1)|/2 fails");
    } else if (rec.contains("q") && rec.value("parabola", false)) {
        Rational q = rational_from_json(rec.at("q"));
        c.require(v0 == Point2{Rational(0), Rational(0)}, "triangle: first vertex must be O");
        c.require(v1 == Point2{q, Rational(0)}, "triangle: second vertex must be (q, 0)");
        c.require(v2.x == v2.y * v2.y, "triangle: vertex is off the parabola x = y^2");
    }
}

inline void check_curve(Ctx& c, const json& rec) {
    Rational a = rational_from_json(rec.at("A")), b = rational_from_json(rec.at("B"));
    Rational disc = rational_from_json(rec.at("discriminant"));
    c.require(disc == -16 * (4 * a * a * a + 27 * b * b), "curve: discriminant formula fails");
    c.require(rec.at("elliptic").get<bool>() == !disc.is_zero(), "curve: elliptic flag is wrong");
    if (rec.contains("m") && rec.contains("q")) {
        Rational m = rational_from_json(rec.at("m")), q = rational_from_json(rec.at("q"));
        c.require(!q.is_zero(), "curve: q must be nonzero");
        c.require(a == vA(m, q), "curve: A does not match E_{m,q}");
        c.require(b == vB(m, q), "curve: B does not match E_{m,q}");
        if (rec.contains("I")) {
            Rational i = rational_from_json(rec.at("I")), j = rational_from_json(rec.at("J"));
            c.require(i == vI(m, Rational(1), q), "curve: I invariant mismatch");
            c.require(j == vJ(m, Rational(1), q), "curve: J invariant mismatch");
            c.require(768 * a == -i && 110592 * b == -j, "curve: (A, B) vs (I, J) relation fails");
        }
    }
}

inline VPoint vpoint_of(const json& j) {
    ECPoint p = ecpoint_from_json(j);
    return p.infinity ? VPoint{} : VPoint{false, p.x, p.y};
}

inline void check_ec_point(Ctx& c, const json& rec) {
    const json& cj = rec.at("curve");
    Rational a = rational_from_json(cj.at("A")), b = rational_from_json(cj.at("B"));
    VPoint p = vpoint_of(rec.at("point"));
    c.require(v_on_curve(a, b, p), "ec_point: point fails the curve equation");
    if (rec.contains("torsion_order")) {
        const json& t = rec.at("torsion_order");
        VPoint acc = p;
        bool hit_inf = p.inf;
        int hit_at = p.inf ? 1 : 0;
        for (int k = 2; k <= 12 && !hit_inf; ++k) {
            auto next = vadd(a, acc, p);
            if (!next) { c.fail("ec_point: torsion walk left the curve"); return; }
            acc = *next;
            if (acc.inf) { hit_inf = true; hit_at = k; }
        }
        if (t.is_string()) {
            c.require(t.get<std::string>() == "infinite", "ec_point: bad torsion_order value");
            c.require(!hit_inf, "ec_point: claimed infinite order but a multiple vanished");
        } else {
            c.require(hit_inf && hit_at == t.get<int>(), "ec_point: claimed torsion order is wrong");
        }
    }
}

inline void check_c_point(Ctx& c, const json& rec) {
    Rational m = rational_from_json(rec.at("m")), q = rational_from_json(rec.at("q"));
    CPoint p = cpoint_from_json(rec.at("coords"));
    Rational m2p1 = m * m + 1;
    Rational e1 = m2p1 * p.x1 * p.x1 + 2 * m * p.x1 * p.x4 + p.x4 * p.x4 - p.x2 * p.x2;
    Rational e2 = m2p1 * p.x1 * p.x1 + 2 * (m - q) * p.x1 * p.x4 + (1 + q * q) * p.x4 * p.x4 -
                  p.x3 * p.x3;
    c.require(e1.is_zero(), "c_point: first quadric fails");
    c.require(e2.is_zero(), "c_point: second quadric fails");
}

inline void check_cq_point(Ctx& c, const json& rec) {
    Rational q = rational_from_json(rec.at("q"));
    CqPoint p = cqpoint_from_json(rec.at("coords"));
    c.require((p.x1 * p.x1 + p.x2 * p.x2 - p.x3 * p.x3).is_zero(), "cq_point: first quadric fails");
    Rational d = p.x1 - q * p.x5;
    c.require((d * d + p.x2 * p.x2 - p.x4 * p.x4).is_zero(), "cq_point: second quadric fails");
    c.require((p.x2 * p.x2 - p.x1 * p.x5).is_zero(), "cq_point: parabola quadric fails");
}

inline void check_isosceles(Ctx& c, const json& rec) {
    Point2 p1 = point2_from_json(rec.at("p1"));
    Point2 apex = point2_from_json(rec.at("apex"));
    Rational leg = rational_from_json(rec.at("leg"));
    Point2 origin{Rational(0), Rational(0)};
    Rational s = p1.x * p1.x + p1.y * p1.y;
    c.require(rational_sqrt(s).has_value(), "isosceles: base length is irrational");
    c.require(squared_distance(origin, apex) == leg * leg, "isosceles: |O apex| != leg");
    c.require(squared_distance(apex, p1) == leg * leg, "isosceles: |apex P1| != leg");
    c.require(2 * apex.x * p1.x + 2 * apex.y * p1.y == s,
              "isosceles: apex is off the perpendicular bisector");
    c.require(4 * leg * leg > s, "isosceles: leg does not exceed half the base");
}

inline void check_two_torsion(Ctx& c, const json& rec) {
    Rational m = rational_from_json(rec.at("m")), q = rational_from_json(rec.at("q"));
    Rational a = vA(m, q), b = vB(m, q);
    Rational sv = rational_from_json(rec.at("square_value"));
    Rational m2p1 = m * m + 1;
    c.require(sv == m2p1 * ((m2p1 * q + 4 * m) * q + 4), "two_torsion: square value mismatch");
    bool full = rec.at("full").get<bool>();
    c.require(full == rational_sqrt(sv).has_value(), "two_torsion: full flag contradicts squareness");
    const json& roots = rec.at("roots");
    c.require(roots.size() == 1 || roots.size() == 3, "two_torsion: root count must be 1 or 3");
    c.require(full == (roots.size() == 3), "two_torsion: full flag contradicts root count");
    for (const auto& rj : roots) {
        Rational r = rational_from_json(rj);
        c.require(((r * r + a) * r + b).is_zero(), "two_torsion: listed root fails the cubic");
    }
}

inline void check_order4(Ctx& c, const json& rec) {
    Rational m = rational_from_json(rec.at("m")), t = rational_from_json(rec.at("t"));
    Rational q = rational_from_json(rec.at("q"));
    Rational den = 1 + m * m - 4 * t * t;
    c.require(!den.is_zero() && q == 4 * (2 * t - m) / den, "order4: q(t) mismatch");
    Rational a = vA(m, q), b = vB(m, q);
    VPoint p = vpoint_of(rec.at("point"));
    VPoint dbl = vpoint_of(rec.at("double_point"));
    c.require(!p.inf && !dbl.inf, "order4: points must be affine");
    c.require(v_on_curve(a, b, p), "order4: point fails the curve equation");
    c.require(v_on_curve(a, b, dbl), "order4: double fails the curve equation");
    if (p.inf || dbl.inf) return;
    c.require(dbl.y.is_zero(), "order4: 2P must be 2-torsion");
    auto d = vadd(a, p, p);
    c.require(d.has_value() && !d->inf && d->x == dbl.x && d->y == dbl.y,
              "order4: duplication does not reproduce the recorded 2P");
}

inline void check_independence(Ctx& c, const json& rec) {
    const json& cj = rec.at("curve");
    Rational a = rational_from_json(cj.at("A")), b = rational_from_json(cj.at("B"));
    VPoint p = vpoint_of(rec.at("P"));
    VPoint q = vpoint_of(rec.at("Q"));
    c.require(v_on_curve(a, b, p), "independence: P fails the curve equation");
    c.require(v_on_curve(a, b, q), "independence: Q fails the curve equation");
    if (rec.contains("sum")) {
        VPoint s = vpoint_of(rec.at("sum"));
        auto expect = vadd(a, p, q);
        bool same = expect && expect->inf == s.inf && (s.inf || (expect->x == s.x && expect->y == s.y));
        c.require(same, "independence: recorded P+Q is wrong");
        c.require(v_on_curve(a, b, s), "independence: P+Q fails the curve equation");
    }
    // the determinant itself is a labeled heuristic; no exact claim to re-check
}

}  // namespace vdetail

/// Re-checks every record of a previously emitted report. Unknown record
/// types fail; an empty report passes with zero records.
inline VerifyOutcome verify_report(const json& report) {
    VerifyOutcome out;
    if (!report.is_object()) {
        RecordCheck rc;
        rc.type = "report";
        rc.ok = false;
        rc.problems.push_back("report must be a JSON object");
        out.records.push_back(rc);
        out.checked = 1;
        out.failed = 1;
        return out;
    }
    if (!report.contains("records")) return out;  // empty report: nothing to check
    if (report.value("schema", std::string{}) != kSchemaName) {
        RecordCheck rc;
        rc.type = "report";
        rc.ok = false;
        rc.problems.push_back("unknown or missing schema");
        out.records.push_back(rc);
        out.checked = 1;
        out.failed = 1;
        return out;
    }
    std::size_t index = 0;
    for (const auto& rec : report.at("records")) {
        RecordCheck rc;
        rc.index = index++;
        rc.type = rec.is_object() ? rec.value("type", std::string("?")) : std::string("?");
        vdetail::Ctx ctx{&rc};
        try {
            if (rc.type == "triangle") vdetail::check_triangle(ctx, rec);
            else if (rc.type == "curve") vdetail::check_curve(ctx, rec);
            else if (rc.type == "ec_point") vdetail::check_ec_point(ctx, rec);
            else if (rc.type == "c_point") vdetail::check_c_point(ctx, rec);
            else if (rc.type == "cq_point") vdetail::check_cq_point(ctx, rec);
            else if (rc.type == "isosceles_solution") vdetail::check_isosceles(ctx, rec);
            else if (rc.type == "two_torsion") vdetail::check_two_torsion(ctx, rec);
            else if (rc.type == "order4") vdetail::check_order4(ctx, rec);
            else if (rc.type == "independence") vdetail::check_independence(ctx, rec);
            else ctx.fail("unknown record type");
        } catch (const std::exception& e) {
            ctx.fail(std::string("malformed record: ") + e.what());
        }
        out.records.push_back(rc);
        ++out.checked;
        if (!rc.ok) ++out.failed;
    }
    return out;
}

}  // namespace heroncurves
