#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "heroncurves/genus3.hpp"
#include "heroncurves/geometry.hpp"
#include "heroncurves/heron_family.hpp"
#include "heroncurves/isosceles.hpp"
#include "heroncurves/rational.hpp"
#include "heroncurves/weierstrass.hpp"

namespace heroncurves {

using json = nlohmann::json;

inline constexpr const char* kSchemaName = "heron-curves/1";

// ---------------------------------------------------------------------------
// writers: every rational goes out as its exact "p/q" string

inline json to_json(const Rational& r) { return r.str(); }

inline json to_json(const Point2& p) { return json::array({p.x.str(), p.y.str()}); }

inline json to_json(const ECPoint& p) {
    if (p.infinity) return "infinity";
    return json{{"x", p.x.str()}, {"y", p.y.str()}};
}

inline json curve_json(const WeierstrassCurve& e) {
    return json{{"A", e.A().str()},
                {"B", e.B().str()},
                {"discriminant", e.discriminant().str()},
                {"elliptic", e.elliptic()}};
}

inline json to_json(const CPoint& c) {
    return json::array({c.x1.str(), c.x2.str(), c.x3.str(), c.x4.str()});
}

inline json to_json(const CQuarticPoint& c) {
    return json::array({c.x.str(), c.y.str(), c.z.str()});
}

inline json to_json(const CqPoint& c) {
    return json::array({c.x1.str(), c.x2.str(), c.x3.str(), c.x4.str(), c.x5.str()});
}

inline json triangle_record_json(const TriangleRecord& rec) {
    json tags = json::array();
    if (rec.isosceles) tags.push_back("isosceles");
    if (rec.right) tags.push_back("right");
    if (rec.heron) tags.push_back("heron");
    json out{{"type", "triangle"},
             {"vertices", json::array({to_json(rec.triangle.v0), to_json(rec.triangle.v1),
                                       to_json(rec.triangle.v2)})},
             {"sides", json::array({rec.triangle.side01.str(), rec.triangle.side12.str(),
                                    rec.triangle.side20.str()})},
             {"area", rec.area.str()},
             {"tags", tags}};
    if (rec.congruent_number) out["congruent_number"] = rec.congruent_number->str();
    return out;
}

inline json report_skeleton(const std::string& command) {
    return json{{"schema", kSchemaName}, {"command", command}, {"params", json::object()},
                {"records", json::array()}};
}

// ---------------------------------------------------------------------------
// readers

inline Rational rational_from_json(const json& j) {
    if (!j.is_string()) throw error("expected a rational encoded as a string");
    auto r = parse_rational(j.get<std::string>());
    if (!r) throw error("malformed rational: " + j.get<std::string>());
    return *r;
}

inline Point2 point2_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw error("expected a [x, y] coordinate pair");
    return Point2{rational_from_json(j[0]), rational_from_json(j[1])};
}

inline ECPoint ecpoint_from_json(const json& j) {
    if (j.is_string() && j.get<std::string>() == "infinity") return ECPoint::infinite();
    if (!j.is_object() || !j.contains("x") || !j.contains("y"))
        throw error("expected {x, y} or \"infinity\"");
    return ECPoint::affine(rational_from_json(j["x"]), rational_from_json(j["y"]));
}

inline CPoint cpoint_from_json(const json& j) {
    if (!j.is_array() || j.size() != 4) throw error("expected 4 projective coordinates");
    return CPoint{rational_from_json(j[0]), rational_from_json(j[1]), rational_from_json(j[2]),
                  rational_from_json(j[3])};
}

inline CqPoint cqpoint_from_json(const json& j) {
    if (!j.is_array() || j.size() != 5) throw error("expected 5 projective coordinates");
    return CqPoint{rational_from_json(j[0]), rational_from_json(j[1]), rational_from_json(j[2]),
                   rational_from_json(j[3]), rational_from_json(j[4])};
}

}  // namespace heroncurves
