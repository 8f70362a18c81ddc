#pragma once

#include <optional>
#include <stdexcept>

#include "heroncurves/errors.hpp"
#include "heroncurves/rational.hpp"

namespace heroncurves {

struct Point2 {
    Rational x, y;

    friend bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Point2& a, const Point2& b) { return !(a == b); }
    friend bool operator<(const Point2& a, const Point2& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
};

inline Rational squared_distance(const Point2& p, const Point2& r) {
    Rational dx = p.x - r.x, dy = p.y - r.y;
    return dx * dx + dy * dy;
}

/// Exact distance when the squared distance is a rational square; absent otherwise.
inline std::optional<Rational> rational_distance(const Point2& p, const Point2& r) {
    return rational_sqrt(squared_distance(p, r));
}

/// Twice the signed area of the triangle a,b,c (shoelace).
inline Rational twice_signed_area(const Point2& a, const Point2& b, const Point2& c) {
    return a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y);
}

enum class TriangleFailure { NotRational, Degenerate };

/// A triangle certified to have rational side lengths. The sides are stored
/// so the rationality certificate travels with the object; side_ij^2 equals
/// the exact squared distance between v_i and v_j.
class Triangle {
public:
    Point2 v0, v1, v2;
    Rational side01, side12, side20;

private:
    Triangle(Point2 a, Point2 b, Point2 c, Rational s01, Rational s12, Rational s20)
        : v0(std::move(a)), v1(std::move(b)), v2(std::move(c)),
          side01(std::move(s01)), side12(std::move(s12)), side20(std::move(s20)) {}

    friend std::optional<Triangle> make_triangle(const Point2&, const Point2&, const Point2&,
                                                 TriangleFailure*);
};

/// Certifies a vertex triple: all three pairwise distances must be rational
/// and the points non-collinear. Degenerate triples are rejected rather than
/// returned with area 0; `why` (optional) distinguishes the failure modes.
inline std::optional<Triangle> make_triangle(const Point2& a, const Point2& b, const Point2& c,
                                             TriangleFailure* why = nullptr) {
    auto d01 = rational_distance(a, b);
    auto d12 = rational_distance(b, c);
    auto d20 = rational_distance(c, a);
    if (!d01 || !d12 || !d20) {
        if (why) *why = TriangleFailure::NotRational;
        return std::nullopt;
    }
    if (twice_signed_area(a, b, c).is_zero()) {
        if (why) *why = TriangleFailure::Degenerate;
        return std::nullopt;
    }
    return Triangle(a, b, c, *d01, *d12, *d20);
}

/// Exact positive area via the shoelace formula, cross-checked against
/// Heron's formula: the radicand s(s-a)(s-b)(s-c) must equal area^2 exactly.
inline Rational heron_area(const Triangle& t) {
    Rational area = abs(twice_signed_area(t.v0, t.v1, t.v2)) / 2;
    Rational s = (t.side01 + t.side12 + t.side20) / 2;
    Rational radicand = s * (s - t.side01) * (s - t.side12) * (s - t.side20);
    if (radicand != area * area)
        throw std::logic_error("heron_area: shoelace and Heron disagree on a certified triangle");
    return area;
}

/// A fully verified output record: certified triangle, exact area, shape
/// tags, and the congruent-number witness when the triangle is right.
struct TriangleRecord {
    Triangle triangle;
    Rational area;
    bool isosceles = false;
    bool right = false;
    bool heron = false;
    std::optional<Rational> congruent_number;
};

inline TriangleRecord make_record(const Triangle& t) {
    TriangleRecord rec{t, heron_area(t), false, false, false, std::nullopt};
    const Rational &a = t.side01, &b = t.side12, &c = t.side20;
    rec.isosceles = (a == b) || (b == c) || (c == a);
    Rational a2 = a * a, b2 = b * b, c2 = c * c;
    rec.right = (a2 + b2 == c2) || (b2 + c2 == a2) || (c2 + a2 == b2);
    rec.heron = true;  // rational vertices force a rational area
    if (rec.right) rec.congruent_number = rec.area;
    return rec;
}

}  // namespace heroncurves
