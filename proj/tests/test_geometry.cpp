#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "heroncurves/geometry.hpp"
#include "test_support.hpp"

using namespace heroncurves;
using testsupport::random_rational;

namespace {
Point2 pt(long xn, long xd, long yn, long yd) {
    return Point2{Rational(xn, xd), Rational(yn, yd)};
}
}  // namespace

TEST_CASE("rational_distance") {
    CHECK(rational_distance(pt(0, 1, 0, 1), pt(3, 1, 4, 1)) == Rational(5));
    // the worked isosceles example: apex at distance 425/72 from the origin
    CHECK(rational_distance(pt(0, 1, 0, 1), pt(-25, 9, 125, 24)) == Rational(425, 72));
    CHECK_FALSE(rational_distance(pt(0, 1, 0, 1), pt(1, 1, 1, 1)).has_value());
}

TEST_CASE("make_triangle certifies sides and rejects bad triples") {
    TriangleFailure why;

    auto tri = make_triangle(pt(0, 1, 0, 1), pt(3, 4, 0, 1), pt(0, 1, 1, 1));
    REQUIRE(tri.has_value());
    CHECK(tri->side01 == Rational(3, 4));
    CHECK(tri->side12 == Rational(5, 4));
    CHECK(tri->side20 == Rational(1));

    CHECK_FALSE(make_triangle(pt(0, 1, 0, 1), pt(1, 1, 0, 1), pt(2, 1, 0, 1), &why).has_value());
    CHECK(why == TriangleFailure::Degenerate);

    CHECK_FALSE(make_triangle(pt(0, 1, 0, 1), pt(1, 1, 0, 1), pt(1, 1, 1, 1), &why).has_value());
    CHECK(why == TriangleFailure::NotRational);
}

TEST_CASE("make_triangle is permutation-symmetric up to relabeling") {
    Point2 a = pt(0, 1, 0, 1), b = pt(3, 4, 0, 1), c = pt(0, 1, 1, 1);
    Point2 perm[6][3] = {{a, b, c}, {a, c, b}, {b, a, c}, {b, c, a}, {c, a, b}, {c, b, a}};
    std::vector<Rational> base;
    for (auto& p : perm) {
        auto tri = make_triangle(p[0], p[1], p[2]);
        REQUIRE(tri.has_value());
        std::vector<Rational> sides{tri->side01, tri->side12, tri->side20};
        std::sort(sides.begin(), sides.end());
        if (base.empty()) base = sides;
        CHECK(sides == base);
    }
}

TEST_CASE("heron_area agrees with the coordinate formula and Heron radicand") {
    auto tri = make_triangle(pt(0, 1, 0, 1), pt(3, 4, 0, 1), pt(0, 1, 1, 1));
    REQUIRE(tri);
    CHECK(heron_area(*tri) == Rational(3, 8));

    // base 4/7 right triangle from the third rank witness (m=1, u=3, q=-4/7)
    auto tri2 = make_triangle(pt(0, 1, 0, 1), pt(-4, 7, 0, 1), pt(-4, 7, 3, 7));
    REQUIRE(tri2);
    CHECK(heron_area(*tri2) == Rational(6, 49));

    // (0,0),(2,0),(1,1) has coordinate area 1 but irrational sides, so it
    // cannot be certified; only the shoelace value is checkable
    CHECK(abs(twice_signed_area(pt(0, 1, 0, 1), pt(2, 1, 0, 1), pt(1, 1, 1, 1))) / 2 == Rational(1));
    TriangleFailure why;
    CHECK_FALSE(make_triangle(pt(0, 1, 0, 1), pt(2, 1, 0, 1), pt(1, 1, 1, 1), &why).has_value());
    CHECK(why == TriangleFailure::NotRational);
}

TEST_CASE("records classify tags and attach congruent numbers to right triangles") {
    auto tri = make_triangle(pt(0, 1, 0, 1), pt(3, 4, 0, 1), pt(0, 1, 1, 1));
    REQUIRE(tri);
    TriangleRecord rec = make_record(*tri);
    CHECK(rec.right);
    CHECK(rec.heron);
    CHECK_FALSE(rec.isosceles);
    REQUIRE(rec.congruent_number.has_value());
    CHECK(*rec.congruent_number == Rational(3, 8));

    auto iso = make_triangle(pt(0, 1, 0, 1), pt(6, 1, 0, 1), pt(3, 1, 4, 1));
    REQUIRE(iso);
    TriangleRecord irec = make_record(*iso);
    CHECK(irec.isosceles);
    CHECK_FALSE(irec.right);
    CHECK_FALSE(irec.congruent_number.has_value());
    CHECK(irec.area == Rational(12));
}

TEST_CASE("certified triangles always satisfy the exact side and area invariants") {
    // random triples almost never certify, so build from Pythagorean data:
    // a translated right triangle with legs (3k, 4k) has all sides rational
    int built = 0;
    for (int i = 0; i < 80; ++i) {
        Rational k = random_rational(6, true);
        Point2 a{random_rational(6), random_rational(6)};
        Point2 b{a.x + 3 * k, a.y};
        Point2 c{a.x, a.y + 4 * k};
        auto tri = make_triangle(a, b, c);
        REQUIRE(tri.has_value());
        ++built;
        CHECK(tri->side01 * tri->side01 == squared_distance(tri->v0, tri->v1));
        CHECK(tri->side12 * tri->side12 == squared_distance(tri->v1, tri->v2));
        CHECK(tri->side20 * tri->side20 == squared_distance(tri->v2, tri->v0));
        CHECK(heron_area(*tri) > Rational(0));
        CHECK(heron_area(*tri) == abs(6 * k * k));
    }
    CHECK(built == 80);
}
