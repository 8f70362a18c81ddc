// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion. Exits nonzero if any criterion fails.
// argv[1] must be the path to the heron-curves CLI binary (used by the
// generation/verification closed-loop criterion).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "heroncurves/genus3.hpp"
#include "heroncurves/geometry.hpp"
#include "heroncurves/heron_family.hpp"
#include "heroncurves/isosceles.hpp"
#include "heroncurves/json_io.hpp"
#include "heroncurves/rational.hpp"
#include "heroncurves/verify.hpp"
#include "heroncurves/weierstrass.hpp"

using namespace heroncurves;

namespace {

std::mt19937 rng(20260810);

long rand_long(long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(rng);
}

Rational rand_rational(long hi, bool nonzero) {
    for (;;) {
        Rational r(rand_long(-hi, hi), rand_long(1, hi));
        if (!nonzero || !r.is_zero()) return r;
    }
}

std::string cli_path;

struct CliRun {
    int exit_code = -1;
    std::string out;
};

CliRun run_cli(const std::string& args, const std::string& stdin_file = "") {
    std::string out_path = "acceptance_out.txt";
    std::string cmd = cli_path + " " + args;
    if (!stdin_file.empty()) cmd += " < " + stdin_file;
    cmd += " > " + out_path + " 2> acceptance_err.txt";
    int status = std::system(cmd.c_str());
    CliRun r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    r.out = buf.str();
    return r;
}

#define REQUIRE_TRUE(cond, what)                      \
    do {                                              \
        if (!(cond)) {                                \
            detail = what;                            \
            return false;                             \
        }                                             \
    } while (0)

bool criterion1(std::string& detail) {
    auto cfg = BaseConfig::create(Rational(3), Rational(4));
    REQUIRE_TRUE(cfg.has_value(), "config rejected");
    auto sol = isosceles_from_parameter(*cfg, Rational(1, 2), Branch::minus);
    REQUIRE_TRUE(sol.has_value(), "no solution at t = 1/2");
    REQUIRE_TRUE(sol->apex.x.str() == "-25/9", "apex x is " + sol->apex.x.str());
    REQUIRE_TRUE(sol->apex.y.str() == "125/24", "apex y is " + sol->apex.y.str());
    REQUIRE_TRUE(sol->leg.str() == "425/72", "leg is " + sol->leg.str());
    return true;
}

bool criterion2(std::string& detail) {
    const Point2 origin{Rational(0), Rational(0)};
    int checked = 0;
    while (checked < 500) {
        long a = rand_long(1, 9), b = rand_long(1, 9);
        if (a == b) continue;
        Rational s = rand_rational(6, true);
        auto cfg = BaseConfig::create(s * Rational(a * a - b * b), s * Rational(2 * a * b));
        if (!cfg) continue;
        Rational t = rand_rational(9, false);
        Rational norm = cfg->x1 * cfg->x1 + cfg->y1 * cfg->y1;
        if ((t * t * norm - 4).is_zero()) continue;
        Branch br = rand_long(0, 1) ? Branch::plus : Branch::minus;
        auto sol = isosceles_from_parameter(*cfg, t, br);
        if (!sol) continue;  // degenerate parameter: excluded by the preconditions
        Point2 p1{cfg->x1, cfg->y1};
        REQUIRE_TRUE(squared_distance(origin, sol->apex) == sol->leg * sol->leg,
                     "|O apex| != leg at trial " + std::to_string(checked));
        REQUIRE_TRUE(squared_distance(sol->apex, p1) == sol->leg * sol->leg,
                     "|apex P1| != leg at trial " + std::to_string(checked));
        REQUIRE_TRUE(2 * sol->apex.x * cfg->x1 + 2 * sol->apex.y * cfg->y1 == norm,
                     "apex off the perpendicular bisector at trial " + std::to_string(checked));
        ++checked;
    }
    detail = "500 instances, zero failures";
    return true;
}

bool criterion3(std::string& detail) {
    WeierstrassCurve e = build_E(Rational(1), Rational(1));
    REQUIRE_TRUE(e.A() == Rational(-8) && e.B() == Rational(8), "E_{1,1} != y^2 = x^3 - 8x + 8");
    ECPoint p = ECPoint::affine(Rational(-2), Rational(4));
    REQUIRE_TRUE(on_curve(e, p), "(-2, 4) not on the curve");
    ECPoint acc = ECPoint::infinite();
    for (int k = 1; k <= 12; ++k) {
        acc = add(e, acc, p);
        REQUIRE_TRUE(!acc.infinity, "kP = O at k = " + std::to_string(k));
    }
    REQUIRE_TRUE(!torsion_order(e, p).has_value(), "torsion_order returned a finite order");
    return true;
}

bool criterion4(std::string& detail) {
    auto w = rank_witness_Q(Rational(1), Rational(1, 2));
    REQUIRE_TRUE(w.q == Rational(3, 4), "q(1/2) != 3/4");
    WeierstrassCurve e = build_E(Rational(1), Rational(3, 4));
    ECPoint p = ECPoint::affine(Rational(-73, 48), Rational(147, 64));
    ECPoint q = ECPoint::affine(Rational(121, 24), Rational(21, 2));
    REQUIRE_TRUE(rank_witness_P(Rational(1), Rational(3, 4)) == p, "P_{1,3/4} mismatch");
    REQUIRE_TRUE(w.point == q, "Q_{1,3/4} mismatch");
    REQUIRE_TRUE(on_curve(e, p) && on_curve(e, q), "witnesses not on the curve");
    REQUIRE_TRUE(!torsion_order(e, p).has_value(), "P is torsion");
    REQUIRE_TRUE(!torsion_order(e, q).has_value(), "Q is torsion");
    REQUIRE_TRUE(independence_heuristic(e, p, q, 3, 0.01),
                 "independence heuristic rejected the pair");
    detail = "exact on-curve checks; heuristic gram det at depth 3";
    return true;
}

bool criterion5(std::string& detail) {
    auto w = rank_witness_H(Rational(1), Rational(3));
    REQUIRE_TRUE(w.q == Rational(-4, 7), "q(3, 1) != -4/7");
    REQUIRE_TRUE(w.point == ECPoint::affine(Rational(53, 147), Rational(-2, 49)), "H mismatch");
    REQUIRE_TRUE(on_curve(build_E(Rational(1), w.q), w.point), "H not on the curve");
    CPoint expect{Rational(-4, 7), Rational(-5, 7), Rational(3, 7), Rational(1)};
    REQUIRE_TRUE(w.cpoint == expect, "C-point mismatch");
    HeronParams params{Rational(1), w.q};
    REQUIRE_TRUE(c_on_curve(params, w.cpoint), "C-point fails the quadrics");
    auto rec = triangle_from_cpoint(params, canonicalize_class(w.cpoint));
    REQUIRE_TRUE(rec.has_value(), "triangle is degenerate");
    REQUIRE_TRUE(rec->right, "triangle is not right-angled");
    REQUIRE_TRUE(rec->area == Rational(6, 49), "area != 6/49");
    Rational x = w.cpoint.x1 / w.cpoint.x4;
    REQUIRE_TRUE(rec->area == abs(w.q * (Rational(1) * x + 1)) / 2, "area formula fails");
    return true;
}

bool criterion6(std::string& detail) {
    Order4Point inst = order4_point(Rational(1), Rational(1));
    REQUIRE_TRUE(inst.q == Rational(-2), "q(1) != -2");
    REQUIRE_TRUE(inst.point == ECPoint::affine(Rational(1), Rational(2)), "P != (1, 2)");
    WeierstrassCurve e = build_E(Rational(1), Rational(-2));
    REQUIRE_TRUE(add(e, inst.point, inst.point) == ECPoint::affine(Rational(2), Rational(0)),
                 "2P != (2, 0)");
    REQUIRE_TRUE(scalar_mul(e, 4, inst.point) == ECPoint::infinite(), "4P != infinity");

    int done = 0;
    while (done < 50) {
        Rational m = rand_rational(7, false);
        Rational t = rand_rational(7, false);
        Order4Point p4;
        try {
            p4 = order4_point(m, t);
        } catch (const error&) {
            continue;
        }
        auto ord = torsion_order(build_E(m, p4.q), p4.point);
        REQUIRE_TRUE(ord.has_value() && *ord == 4,
                     "wrong order at (m, t) = (" + m.str() + ", " + t.str() + ")");
        ++done;
    }
    detail = "50 random instances of exact order 4";
    return true;
}

bool criterion7(std::string& detail) {
    REQUIRE_TRUE(full_two_torsion_q(Rational(1), Rational(1)) == Rational(1, 3), "q(1) != 1/3");
    REQUIRE_TRUE(full_two_torsion_square_value(Rational(1), Rational(1, 3)) == Rational(100, 9),
                 "square value != 100/9");

    int done = 0;
    while (done < 50) {
        Rational m = rand_rational(7, true);
        Rational n = rand_rational(7, false);
        Rational q;
        try {
            q = full_two_torsion_q(m, n);
        } catch (const error&) {
            continue;
        }
        if (q.is_zero() || (m * q + 1).is_zero()) continue;
        WeierstrassCurve e = build_E(m, q);
        if (!e.elliptic()) continue;
        REQUIRE_TRUE(two_torsion(e).size() == 3,
                     "not full 2-torsion at (m, n) = (" + m.str() + ", " + n.str() + ")");
        ++done;
    }
    detail = "50 random instances with three rational 2-torsion points";
    return true;
}

bool criterion8(std::string& detail) {
    const std::pair<Rational, Rational> fixtures[] = {
        {Rational(1), Rational(1)}, {Rational(1), Rational(3, 4)}, {Rational(1), Rational(-4, 7)}};
    for (const auto& [m, q] : fixtures) {
        HeronParams params{m, q};
        WeierstrassCurve e = build_E(m, q);
        ECPoint witness = rank_witness_P(m, q);
        ECPoint pk = ECPoint::infinite();
        for (int k = 1; k <= 5; ++k) {
            pk = add(e, pk, witness);
            REQUIRE_TRUE(!pk.infinity, "witness orbit collapsed early");
            CQuarticPoint quartic = phi_inv(params, pk);
            REQUIRE_TRUE(cprime_on_curve(params, quartic),
                         "quartic point off-curve at k=" + std::to_string(k) + ", q=" + q.str());
            CPoint c = E_to_c(params, pk);
            REQUIRE_TRUE(c_on_curve(params, c),
                         "C-point off-curve at k=" + std::to_string(k) + ", q=" + q.str());
            REQUIRE_TRUE(c_to_E(params, c) == pk,
                         "round trip not identity at k=" + std::to_string(k) + ", q=" + q.str());
        }
    }
    detail = "15 round trips, all exact identities with exact memberships";
    return true;
}

bool criterion9(std::string& detail) {
    auto t0 = std::chrono::steady_clock::now();
    CliRun gen = run_cli("heron gen --m 1 --q 1 --count 5");
    REQUIRE_TRUE(gen.exit_code == 0, "gen exited " + std::to_string(gen.exit_code));
    {
        std::ofstream f("acceptance_gen.json");
        f << gen.out;
    }
    CliRun ver = run_cli("verify acceptance_gen.json");
    auto seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    REQUIRE_TRUE(ver.exit_code == 0, "verify exited " + std::to_string(ver.exit_code));

    json doc = json::parse(gen.out);
    std::set<std::string> seen;
    int triangles = 0;
    for (const auto& rec : doc["records"]) {
        if (rec["type"] != "triangle") continue;
        ++triangles;
        REQUIRE_TRUE(rec["sides"][0] == "1", "base != 1");
        Point2 vertex = point2_from_json(rec["vertices"][2]);
        REQUIRE_TRUE(vertex.y == vertex.x + 1, "vertex off y = x + 1");
        seen.insert(rec["vertices"][2].dump());
    }
    REQUIRE_TRUE(triangles == 5, "expected 5 triangles, got " + std::to_string(triangles));
    REQUIRE_TRUE(static_cast<int>(seen.size()) == 5, "triangles are not distinct");
    REQUIRE_TRUE(seconds < 10.0, "took " + std::to_string(seconds) + " s");
    std::remove("acceptance_gen.json");
    detail = "5 distinct verified triangles in " + std::to_string(seconds) + " s";
    return true;
}

bool criterion10(std::string& detail) {
    auto iso = isosceles_point(Rational(2));
    REQUIRE_TRUE(iso.q == Rational(25, 32), "isosceles q != 25/32");
    CqPoint iso_expect{Rational(9, 16), Rational(3, 4), Rational(15, 16), Rational(25, 32),
                       Rational(1)};
    REQUIRE_TRUE(iso.point == iso_expect, "isosceles point mismatch");
    REQUIRE_TRUE(cq_on_curve({iso.q}, iso.point), "isosceles point fails a quadric");

    auto right = right_point(Rational(2));
    REQUIRE_TRUE(right.q == Rational(9, 16), "right q != 9/16");
    CqPoint right_expect{Rational(9, 16), Rational(3, 4), Rational(15, 16), Rational(3, 4),
                         Rational(1)};
    REQUIRE_TRUE(right.point == right_expect, "right point mismatch");
    REQUIRE_TRUE(cq_on_curve({right.q}, right.point), "right point fails a quadric");
    REQUIRE_TRUE(right.q * right.q + right.point.x4 * right.point.x4 ==
                     right.point.x3 * right.point.x3,
                 "q^2 + S^2 != R^2");
    return true;
}

bool criterion11(std::string& detail) {
    auto hits = search_points({Rational(25, 32)}, 16);
    CqPoint want{Rational(9, 16), Rational(3, 4), Rational(15, 16), Rational(25, 32), Rational(1)};
    REQUIRE_TRUE(hits.size() == 1 && hits[0] == want,
                 "search(25/32, 16) must find exactly the known special point");

    auto hits2 = search_points({Rational(9, 16)}, 4);
    CqPoint want2{Rational(9, 16), Rational(3, 4), Rational(15, 16), Rational(3, 4), Rational(1)};
    bool found = false;
    for (const auto& h : hits2) found = found || h == want2;
    REQUIRE_TRUE(found, "search(9/16, 4) missed the right point");

    auto t0 = std::chrono::steady_clock::now();
    auto big = search_points({Rational(25, 32)}, 64);
    auto seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    REQUIRE_TRUE(!big.empty() && big[0] == want, "height-64 search lost the special point");
    REQUIRE_TRUE(seconds < 60.0, "height-64 search took " + std::to_string(seconds) + " s");
    detail = "height-64 search in " + std::to_string(seconds) + " s";
    return true;
}

bool criterion12(std::string& detail) {
    int points_checked = 0, triples_checked = 0;
    while (points_checked < 100) {
        Rational m = rand_rational(5, false);
        Rational q = rand_rational(5, true);
        if ((m * q + 1).is_zero()) continue;
        WeierstrassCurve e = build_E(m, q);
        if (!e.elliptic()) continue;
        ECPoint p = scalar_mul(e, rand_long(1, 4), rank_witness_P(m, q));
        if (p.infinity) continue;
        ECPoint acc = ECPoint::infinite();
        for (long k = 1; k <= 16; ++k) {
            acc = add(e, acc, p);
            REQUIRE_TRUE(scalar_mul(e, k, p) == acc,
                         "double-and-add != iterated addition at k = " + std::to_string(k));
        }
        ++points_checked;
    }
    while (triples_checked < 100) {
        Rational m = rand_rational(5, false);
        Rational q = rand_rational(5, true);
        if ((m * q + 1).is_zero()) continue;
        WeierstrassCurve e = build_E(m, q);
        if (!e.elliptic()) continue;
        ECPoint base = rank_witness_P(m, q);
        ECPoint p = scalar_mul(e, rand_long(1, 6), base);
        ECPoint q2 = negate(scalar_mul(e, rand_long(1, 6), base));
        ECPoint r = scalar_mul(e, rand_long(1, 6), base);
        REQUIRE_TRUE(add(e, add(e, p, q2), r) == add(e, p, add(e, q2, r)),
                     "associativity failed");
        REQUIRE_TRUE(add(e, p, q2) == add(e, q2, p), "commutativity failed");
        ++triples_checked;
    }
    detail = "100 oracle points and 100 associativity triples, zero failures";
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-heron-curves-cli>\n";
        return 2;
    }
    cli_path = argv[1];

    struct Criterion {
        int number;
        std::string title;
        std::function<bool(std::string&)> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "worked example reproduction (exact)", criterion1},
        {2, "isosceles property suite, 500 random instances", criterion2},
        {3, "curve construction and certified infinite order", criterion3},
        {4, "rank-2 witnesses on E_{1,3/4} with independence heuristic", criterion4},
        {5, "third witness: q = -4/7, C-point and right triangle", criterion5},
        {6, "order-4 family, 50 random instances", criterion6},
        {7, "full 2-torsion parametrization, 50 random instances", criterion7},
        {8, "curve isomorphism round trips", criterion8},
        {9, "heron gen + verify closed loop under 10 s", criterion9},
        {10, "genus-3 special points at u = 2", criterion10},
        {11, "genus-3 search oracle with height-64 timing", criterion11},
        {12, "group-law oracle: scalar multiples and associativity", criterion12},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (ok) {
            std::cout << "PASS criterion " << c.number << ": " << c.title;
            if (!detail.empty()) std::cout << " (" << detail << ")";
            std::cout << "\n";
        } else {
            ++failures;
            std::cout << "FAIL criterion " << c.number << ": " << c.title << " -- " << detail << "\n";
        }
    }
    std::remove("acceptance_out.txt");
    std::remove("acceptance_err.txt");
    if (failures) std::cout << failures << " criterion(s) failed\n";
    else std::cout << "all 12 criteria passed\n";
    return failures == 0 ? 0 : 1;
}
