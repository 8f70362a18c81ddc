#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include "heroncurves/errors.hpp"
#include "heroncurves/geometry.hpp"
#include "heroncurves/rational.hpp"

namespace heroncurves {

/// Fixed base of the isosceles family: P1 = (X1, Y1) distinct from the
/// origin and at a rational distance from it.
struct BaseConfig {
    Rational x1, y1;
    Rational base_length;

    static std::optional<BaseConfig> create(const Rational& x1, const Rational& y1) {
        if (x1.is_zero() && y1.is_zero()) return std::nullopt;
        auto base = rational_sqrt(x1 * x1 + y1 * y1);
        if (!base) return std::nullopt;
        return BaseConfig{x1, y1, *base};
    }
};

enum class Branch { plus, minus };

inline char branch_char(Branch b) { return b == Branch::plus ? '+' : '-'; }

/// One apex of the two-parameter family: the point P on the perpendicular
/// bisector of O-P1 with |OP| = |P P1| = leg, reached at parameter t.
struct IsoscelesSolution {
    Point2 apex;
    Rational leg;
    Rational t;
    Branch branch;
};

namespace detail {

// Solves for Y1 != 0. X = X1/2 +- (Y1/2)*delta with delta the conic
// parametrization; Y always comes from the bisector line equation, so the
// two sign choices cannot fall out of step.
inline std::optional<IsoscelesSolution> isosceles_oriented(const Rational& x1, const Rational& y1,
                                                           const Rational& t, Branch branch) {
    Rational s = x1 * x1 + y1 * y1;
    Rational d = t * t * s - 4;
    if (d.is_zero()) throw denominator_zero_error("isosceles: t^2(X1^2+Y1^2) = 4");

    Rational delta_num = t * t * x1 * s - 4 * t * s + 4 * x1;
    Rational delta = delta_num / (y1 * (-d));
    if (delta.is_zero()) return std::nullopt;  // apex would be the midpoint of O-P1

    Rational half = Rational(1, 2);
    Rational x = x1 * half + (branch == Branch::plus ? half * y1 * delta : -(half * y1 * delta));
    Rational y = (s - 2 * x1 * x) / (2 * y1);

    Rational tsm = t * s - 2 * x1;
    Rational leg = abs((tsm * tsm + 4 * y1 * y1) / (2 * y1 * d));
    if (leg * leg != x * x + y * y)
        throw std::logic_error("isosceles: closed-form leg disagrees with coordinates");
    return IsoscelesSolution{Point2{x, y}, leg, t, branch};
}

}  // namespace detail

/// The genus-0 parametrization: apex and common leg for parameter t.
/// Absent when the configuration degenerates (apex at the midpoint, which
/// happens exactly when the parametrized delta vanishes).
inline std::optional<IsoscelesSolution> isosceles_from_parameter(const BaseConfig& cfg,
                                                                 const Rational& t, Branch branch) {
    if (!cfg.y1.is_zero()) return detail::isosceles_oriented(cfg.x1, cfg.y1, t, branch);
    // Y1 = 0: reflect across y = x, solve, reflect back. Distances are preserved.
    auto sol = detail::isosceles_oriented(cfg.y1, cfg.x1, t, branch);
    if (!sol) return std::nullopt;
    sol->apex = Point2{sol->apex.y, sol->apex.x};
    return sol;
}

/// All solutions with parameter height <= height_bound, both branches,
/// deduplicated by apex and sorted by (leg height, apex x, apex y).
/// `jobs` partitions the parameter sweep; the result is order-independent.
inline std::vector<IsoscelesSolution> enumerate_isosceles(const BaseConfig& cfg, long height_bound,
                                                          int jobs = 1) {
    if (height_bound < 1) throw std::invalid_argument("enumerate_isosceles: height_bound >= 1");
    Rational s = cfg.x1 * cfg.x1 + cfg.y1 * cfg.y1;
    std::vector<Rational> ts = rationals_up_to_height(height_bound);

    auto sweep = [&](const std::vector<Rational>& chunk, std::vector<IsoscelesSolution>& found) {
        for (const Rational& t : chunk) {
            if ((t * t * s - 4).is_zero()) continue;
            for (Branch br : {Branch::plus, Branch::minus}) {
                auto sol = isosceles_from_parameter(cfg, t, br);
                if (sol) found.push_back(*sol);
            }
        }
    };

    std::vector<IsoscelesSolution> raw;
    if (jobs <= 1) {
        sweep(ts, raw);
    } else {
        int workers = std::min<int>(jobs, 64);
        std::vector<std::vector<Rational>> chunks(workers);
        for (std::size_t i = 0; i < ts.size(); ++i) chunks[i % workers].push_back(ts[i]);
        std::vector<std::vector<IsoscelesSolution>> results(workers);
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w] { sweep(chunks[w], results[w]); });
        for (auto& th : pool) th.join();
        for (auto& part : results) raw.insert(raw.end(), part.begin(), part.end());
    }

    std::map<Point2, IsoscelesSolution> by_apex;
    for (const auto& sol : raw) by_apex.emplace(sol.apex, sol);
    std::vector<IsoscelesSolution> out;
    out.reserve(by_apex.size());
    for (auto& [apex, sol] : by_apex) out.push_back(sol);
    std::sort(out.begin(), out.end(), [](const IsoscelesSolution& a, const IsoscelesSolution& b) {
        Integer ha = naive_height(a.leg), hb = naive_height(b.leg);
        if (ha != hb) return ha < hb;
        if (a.apex.x != b.apex.x) return a.apex.x < b.apex.x;
        return a.apex.y < b.apex.y;
    });
    return out;
}

/// Coefficient c = -16(X1^2 + Y1^2) of the singular cubic y^2 = c x (x+1)^2
/// that the intersection curve is birational to. Only the coefficient, the
/// node (-1, 0) and membership are exposed; the birational map itself lives
/// in an external reference.
inline Rational singular_cubic_coefficient(const BaseConfig& cfg) {
    return -16 * (cfg.x1 * cfg.x1 + cfg.y1 * cfg.y1);
}

inline bool on_singular_cubic(const BaseConfig& cfg, const Rational& x, const Rational& y) {
    Rational c = singular_cubic_coefficient(cfg);
    return y * y == c * x * (x + 1) * (x + 1);
}

inline Point2 singular_cubic_node() { return Point2{Rational(-1), Rational(0)}; }

}  // namespace heroncurves
