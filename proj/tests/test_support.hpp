#pragma once

#include <random>

#include "heroncurves/rational.hpp"

namespace testsupport {

using heroncurves::Rational;

inline std::mt19937& rng() {
    static std::mt19937 gen(0xC0FFEE);
    return gen;
}

inline long random_long(long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(rng());
}

inline Rational random_rational(long hi = 9, bool nonzero = false) {
    for (;;) {
        Rational r(random_long(-hi, hi), random_long(1, hi));
        if (!nonzero || !r.is_zero()) return r;
    }
}

}  // namespace testsupport
