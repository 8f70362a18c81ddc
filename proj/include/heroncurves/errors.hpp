#pragma once

#include <stdexcept>
#include <string>

namespace heroncurves {

/// Base class for all domain errors raised by the library. The CLI maps
/// these to exit code 1; anything else escaping is a bug.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct singular_curve_error : error {
    singular_curve_error() : error("singular curve") {}
    explicit singular_curve_error(const std::string& what) : error(what) {}
};

struct not_on_curve_error : error {
    not_on_curve_error() : error("point is not on the curve") {}
};

struct denominator_zero_error : error {
    explicit denominator_zero_error(const std::string& what = "parametrization denominator vanishes")
        : error(what) {}
};

struct degenerate_params_error : error {
    explicit degenerate_params_error(const std::string& what = "degenerate parameters")
        : error(what) {}
};

struct torsion_point_error : error {
    torsion_point_error() : error("torsion point: canonical height is exactly 0") {}
};

struct zero_slope_error : error {
    zero_slope_error() : error("operation requires m != 0") {}
};

struct exceptional_denominator_error : error {
    exceptional_denominator_error() : error("map denominator vanishes outside the exceptional set") {}
};

struct infinite_point_error : error {
    infinite_point_error() : error("projective point at infinity has no affine representative") {}
};

}  // namespace heroncurves
