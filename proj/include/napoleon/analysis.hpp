#pragma once

#include <array>

#include "napoleon/constructions.hpp"
#include "napoleon/geom.hpp"
#include "napoleon/regularity.hpp"

namespace napoleon {

struct RatioMeasurement {
  double base_side = 0.0;
  double discovered_side = 0.0;
  double ratio = 0.0;  // discovered_side / base_side
  double predicted_ratio = 0.0;
  double abs_error = 0.0;  // |ratio - predicted_ratio|
};

/// Side of the Napoleon triangle from the base sides:
///   3 L^2 = (a^2 + b^2 + c^2) / 2 + 2 sqrt(3) Area
/// with Area from the sorted-sides Heron formula. Throws InvalidTriangle
/// unless a, b, c are positive and satisfy the strict triangle inequality.
double napoleon_side_length(double a, double b, double c);

/// Heron's formula in the numerically stable ordering (Kahan): sides sorted
/// a >= b >= c and every parenthesis kept.
double heron_area(double a, double b, double c);

/// 2 cos(pi / n): discovered/base side ratio of the extension construction.
/// Throws InvalidParameter for n < 3.
double predicted_extension_ratio(int n);

/// Distance from a base octagon vertex to the center of an adjacent erected
/// octagon of side x: x sin(67.5 deg) / sin(45 deg).
double octagon_center_distance(double x);

RatioMeasurement measure_extension_ratio(const ConstructionResult& result);

struct NapoleonVerification {
  RegularityReport regularity;  // of the discovered triangle
  std::array<double, 3> base_sides{};
  std::array<double, 3> discovered_sides{};
  double formula_side = 0.0;
  double max_formula_deviation = 0.0;
  bool formula_matches = false;

  bool holds() const { return regularity.is_regular && formula_matches; }
};

/// Outward Napoleon construction on `base`, with the discovered triangle
/// checked for regularity and each side compared against the closed form.
NapoleonVerification verify_napoleon(const Polygon& base, const ToleranceConfig& tol = {});

/// Circumcenter found by intersecting the perpendicular bisectors of the
/// best-conditioned pair of sides. Independent of centroid(); used as its
/// oracle. Throws NumericConditioning when every side pair is near-parallel.
Point2 brute_force_center(const Polygon& p);

}  // namespace napoleon
