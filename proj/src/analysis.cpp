#include "napoleon/analysis.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace napoleon {

double heron_area(double a, double b, double c) {
  std::array<double, 3> s{a, b, c};
  std::sort(s.begin(), s.end(), std::greater<>());
  const auto [x, y, z] = s;
  const double q = (x + (y + z)) * (z - (x - y)) * (z + (x - y)) * (x + (y - z));
  return 0.25 * std::sqrt(std::max(q, 0.0));
}

double napoleon_side_length(double a, double b, double c) {
  for (double s : {a, b, c}) {
    if (!std::isfinite(s) || !(s > 0.0)) {
      throw GeometryError(ErrorKind::InvalidTriangle,
                          "triangle sides must be positive and finite");
    }
  }
  const double longest = std::max({a, b, c});
  if (!(longest < (a + b + c) - longest)) {
    throw GeometryError(ErrorKind::InvalidTriangle,
                        "sides violate the strict triangle inequality");
  }
  const double area = heron_area(a, b, c);
  const double three_l2 = 0.5 * (a * a + b * b + c * c) + 2.0 * std::sqrt(3.0) * area;
  return std::sqrt(three_l2 / 3.0);
}

double predicted_extension_ratio(int n) {
  if (n < 3) {
    throw GeometryError(ErrorKind::InvalidParameter,
                        "n must be at least 3, got " + std::to_string(n));
  }
  return 2.0 * std::cos(kPi / n);
}

double octagon_center_distance(double x) {
  if (!std::isfinite(x) || !(x > 0.0)) {
    throw GeometryError(ErrorKind::InvalidParameter, "side must be positive and finite");
  }
  return x * std::sin(degrees_to_radians(67.5)) / std::sin(degrees_to_radians(45.0));
}

namespace {

double mean_side(const Polygon& p) {
  return perimeter(p) / static_cast<double>(p.size());
}

}  // namespace

RatioMeasurement measure_extension_ratio(const ConstructionResult& result) {
  RatioMeasurement m;
  m.base_side = mean_side(result.base);
  m.discovered_side = mean_side(result.discovered);
  m.ratio = m.discovered_side / m.base_side;
  m.predicted_ratio = predicted_extension_ratio(static_cast<int>(result.base.size()));
  m.abs_error = std::abs(m.ratio - m.predicted_ratio);
  return m;
}

NapoleonVerification verify_napoleon(const Polygon& base, const ToleranceConfig& tol) {
  const ConstructionResult result = napoleon_construction(base, ErectionSide::Outward, tol);

  NapoleonVerification v;
  v.regularity = is_regular(result.discovered, tol);
  for (std::size_t i = 0; i < 3; ++i) {
    v.base_sides[i] = result.base.edge(i).length();
    v.discovered_sides[i] = result.discovered.edge(i).length();
  }
  v.formula_side = napoleon_side_length(v.base_sides[0], v.base_sides[1], v.base_sides[2]);
  v.formula_matches = true;
  for (double s : v.discovered_sides) {
    v.max_formula_deviation = std::max(v.max_formula_deviation, std::abs(s - v.formula_side));
    v.formula_matches = v.formula_matches && tol.approx_eq(s, v.formula_side);
  }
  return v;
}

Point2 brute_force_center(const Polygon& p) {
  constexpr double kMinSine = 1e-8;

  // Each side contributes its bisector: through the midpoint, normal to the side.
  const std::size_t n = p.size();
  std::size_t best_i = 0;
  std::size_t best_j = 0;
  double best_sine = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 di = p.edge(i).direction();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec2 dj = p.edge(j).direction();
      const double sine = std::abs(cross(di, dj)) / (di.norm() * dj.norm());
      if (sine > best_sine) {
        best_sine = sine;
        best_i = i;
        best_j = j;
      }
    }
  }
  if (best_sine < kMinSine) {
    throw GeometryError(ErrorKind::NumericConditioning,
                        "all side bisectors are near-parallel");
  }

  // Points X on the bisector of side (s, e) satisfy dot(X - m, e - s) = 0.
  // Solve the 2x2 system for the two chosen sides relative to vertex 0.
  const Point2 origin = p[0];
  const Segment a = p.edge(best_i);
  const Segment b = p.edge(best_j);
  const Vec2 da = a.direction();
  const Vec2 db = b.direction();
  const double ra = dot(a.midpoint() - origin, da);
  const double rb = dot(b.midpoint() - origin, db);
  const double det = da.dx * db.dy - da.dy * db.dx;
  const double x = (ra * db.dy - rb * da.dy) / det;
  const double y = (da.dx * rb - db.dx * ra) / det;
  return origin + Vec2{x, y};
}

}  // namespace napoleon
