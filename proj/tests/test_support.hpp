#pragma once

// Random generators and independent oracles shared by the unit and
// acceptance suites. Nothing here calls into the construction code.

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "napoleon/geom.hpp"

namespace napoleon::testing {

using Complex = std::complex<double>;

inline Complex as_complex(Point2 p) { return {p.x, p.y}; }
inline Point2 as_point(Complex z) { return {z.real(), z.imag()}; }

/// Center of the regular n-gon erected on the right-hand side of p -> q.
/// Solves q - c = (p - c) w with w = exp(-2 pi i / n).
inline Point2 oracle_right_center(Point2 p, Point2 q, int n) {
  const Complex w = std::polar(1.0, -2.0 * kPi / n);
  return as_point((as_complex(q) - as_complex(p) * w) / (1.0 - w));
}

/// Outward centers for a counter-clockwise base: erected figures lie to the
/// right of every edge.
inline std::vector<Point2> oracle_outward_centers(const std::vector<Point2>& ccw_base, int n) {
  std::vector<Point2> out;
  const std::size_t m = ccw_base.size();
  for (std::size_t i = 0; i < m; ++i) {
    out.push_back(oracle_right_center(ccw_base[i], ccw_base[(i + 1) % m], n));
  }
  return out;
}

/// Napoleon centers the textbook way: apex = p + (q - p) exp(-i pi / 3),
/// center = (p + q + apex) / 3.
inline std::vector<Point2> oracle_napoleon_centers(const std::vector<Point2>& ccw_tri) {
  std::vector<Point2> out;
  for (std::size_t i = 0; i < 3; ++i) {
    const Complex p = as_complex(ccw_tri[i]);
    const Complex q = as_complex(ccw_tri[(i + 1) % 3]);
    const Complex apex = p + (q - p) * std::polar(1.0, -kPi / 3.0);
    out.push_back(as_point((p + q + apex) / 3.0));
  }
  return out;
}

/// Rotation + uniform scale + translation.
struct Similarity {
  double angle = 0.0;
  double scale = 1.0;
  Vec2 shift;

  Point2 operator()(Point2 p) const {
    const double c = std::cos(angle) * scale;
    const double s = std::sin(angle) * scale;
    return {c * p.x - s * p.y + shift.dx, s * p.x + c * p.y + shift.dy};
  }
  std::vector<Point2> operator()(const std::vector<Point2>& pts) const {
    std::vector<Point2> out;
    for (const auto& p : pts) out.push_back((*this)(p));
    return out;
  }
};

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<>(lo, hi)(rng_); }
  int uniform_int(int lo, int hi) { return std::uniform_int_distribution<>(lo, hi)(rng_); }

  Point2 point(double lo = -10.0, double hi = 10.0) { return {uniform(lo, hi), uniform(lo, hi)}; }

  /// Triangle with coordinates in [-10, 10]^2, |area| > min_area and
  /// |area| > 1e-9 * perimeter^2. Either winding.
  std::vector<Point2> triangle(double min_area = 1e-3) {
    while (true) {
      std::vector<Point2> t{point(), point(), point()};
      const double area = 0.5 * cross(t[1] - t[0], t[2] - t[0]);
      const double per = (t[1] - t[0]).norm() + (t[2] - t[1]).norm() + (t[0] - t[2]).norm();
      if (std::abs(area) > min_area && std::abs(area) > 1e-9 * per * per) return t;
    }
  }

  /// Convex polygon: sorted random angles on a randomly scaled ellipse.
  std::vector<Point2> convex_polygon(int n) {
    std::vector<double> angles;
    for (int i = 0; i < n; ++i) angles.push_back(uniform(0.0, 2.0 * kPi));
    std::sort(angles.begin(), angles.end());
    const double rx = uniform(0.5, 5.0);
    const double ry = uniform(0.5, 5.0);
    const Point2 c = point(-5.0, 5.0);
    std::vector<Point2> out;
    for (double a : angles) out.push_back({c.x + rx * std::cos(a), c.y + ry * std::sin(a)});
    return out;
  }

  Similarity similarity() {
    return {uniform(-kPi, kPi), uniform(0.1, 10.0), Vec2{uniform(-50.0, 50.0), uniform(-50.0, 50.0)}};
  }

 private:
  std::mt19937_64 rng_;
};

inline double signed_area(const std::vector<Point2>& pts) {
  double twice = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Point2 a = pts[i];
    const Point2 b = pts[(i + 1) % pts.size()];
    twice += a.x * b.y - b.x * a.y;
  }
  return 0.5 * twice;
}

}  // namespace napoleon::testing
