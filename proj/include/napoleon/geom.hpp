#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "napoleon/errors.hpp"

namespace napoleon {

inline constexpr double kPi = 3.14159265358979323846;

constexpr double degrees_to_radians(double deg) { return deg * (kPi / 180.0); }
constexpr double radians_to_degrees(double rad) { return rad * (180.0 / kPi); }

struct Vec2 {
  double dx = 0.0;
  double dy = 0.0;

  double norm() const { return std::hypot(dx, dy); }

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.dx + b.dx, a.dy + b.dy}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.dx - b.dx, a.dy - b.dy}; }
  friend Vec2 operator*(double s, Vec2 v) { return {s * v.dx, s * v.dy}; }
  friend bool operator==(const Vec2&, const Vec2&) = default;
};

inline double dot(Vec2 a, Vec2 b) { return a.dx * b.dx + a.dy * b.dy; }
inline double cross(Vec2 a, Vec2 b) { return a.dx * b.dy - a.dy * b.dx; }

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend Point2 operator+(Point2 p, Vec2 v) { return {p.x + v.dx, p.y + v.dy}; }
  friend Point2 operator-(Point2 p, Vec2 v) { return {p.x - v.dx, p.y - v.dy}; }
  friend Vec2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend bool operator==(const Point2&, const Point2&) = default;
};

inline bool is_finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }
inline bool is_finite(Vec2 v) { return std::isfinite(v.dx) && std::isfinite(v.dy); }

/// Throws InvalidInput when `p` has a NaN or infinite coordinate.
void require_finite(Point2 p);

/// Comparison rule for every approximate predicate in the library:
/// |u - v| <= atol + rtol * max(|u|, |v|).
struct ToleranceConfig {
  double atol = 1e-9;
  double rtol = 1e-9;

  /// Throws InvalidParameter for negative, non-finite or all-zero tolerances.
  void validate() const;

  double allowance(double magnitude) const { return atol + rtol * magnitude; }

  bool approx_eq(double u, double v) const {
    return std::abs(u - v) <= allowance(std::max(std::abs(u), std::abs(v)));
  }

  /// Points compare by Euclidean distance, scaled by the larger position norm.
  bool approx_eq(Point2 a, Point2 b) const;

  friend bool operator==(const ToleranceConfig&, const ToleranceConfig&) = default;
};

struct Segment {
  Point2 start;
  Point2 end;

  Vec2 direction() const { return end - start; }
  double length() const { return direction().norm(); }
  Point2 midpoint() const {
    return {0.5 * (start.x + end.x), 0.5 * (start.y + end.y)};
  }
};

/// Ordered, closed vertex ring. Keeps the winding it was given; the
/// constructions normalize to counter-clockwise themselves.
class Polygon {
 public:
  /// Throws InvalidInput for fewer than 3 or non-finite vertices, and
  /// DegenerateInput when two consecutive vertices coincide under `tol`.
  explicit Polygon(std::vector<Point2> vertices, const ToleranceConfig& tol = {});

  std::span<const Point2> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Point2& operator[](std::size_t i) const { return vertices_[i]; }

  /// Edge i runs from vertex i to vertex (i + 1) mod n.
  Segment edge(std::size_t i) const {
    return {vertices_[i], vertices_[(i + 1) % vertices_.size()]};
  }

  Polygon reversed() const;

  friend bool operator==(const Polygon&, const Polygon&) = default;

 private:
  std::vector<Point2> vertices_;
};

double distance(Point2 a, Point2 b);

/// Plane rotation of `point` about `about`; positive angles turn
/// counter-clockwise.
Point2 rotate(Point2 point, Point2 about, double angle);

/// Signed shoelace area, positive for counter-clockwise winding.
double polygon_area(const Polygon& p);

/// Vertex average. Coincides with the area centroid and the circumcenter for
/// regular polygons, which is the only case the constructions rely on.
Point2 centroid(const Polygon& p);

std::vector<double> side_lengths(const Polygon& p);
double perimeter(const Polygon& p);

/// Pairwise test between non-adjacent edges.
bool is_simple(const Polygon& p);

/// Per-vertex interior angles in radians. Either winding is accepted.
/// Throws UnsupportedInput for self-intersecting polygons.
std::vector<double> interior_angles(const Polygon& p);

/// Counter-clockwise copy of `p`. Vertex 0 stays first when the winding has
/// to be flipped.
Polygon to_ccw(const Polygon& p);

}  // namespace napoleon
