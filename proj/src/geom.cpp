#include "napoleon/geom.hpp"

#include <algorithm>
#include <string>

namespace napoleon {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::InvalidParameter: return "invalid-parameter";
    case ErrorKind::UnsupportedInput: return "unsupported-input";
    case ErrorKind::DegenerateInput: return "degenerate-input";
    case ErrorKind::AmbiguousOrientation: return "ambiguous-orientation";
    case ErrorKind::InvalidTriangle: return "invalid-triangle";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::NumericConditioning: return "numeric-conditioning";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

void require_finite(Point2 p) {
  if (!is_finite(p)) {
    throw GeometryError(ErrorKind::InvalidInput, "non-finite coordinate");
  }
}

void ToleranceConfig::validate() const {
  if (!std::isfinite(atol) || !std::isfinite(rtol) || atol < 0.0 || rtol < 0.0) {
    throw GeometryError(ErrorKind::InvalidParameter,
                        "tolerances must be finite and non-negative");
  }
  if (atol == 0.0 && rtol == 0.0) {
    throw GeometryError(ErrorKind::InvalidParameter,
                        "atol and rtol cannot both be zero");
  }
}

bool ToleranceConfig::approx_eq(Point2 a, Point2 b) const {
  const double scale = std::max(std::hypot(a.x, a.y), std::hypot(b.x, b.y));
  return distance(a, b) <= allowance(scale);
}

Polygon::Polygon(std::vector<Point2> vertices, const ToleranceConfig& tol)
    : vertices_(std::move(vertices)) {
  if (vertices_.size() < 3) {
    throw GeometryError(ErrorKind::InvalidInput,
                        "a polygon needs at least 3 vertices, got " +
                            std::to_string(vertices_.size()));
  }
  for (const auto& v : vertices_) require_finite(v);

  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (tol.approx_eq(vertices_[i], vertices_[(i + 1) % n])) {
      throw GeometryError(ErrorKind::DegenerateInput,
                          "vertices " + std::to_string(i) + " and " +
                              std::to_string((i + 1) % n) + " coincide");
    }
  }
}

Polygon Polygon::reversed() const {
  Polygon out = *this;
  std::reverse(out.vertices_.begin(), out.vertices_.end());
  return out;
}

double distance(Point2 a, Point2 b) {
  require_finite(a);
  require_finite(b);
  return (b - a).norm();
}

Point2 rotate(Point2 point, Point2 about, double angle) {
  require_finite(point);
  require_finite(about);
  if (!std::isfinite(angle)) {
    throw GeometryError(ErrorKind::InvalidInput, "non-finite rotation angle");
  }
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  const Vec2 d = point - about;
  return about + Vec2{c * d.dx - s * d.dy, s * d.dx + c * d.dy};
}

double polygon_area(const Polygon& p) {
  // Coordinates are taken relative to vertex 0 to keep the cross products
  // small for polygons far from the origin.
  const Point2 origin = p[0];
  const std::size_t n = p.size();
  double twice = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    twice += cross(p[i] - origin, p[i + 1] - origin);
  }
  return 0.5 * twice;
}

Point2 centroid(const Polygon& p) {
  double sx = 0.0;
  double sy = 0.0;
  for (const auto& v : p.vertices()) {
    sx += v.x;
    sy += v.y;
  }
  const auto n = static_cast<double>(p.size());
  return {sx / n, sy / n};
}

std::vector<double> side_lengths(const Polygon& p) {
  std::vector<double> out;
  out.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out.push_back(p.edge(i).length());
  return out;
}

double perimeter(const Polygon& p) {
  double total = 0.0;
  for (double s : side_lengths(p)) total += s;
  return total;
}

namespace {

int orientation(Point2 a, Point2 b, Point2 c) {
  const double v = cross(b - a, c - a);
  return (v > 0.0) - (v < 0.0);
}

bool on_segment(Point2 a, Point2 b, Point2 p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool segments_intersect(const Segment& s, const Segment& t) {
  const int o1 = orientation(s.start, s.end, t.start);
  const int o2 = orientation(s.start, s.end, t.end);
  const int o3 = orientation(t.start, t.end, s.start);
  const int o4 = orientation(t.start, t.end, s.end);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  // Touching and collinear-overlap cases.
  if (o1 == 0 && on_segment(s.start, s.end, t.start)) return true;
  if (o2 == 0 && on_segment(s.start, s.end, t.end)) return true;
  if (o3 == 0 && on_segment(t.start, t.end, s.start)) return true;
  if (o4 == 0 && on_segment(t.start, t.end, s.end)) return true;
  return false;
}

}  // namespace

bool is_simple(const Polygon& p) {
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;  // adjacent through the closing edge
      if (segments_intersect(p.edge(i), p.edge(j))) return false;
    }
  }
  return true;
}

std::vector<double> interior_angles(const Polygon& p) {
  if (!is_simple(p)) {
    throw GeometryError(ErrorKind::UnsupportedInput, "polygon self-intersects");
  }
  const double winding = polygon_area(p) >= 0.0 ? 1.0 : -1.0;
  const std::size_t n = p.size();
  std::vector<double> angles;
  angles.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 in = p[i] - p[(i + n - 1) % n];
    const Vec2 out = p[(i + 1) % n] - p[i];
    const double turn = std::atan2(cross(in, out), dot(in, out));
    angles.push_back(kPi - winding * turn);
  }
  return angles;
}

Polygon to_ccw(const Polygon& p) {
  if (polygon_area(p) >= 0.0) return p;
  const auto v = p.vertices();
  std::vector<Point2> flipped;
  flipped.reserve(v.size());
  flipped.push_back(v[0]);
  for (std::size_t i = v.size() - 1; i >= 1; --i) flipped.push_back(v[i]);
  // Same vertex set and adjacency as p, so the invariants still hold.
  return Polygon(std::move(flipped), ToleranceConfig{0.0, 0.0});
}

}  // namespace napoleon
