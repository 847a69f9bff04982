#include "napoleon/constructions.hpp"

#include <string>

namespace napoleon {

namespace {

void require_polygon_order(int n) {
  if (n < 3) {
    throw GeometryError(ErrorKind::InvalidParameter,
                        "a regular polygon needs n >= 3, got " + std::to_string(n));
  }
}

double norm_of(Point2 p) { return std::hypot(p.x, p.y); }

ConstructionResult erect_on_every_edge(const Polygon& input, int n, ErectionSide side,
                                       const ToleranceConfig& tol) {
  Polygon base = to_ccw(input);
  const Point2 hint = centroid(base);

  std::vector<Polygon> erected;
  std::vector<Point2> centers;
  erected.reserve(base.size());
  centers.reserve(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    erected.push_back(erect_regular_on_edge(base.edge(i), n, side, hint, tol));
    centers.push_back(centroid(erected.back()));
  }

  try {
    Polygon discovered(centers, tol);
    return {std::move(base), std::move(erected), std::move(centers),
            std::move(discovered)};
  } catch (const GeometryError& e) {
    throw GeometryError(ErrorKind::DegenerateInput,
                        std::string("discovered polygon collapses: ") + e.what());
  }
}

}  // namespace

Polygon make_regular_polygon(int n, Point2 center, double circumradius, double phase) {
  require_polygon_order(n);
  if (!(circumradius > 0.0) || !std::isfinite(circumradius)) {
    throw GeometryError(ErrorKind::InvalidParameter,
                        "circumradius must be positive and finite");
  }
  require_finite(center);
  if (!std::isfinite(phase)) {
    throw GeometryError(ErrorKind::InvalidParameter, "phase must be finite");
  }

  std::vector<Point2> vertices;
  vertices.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double a = phase + 2.0 * kPi * k / n;
    vertices.push_back(center + circumradius * Vec2{std::cos(a), std::sin(a)});
  }
  return Polygon(std::move(vertices), ToleranceConfig{0.0, 0.0});
}

double circumradius_for_side(int n, double side) {
  require_polygon_order(n);
  if (!(side > 0.0) || !std::isfinite(side)) {
    throw GeometryError(ErrorKind::InvalidParameter, "side must be positive and finite");
  }
  return side / (2.0 * std::sin(kPi / n));
}

Polygon erect_regular_on_edge(const Segment& edge, int n, ErectionSide side,
                              Point2 base_interior_hint, const ToleranceConfig& tol) {
  require_polygon_order(n);
  require_finite(edge.start);
  require_finite(edge.end);
  require_finite(base_interior_hint);

  const Vec2 d = edge.direction();
  const double len = d.norm();
  if (len <= tol.allowance(std::max(norm_of(edge.start), norm_of(edge.end)))) {
    throw GeometryError(ErrorKind::DegenerateInput, "edge has zero length");
  }

  const double hint_side = cross(d, base_interior_hint - edge.start);
  const double scale = std::max({norm_of(edge.start), norm_of(edge.end),
                                 norm_of(base_interior_hint)});
  if (std::abs(hint_side) / len <= tol.allowance(scale)) {
    throw GeometryError(ErrorKind::AmbiguousOrientation,
                        "interior hint lies on the edge's supporting line");
  }

  const bool hint_left = hint_side > 0.0;
  const bool figure_left = (side == ErectionSide::Inward) == hint_left;

  // Center sits one apothem away from the edge midpoint, on the figure side.
  const Vec2 left_normal{-d.dy / len, d.dx / len};
  const double apothem = len / (2.0 * std::tan(kPi / n));
  const Point2 center =
      edge.midpoint() + (figure_left ? apothem : -apothem) * left_normal;

  // Walking counter-clockwise from edge.start reaches edge.end first when the
  // figure is on the left of the edge, last when it is on the right.
  std::vector<Point2> vertices;
  vertices.reserve(static_cast<std::size_t>(n));
  vertices.push_back(edge.start);
  for (int k = 1; k < n; ++k) {
    vertices.push_back(rotate(edge.start, center, 2.0 * kPi * k / n));
  }
  if (figure_left) {
    vertices[1] = edge.end;
  } else {
    vertices.back() = edge.end;
  }
  return Polygon(std::move(vertices), ToleranceConfig{0.0, 0.0});
}

bool is_degenerate_triangle(const Polygon& triangle, const ToleranceConfig& tol) {
  const double p = perimeter(triangle);
  return std::abs(polygon_area(triangle)) <= tol.atol * p * p;
}

ConstructionResult napoleon_construction(const Polygon& base, ErectionSide side,
                                         const ToleranceConfig& tol) {
  tol.validate();
  if (base.size() != 3) {
    throw GeometryError(ErrorKind::InvalidInput,
                        "napoleon construction needs a triangle, got " +
                            std::to_string(base.size()) + " vertices");
  }
  if (is_degenerate_triangle(base, tol)) {
    throw GeometryError(ErrorKind::DegenerateInput, "triangle is degenerate");
  }
  return erect_on_every_edge(base, 3, side, tol);
}

ConstructionResult extension_construction(const Polygon& base, ErectionSide side,
                                          const ToleranceConfig& tol) {
  tol.validate();
  RegularityReport report = is_regular(base, tol);
  if (!report.is_regular) throw NotRegularError(std::move(report));
  return erect_on_every_edge(base, static_cast<int>(base.size()), side, tol);
}

}  // namespace napoleon
