#pragma once

#include <vector>

#include "napoleon/geom.hpp"
#include "napoleon/regularity.hpp"

namespace napoleon {

/// Outward: the erected figure lies across the edge from the base interior.
/// Inward: on the same side as the interior.
enum class ErectionSide { Outward, Inward };

struct ConstructionResult {
  Polygon base;                  // counter-clockwise copy of the input
  std::vector<Polygon> erected;  // erected[i] stands on base.edge(i)
  std::vector<Point2> centers;   // centers[i] = centroid(erected[i])
  Polygon discovered;            // vertices == centers
};

/// Vertex k sits at center + R (cos(phase + 2 pi k / n), sin(phase + 2 pi k / n)).
Polygon make_regular_polygon(int n, Point2 center, double circumradius, double phase);

/// Circumradius of a regular n-gon with the given side length.
double circumradius_for_side(int n, double side);

/// Erects a regular n-gon having `edge` as a side. The vertex list starts at
/// edge.start and runs counter-clockwise; both edge endpoints appear exactly.
///
/// `base_interior_hint` picks the side: Outward places the figure opposite the
/// hint, Inward on the hint's side. Throws DegenerateInput for a zero-length
/// edge and AmbiguousOrientation when the hint lies on the edge's line.
Polygon erect_regular_on_edge(const Segment& edge, int n, ErectionSide side,
                              Point2 base_interior_hint,
                              const ToleranceConfig& tol = {});

/// True when |area| <= atol * perimeter^2.
bool is_degenerate_triangle(const Polygon& triangle, const ToleranceConfig& tol = {});

/// Equilateral triangles on each side of `base`, joined at their centers.
/// Throws InvalidInput unless `base` has 3 vertices, DegenerateInput when it
/// is (near) collinear or the centers collapse onto each other.
ConstructionResult napoleon_construction(const Polygon& base,
                                         ErectionSide side = ErectionSide::Outward,
                                         const ToleranceConfig& tol = {});

/// Regular n-gons on each side of a regular n-gon, joined at their centers.
/// Throws NotRegularError (with the report) when `base` is not regular under
/// `tol`, DegenerateInput when the centers collapse (always the case Inward).
ConstructionResult extension_construction(const Polygon& base,
                                          ErectionSide side = ErectionSide::Outward,
                                          const ToleranceConfig& tol = {});

}  // namespace napoleon
