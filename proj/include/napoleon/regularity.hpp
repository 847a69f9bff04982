#pragma once

#include <vector>

#include "napoleon/geom.hpp"

namespace napoleon {

/// Side and angle measurements of a polygon, judged against their means.
struct RegularityReport {
  bool is_regular = false;
  std::vector<double> side_lengths;
  std::vector<double> interior_angles;  // radians
  double max_side_deviation = 0.0;
  double max_angle_deviation = 0.0;
  ToleranceConfig tolerance_used;

  double mean_side() const;
  double mean_angle() const;
};

/// Regular means equal sides AND equal interior angles: every side must pass
/// `tol.approx_eq` against the mean side, and every angle against the mean
/// angle. Throws UnsupportedInput for self-intersecting polygons.
RegularityReport is_regular(const Polygon& p, const ToleranceConfig& tol = {});

/// Raised when an operation that needs a regular polygon gets something else.
class NotRegularError : public GeometryError {
 public:
  explicit NotRegularError(RegularityReport report);

  const RegularityReport& report() const noexcept { return report_; }

 private:
  RegularityReport report_;
};

}  // namespace napoleon
