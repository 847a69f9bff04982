#include "napoleon/regularity.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

namespace napoleon {

namespace {

double mean(const std::vector<double>& xs) {
  if (xs.empty()) return 0.0;
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

// Returns the largest |x - m| and whether every element passes the rule.
std::pair<double, bool> deviation(const std::vector<double>& xs, double m,
                                  const ToleranceConfig& tol) {
  double worst = 0.0;
  bool ok = true;
  for (double x : xs) {
    worst = std::max(worst, std::abs(x - m));
    ok = ok && tol.approx_eq(x, m);
  }
  return {worst, ok};
}

std::string describe(const RegularityReport& r) {
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "polygon is not regular (max side deviation %.3g, max angle "
                "deviation %.3g rad)",
                r.max_side_deviation, r.max_angle_deviation);
  return buf;
}

}  // namespace

double RegularityReport::mean_side() const { return mean(side_lengths); }
double RegularityReport::mean_angle() const { return mean(interior_angles); }

RegularityReport is_regular(const Polygon& p, const ToleranceConfig& tol) {
  tol.validate();
  RegularityReport report;
  report.tolerance_used = tol;
  report.interior_angles = interior_angles(p);
  report.side_lengths = side_lengths(p);

  const auto [side_dev, sides_ok] =
      deviation(report.side_lengths, report.mean_side(), tol);
  const auto [angle_dev, angles_ok] =
      deviation(report.interior_angles, report.mean_angle(), tol);
  report.max_side_deviation = side_dev;
  report.max_angle_deviation = angle_dev;
  report.is_regular = sides_ok && angles_ok;
  return report;
}

NotRegularError::NotRegularError(RegularityReport report)
    : GeometryError(ErrorKind::Precondition, describe(report)),
      report_(std::move(report)) {}

}  // namespace napoleon
