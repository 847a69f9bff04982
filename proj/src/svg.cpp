#include "napoleon/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

namespace napoleon::svg {

namespace {

// Fixed-point so the bytes never depend on locale or formatting mode.
std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

struct Bounds {
  double min_x = std::numeric_limits<double>::infinity();
  double min_y = std::numeric_limits<double>::infinity();
  double max_x = -std::numeric_limits<double>::infinity();
  double max_y = -std::numeric_limits<double>::infinity();

  // SVG's y axis points down; geometry is drawn with y flipped.
  void add(Point2 p) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, -p.y);
    max_y = std::max(max_y, -p.y);
  }
  void add(const Polygon& poly) {
    for (const auto& v : poly.vertices()) add(v);
  }
};

std::string points_attr(const Polygon& poly) {
  std::string out;
  for (const auto& v : poly.vertices()) {
    if (!out.empty()) out += ' ';
    out += num(v.x) + "," + num(-v.y);
  }
  return out;
}

}  // namespace

std::string render(const ConstructionResult& result) {
  Bounds b;
  b.add(result.base);
  for (const auto& e : result.erected) b.add(e);
  b.add(result.discovered);

  const double extent = std::max(b.max_x - b.min_x, b.max_y - b.min_y);
  const double margin = 0.05 * extent;
  const double stroke = 0.003 * extent;
  const double marker = 0.008 * extent;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(kCanvasSize) + "\" height=\"" + std::to_string(kCanvasSize) +
         "\" viewBox=\"" + num(b.min_x - margin) + " " + num(b.min_y - margin) + " " +
         num(b.max_x - b.min_x + 2 * margin) + " " + num(b.max_y - b.min_y + 2 * margin) +
         "\">\n";

  out += "  <g id=\"erected\" fill=\"#6a9fd4\" fill-opacity=\"0.25\" stroke=\"#6a9fd4\" "
         "stroke-opacity=\"0.6\" stroke-width=\"" + num(stroke) + "\">\n";
  for (const auto& e : result.erected) {
    out += "    <polygon class=\"erected\" points=\"" + points_attr(e) + "\"/>\n";
  }
  out += "  </g>\n";

  out += "  <polygon class=\"base\" points=\"" + points_attr(result.base) +
         "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"" + num(stroke) + "\"/>\n";
  out += "  <polygon class=\"discovered\" points=\"" + points_attr(result.discovered) +
         "\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"" + num(3 * stroke) + "\"/>\n";

  out += "  <g id=\"centers\" fill=\"#c0392b\">\n";
  for (const auto& c : result.centers) {
    out += "    <circle class=\"center\" cx=\"" + num(c.x) + "\" cy=\"" + num(-c.y) +
           "\" r=\"" + num(marker) + "\"/>\n";
  }
  out += "  </g>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace napoleon::svg
