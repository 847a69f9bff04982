#include <doctest.h>

#include "napoleon/svg.hpp"

using namespace napoleon;

namespace {

std::size_t count(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = haystack.find(needle); pos != std::string::npos;
       pos = haystack.find(needle, pos + needle.size())) {
    ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("napoleon figure structure") {
  const auto svg = svg::render(napoleon_construction(Polygon({{0, 0}, {4, 0}, {0, 3}})));
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("version=\"1.1\"") != std::string::npos);
  CHECK(svg.find("width=\"1000\" height=\"1000\"") != std::string::npos);
  CHECK(count(svg, "<polygon class=\"base\"") == 1);
  CHECK(count(svg, "<polygon class=\"erected\"") == 3);
  CHECK(count(svg, "<polygon class=\"discovered\"") == 1);
  CHECK(count(svg, "<circle class=\"center\"") == 3);
  CHECK(count(svg, "<polygon") == 5);
  CHECK(svg.size() >= 6);
  CHECK(svg.substr(svg.size() - 7) == "</svg>\n");
}

TEST_CASE("extension figure structure") {
  for (int n : {4, 6, 8}) {
    const auto r = extension_construction(make_regular_polygon(n, {0, 0}, 1.0, 0.0));
    const auto svg = svg::render(r);
    CHECK(count(svg, "<polygon class=\"base\"") == 1);
    CHECK(count(svg, "<polygon class=\"erected\"") == static_cast<std::size_t>(n));
    CHECK(count(svg, "<polygon class=\"discovered\"") == 1);
  }
}

TEST_CASE("render is deterministic") {
  const Polygon base({{0.1, -2.3}, {7.7, 1.1}, {-3.3, 4.4}});
  CHECK(svg::render(napoleon_construction(base)) == svg::render(napoleon_construction(base)));
}

TEST_CASE("viewBox fits the geometry with a 5% margin") {
  // Unit square erected outward: geometry spans [-1, 2] in both axes.
  const auto r = extension_construction(Polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
  const auto svg = svg::render(r);
  CHECK(svg.find("viewBox=\"-1.150000 -2.150000 3.300000 3.300000\"") != std::string::npos);
}
