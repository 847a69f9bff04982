// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "napoleon/analysis.hpp"
#include "napoleon/cli.hpp"
#include "napoleon/report.hpp"
#include "test_support.hpp"

using namespace napoleon;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* f, double v) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// Erected polygons seen by criteria 1-4, checked again by criterion 6.
std::vector<Polygon> g_erected;

void keep_erected(const ConstructionResult& r) {
  g_erected.insert(g_erected.end(), r.erected.begin(), r.erected.end());
}

ConstructionResult unit_side_extension(int n, double phase = 0.0) {
  return extension_construction(
      make_regular_polygon(n, {0.0, 0.0}, circumradius_for_side(n, 1.0), phase));
}

Outcome napoleon_random_suite() {
  Outcome o;
  const ToleranceConfig tol{1e-9, 1e-9};
  testing::Generator gen(20261015);
  const auto start = Clock::now();
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Polygon base(gen.triangle());
    const ConstructionResult r = napoleon_construction(base, ErectionSide::Outward, tol);
    keep_erected(r);
    const RegularityReport reg = is_regular(r.discovered, tol);
    o.require(reg.is_regular, "discovered triangle not regular at trial " + std::to_string(trial));
    const double formula = napoleon_side_length(r.base.edge(0).length(), r.base.edge(1).length(),
                                                r.base.edge(2).length());
    for (double s : reg.side_lengths) {
      worst = std::max(worst, std::abs(s - formula));
      o.require(tol.approx_eq(s, formula), "side differs from closed form");
    }
  }
  const double elapsed = seconds_since(start);
  o.require(elapsed < 1.0, fmt("took %.3f s", elapsed));
  if (o.pass) o.detail = fmt("max |side - formula| = %.2e", worst) + fmt(", %.3f s", elapsed);
  return o;
}

Outcome ratio_goldens() {
  Outcome o;
  struct Golden {
    int n;
    double exact;
    double rounded;
    double rounded_tol;
  };
  // sqrt(3) and sqrt(2) are stated exactly; the octagon is given as 1.85.
  const Golden goldens[] = {{6, std::sqrt(3.0), std::sqrt(3.0), 0.0},
                            {4, std::sqrt(2.0), std::sqrt(2.0), 0.0},
                            {8, 2.0 * std::cos(kPi / 8.0), 1.85, 0.005}};
  std::string detail;
  for (const auto& g : goldens) {
    const ConstructionResult r = unit_side_extension(g.n);
    keep_erected(r);
    const RatioMeasurement m = measure_extension_ratio(r);
    o.require(std::abs(m.ratio - g.exact) <= 1e-9, "n=" + std::to_string(g.n) + " off exact value");
    o.require(std::abs(m.ratio - g.rounded) <= g.rounded_tol + 1e-9,
              "n=" + std::to_string(g.n) + " off the published figure");
    detail += "n=" + std::to_string(g.n) + fmt(" ratio %.7f  ", m.ratio);
  }
  o.require(std::abs(2.0 * std::cos(kPi / 8.0) - 1.8478) < 5e-5, "1.8478 label mismatch");
  if (o.pass) o.detail = detail;
  return o;
}

Outcome octagon_half_diagonal() {
  Outcome o;
  const double expected = std::sin(degrees_to_radians(67.5)) / std::sin(degrees_to_radians(45.0));
  double measured = 0.0;
  for (double x : {1.0, 2.5}) {
    const ConstructionResult r = extension_construction(
        make_regular_polygon(8, {0.0, 0.0}, circumradius_for_side(8, x), 0.0));
    keep_erected(r);
    for (std::size_t i = 0; i < 8; ++i) {
      // Center i stands on base edge (i, i+1); both endpoints are adjacent.
      for (const Point2 corner : {r.base[i], r.base[(i + 1) % 8]}) {
        const double d = distance(corner, r.centers[i]);
        if (x == 1.0 && i == 0) measured = d;
        o.require(std::abs(d - x * expected) <= 1e-9, "vertex-to-center distance mismatch");
      }
      o.require(std::abs(octagon_center_distance(x) - x * expected) <= 1e-12,
                "closed form mismatch");
    }
  }
  o.require(std::abs(measured - 1.31) <= 0.005, "off the published 1.31");
  if (o.pass) o.detail = fmt("|K2C| = %.7f x", measured);
  return o;
}

Outcome general_ratio_law() {
  Outcome o;
  const auto start = Clock::now();
  double worst = 0.0;
  for (int n = 3; n <= 32; ++n) {
    const ConstructionResult r = unit_side_extension(n, 0.1 * n);
    keep_erected(r);
    o.require(is_regular(r.discovered).is_regular, "discovered not regular, n=" + std::to_string(n));
    const double ratio = measure_extension_ratio(r).ratio;
    worst = std::max(worst, std::abs(ratio - 2.0 * std::cos(kPi / n)));
  }
  o.require(worst <= 1e-9, fmt("worst error %.2e", worst));
  const double elapsed = seconds_since(start);
  o.require(elapsed < 1.0, fmt("took %.3f s", elapsed));
  if (o.pass) o.detail = fmt("max |ratio - 2cos(pi/n)| = %.2e", worst);
  return o;
}

Outcome similarity_equivariance() {
  Outcome o;
  const ToleranceConfig tol;
  testing::Generator gen(5150);
  const auto start = Clock::now();
  double worst_ratio = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const testing::Similarity t = gen.similarity();
    auto check_vertices = [&](const ConstructionResult& plain, const ConstructionResult& moved) {
      for (std::size_t i = 0; i < plain.discovered.size(); ++i) {
        const Point2 want = t(plain.discovered[i]);
        const double allowed = tol.atol * t.scale + tol.rtol * std::hypot(want.x, want.y);
        o.require(distance(moved.discovered[i], want) <= allowed,
                  "vertex mismatch at trial " + std::to_string(trial));
      }
    };

    const auto tri = gen.triangle();
    check_vertices(napoleon_construction(Polygon(tri)), napoleon_construction(Polygon(t(tri))));

    const int n = gen.uniform_int(3, 16);
    const Polygon base = make_regular_polygon(n, gen.point(), gen.uniform(0.5, 3.0),
                                              gen.uniform(0.0, 2.0 * kPi));
    const std::vector<Point2> verts(base.vertices().begin(), base.vertices().end());
    const ConstructionResult plain = extension_construction(base);
    const ConstructionResult moved = extension_construction(Polygon(t(verts)));
    check_vertices(plain, moved);
    const double a = measure_extension_ratio(plain).ratio;
    const double b = measure_extension_ratio(moved).ratio;
    worst_ratio = std::max(worst_ratio, std::abs(a - b) / a);
  }
  o.require(worst_ratio <= 1e-12, fmt("ratio drift %.2e", worst_ratio));
  const double elapsed = seconds_since(start);
  o.require(elapsed < 1.0, fmt("took %.3f s", elapsed));
  if (o.pass) o.detail = fmt("max relative ratio drift %.2e", worst_ratio);
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  double worst = 0.0;
  for (const auto& p : g_erected) {
    worst = std::max(worst, distance(brute_force_center(p), centroid(p)));
  }
  o.require(!g_erected.empty(), "no erected polygons collected");
  o.require(worst <= 1e-10, fmt("worst disagreement %.2e", worst));
  if (o.pass) {
    o.detail = std::to_string(g_erected.size()) + " polygons, " + fmt("max gap %.2e", worst);
  }
  return o;
}

Outcome angle_goldens() {
  Outcome o;
  struct Golden {
    int n;
    double each_deg;
    double sum_deg;
  };
  for (const auto g : {Golden{4, 90, 360}, Golden{6, 120, 720}, Golden{8, 135, 1080}}) {
    const auto angles = interior_angles(make_regular_polygon(g.n, {0.0, 0.0}, 1.0, 0.0));
    double sum = 0.0;
    for (double a : angles) {
      o.require(std::abs(a - degrees_to_radians(g.each_deg)) <= 1e-12,
                "angle off for n=" + std::to_string(g.n));
      sum += a;
    }
    o.require(std::abs(sum - degrees_to_radians(g.sum_deg)) <= 1e-12,
              "sum off for n=" + std::to_string(g.n));
  }
  if (o.pass) o.detail = "90/120/135 deg, sums 360/720/1080 deg";
  return o;
}

std::size_t count(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = haystack.find(needle); pos != std::string::npos;
       pos = haystack.find(needle, pos + needle.size())) {
    ++n;
  }
  return n;
}

Outcome cli_contract() {
  Outcome o;
  auto call = [](std::vector<std::string> args, std::string& out) {
    std::ostringstream os, es;
    const int code = cli::run(args, os, es);
    out = os.str();
    return code;
  };

  std::string out;
  o.require(call({"ratio-table", "3..8", "--csv"}, out) == 0, "ratio-table failed");
  const report::RatioTable table = report::read_ratio_csv(out);
  o.require(table.rows.size() == 6, "expected 6 CSV rows");
  for (const auto& row : table.rows) o.require(row.abs_error <= 1e-9, "row error above 1e-9");

  std::string first, second;
  o.require(call({"render", "--vertices", "0,0;4,0;0,3"}, first) == 0, "render failed");
  call({"render", "--vertices", "0,0;4,0;0,3"}, second);
  o.require(first == second, "render output not byte-identical");
  o.require(count(first, "<polygon class=\"base\"") == 1 &&
                count(first, "<polygon class=\"erected\"") == 3 &&
                count(first, "<polygon class=\"discovered\"") == 1,
            "napoleon SVG structure");
  for (int n : {4, 6, 8}) {
    std::string a, b;
    call({"render", "--regular", std::to_string(n), "--side", "1"}, a);
    call({"render", "--regular", std::to_string(n), "--side", "1"}, b);
    o.require(a == b, "extend render not byte-identical");
    o.require(count(a, "<polygon class=\"base\"") == 1 &&
                  count(a, "<polygon class=\"erected\"") == static_cast<std::size_t>(n) &&
                  count(a, "<polygon class=\"discovered\"") == 1,
              "extend SVG structure for n=" + std::to_string(n));
  }

  const int degenerate = call({"napoleon", "--vertices", "0,0;1,0;2,0"}, out);
  o.require(degenerate == static_cast<int>(cli::ExitCode::Degenerate),
            "degenerate exit code was " + std::to_string(degenerate));
  if (o.pass) o.detail = "6 rows, deterministic SVG, degenerate exit " + std::to_string(degenerate);
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> check;
  };
  const Criterion criteria[] = {
      {"AC1 Napoleon random suite (1000 triangles)", napoleon_random_suite},
      {"AC2 Ratio goldens (n=6,4,8)", ratio_goldens},
      {"AC3 Octagon half-diagonal 1.3066x", octagon_half_diagonal},
      {"AC4 General ratio law n=3..32", general_ratio_law},
      {"AC5 Similarity equivariance (200 transforms)", similarity_equivariance},
      {"AC6 Centroid vs bisector circumcenter", oracle_equivalence},
      {"AC7 Interior angle goldens", angle_goldens},
      {"AC8 CLI contract", cli_contract},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str());
    failures += o.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures,
              std::size(criteria));
  return failures == 0 ? 0 : 1;
}
