#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "napoleon/constructions.hpp"
#include "napoleon/geom.hpp"

namespace napoleon::cli {

/// Process exit statuses. Each failure class has its own code.
enum class ExitCode : int {
  Ok = 0,
  Internal = 1,
  Usage = 2,           // bad flags, invalid parameters or ranges
  Parse = 3,           // malformed input file or inline vertices
  Precondition = 4,    // irregular base, wrong vertex count, self-intersection
  Degenerate = 5,      // collinear or collapsing input
  Io = 6,              // unreadable input or unwritable output
  CheckFailed = 7,     // `verify` ran but the claim did not hold
};

enum class Command { Napoleon, Extend, Verify, RatioTable, Render };

struct InlineVertices {
  std::string text;
};
struct InputFile {
  std::string path;
};
struct RegularGenerator {
  int n = 0;
  double side = 1.0;
  double phase_deg = 0.0;
};
using InputSource = std::variant<InlineVertices, InputFile, RegularGenerator>;

enum class RenderMode { Auto, Napoleon, Extend };

struct JobSpec {
  Command command = Command::Napoleon;
  std::optional<InputSource> input;  // unused by ratio-table
  ErectionSide side = ErectionSide::Outward;
  ToleranceConfig tolerance;
  std::optional<std::string> svg_path;
  std::optional<std::string> out_path;
  bool csv = false;
  int n_min = 3;  // ratio-table range, inclusive
  int n_max = 3;
  RenderMode render_mode = RenderMode::Auto;
};

/// Parses "A..B" (or a single "A") into an inclusive range and checks
/// 3 <= A <= B <= 128. Throws GeometryError(InvalidParameter).
std::pair<int, int> parse_n_range(const std::string& text);

/// Turns the input source into a polygon (degrees converted to radians).
Polygon resolve_input(const InputSource& source, const ToleranceConfig& tol);

/// Runs a parsed job, writing the report (or SVG for `render`) to `out`
/// unless an output path is set. Errors become an error document plus a
/// one-line message on `err`.
ExitCode execute(const JobSpec& job, std::ostream& out, std::ostream& err);

/// Full command line, without the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace napoleon::cli
