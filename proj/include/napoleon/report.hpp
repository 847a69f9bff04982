#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "napoleon/analysis.hpp"
#include "napoleon/geom.hpp"
#include "napoleon/regularity.hpp"

// Documents exchanged at the CLI boundary. Angles are in degrees here, unlike
// the rest of the library. Every document round-trips through
// write_document/read_document unchanged.
namespace napoleon::report {

struct RegularityDoc {
  bool is_regular = false;
  std::vector<double> side_lengths;
  std::vector<double> interior_angles_deg;
  double max_side_deviation = 0.0;
  double max_angle_deviation_deg = 0.0;
  double atol = 0.0;
  double rtol = 0.0;

  static RegularityDoc from(const RegularityReport& r);
  friend bool operator==(const RegularityDoc&, const RegularityDoc&) = default;
};

struct RatioDoc {
  double base_side = 0.0;
  double discovered_side = 0.0;
  double ratio = 0.0;
  double predicted_ratio = 0.0;
  double abs_error = 0.0;

  static RatioDoc from(const RatioMeasurement& m);
  friend bool operator==(const RatioDoc&, const RatioDoc&) = default;
};

struct NapoleonReport {
  std::string erection;  // "outward" | "inward"
  std::vector<Point2> base;
  std::vector<Point2> discovered;
  std::vector<double> discovered_sides;
  // Closed form only applies to the outward construction.
  std::optional<double> formula_side;
  std::optional<double> max_formula_deviation;
  std::optional<bool> formula_matches;
  RegularityDoc regularity;

  friend bool operator==(const NapoleonReport&, const NapoleonReport&) = default;
};

struct ExtendReport {
  int n = 0;
  std::string erection;
  std::vector<Point2> base;
  std::vector<Point2> discovered;
  RatioDoc ratio;
  RegularityDoc regularity;

  friend bool operator==(const ExtendReport&, const ExtendReport&) = default;
};

struct VerifyReport {
  std::string claim;  // "napoleon" | "extension"
  bool holds = false;
  RegularityDoc regularity;  // of the discovered polygon
  std::optional<double> formula_side;
  std::optional<double> max_formula_deviation;
  std::optional<RatioDoc> ratio;

  friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

struct RatioRow {
  int n = 0;
  double measured_ratio = 0.0;
  double predicted_ratio = 0.0;
  double abs_error = 0.0;

  friend bool operator==(const RatioRow&, const RatioRow&) = default;
};

struct RatioTable {
  std::vector<RatioRow> rows;

  friend bool operator==(const RatioTable&, const RatioTable&) = default;
};

struct ErrorReport {
  std::string error;  // ErrorKind name
  std::string message;
  std::optional<RegularityDoc> regularity;

  friend bool operator==(const ErrorReport&, const ErrorReport&) = default;
};

using Document =
    std::variant<NapoleonReport, ExtendReport, VerifyReport, RatioTable, ErrorReport>;

/// Pretty-printed JSON with a "command" discriminator, newline-terminated.
std::string write_document(const Document& doc);

/// Throws GeometryError(Parse) on malformed or unrecognized documents.
Document read_document(std::string_view text);

/// Header `n,measured_ratio,predicted_ratio,abs_error`, one row per line,
/// shortest round-trip number formatting.
std::string write_ratio_csv(const RatioTable& table);
RatioTable read_ratio_csv(std::string_view text);

/// Polygon input file: `{"vertices": [[x, y], ...]}`. Syntax errors carry
/// line and column.
std::vector<Point2> read_vertices_document(std::string_view text);

/// Inline form "x,y;x,y;...". Errors carry the character offset.
std::vector<Point2> parse_inline_vertices(std::string_view text);

/// Shortest decimal that round-trips to `value`.
std::string format_number(double value);

}  // namespace napoleon::report
