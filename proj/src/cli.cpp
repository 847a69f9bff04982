#include "napoleon/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "napoleon/analysis.hpp"
#include "napoleon/report.hpp"
#include "napoleon/svg.hpp"

namespace napoleon::cli {

namespace {

constexpr int kMaxTableN = 128;

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GeometryError(ErrorKind::Io, "cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw GeometryError(ErrorKind::Io, "cannot open '" + path + "' for writing");
  f << content;
  f.flush();
  if (!f) throw GeometryError(ErrorKind::Io, "failed writing '" + path + "'");
}

void emit(const std::optional<std::string>& path, const std::string& content,
          std::ostream& out) {
  if (path) {
    write_text_file(*path, content);
  } else {
    out << content;
  }
}

std::vector<Point2> vertices_of(const Polygon& p) {
  return {p.vertices().begin(), p.vertices().end()};
}

std::string side_name(ErectionSide side) {
  return side == ErectionSide::Outward ? "outward" : "inward";
}

ExitCode exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidParameter: return ExitCode::Usage;
    case ErrorKind::Parse: return ExitCode::Parse;
    case ErrorKind::DegenerateInput: return ExitCode::Degenerate;
    case ErrorKind::Io: return ExitCode::Io;
    case ErrorKind::InvalidInput:
    case ErrorKind::UnsupportedInput:
    case ErrorKind::AmbiguousOrientation:
    case ErrorKind::InvalidTriangle:
    case ErrorKind::Precondition:
    case ErrorKind::NumericConditioning:
      return ExitCode::Precondition;
  }
  return ExitCode::Internal;
}

ExitCode run_napoleon(const JobSpec& job, std::ostream& out) {
  const Polygon base = resolve_input(*job.input, job.tolerance);
  const ConstructionResult result = napoleon_construction(base, job.side, job.tolerance);

  report::NapoleonReport doc;
  doc.erection = side_name(job.side);
  doc.base = vertices_of(result.base);
  doc.discovered = vertices_of(result.discovered);
  doc.discovered_sides = side_lengths(result.discovered);
  doc.regularity = report::RegularityDoc::from(is_regular(result.discovered, job.tolerance));
  if (job.side == ErectionSide::Outward) {
    const double formula = napoleon_side_length(
        result.base.edge(0).length(), result.base.edge(1).length(), result.base.edge(2).length());
    double worst = 0.0;
    bool matches = true;
    for (double s : doc.discovered_sides) {
      worst = std::max(worst, std::abs(s - formula));
      matches = matches && job.tolerance.approx_eq(s, formula);
    }
    doc.formula_side = formula;
    doc.max_formula_deviation = worst;
    doc.formula_matches = matches;
  }

  if (job.svg_path) write_text_file(*job.svg_path, svg::render(result));
  emit(job.out_path, report::write_document(doc), out);
  return ExitCode::Ok;
}

ExitCode run_extend(const JobSpec& job, std::ostream& out) {
  const Polygon base = resolve_input(*job.input, job.tolerance);
  const ConstructionResult result = extension_construction(base, job.side, job.tolerance);

  report::ExtendReport doc;
  doc.n = static_cast<int>(result.base.size());
  doc.erection = side_name(job.side);
  doc.base = vertices_of(result.base);
  doc.discovered = vertices_of(result.discovered);
  doc.ratio = report::RatioDoc::from(measure_extension_ratio(result));
  doc.regularity = report::RegularityDoc::from(is_regular(result.discovered, job.tolerance));

  if (job.svg_path) write_text_file(*job.svg_path, svg::render(result));
  emit(job.out_path, report::write_document(doc), out);
  return ExitCode::Ok;
}

ExitCode run_verify(const JobSpec& job, std::ostream& out) {
  const Polygon base = resolve_input(*job.input, job.tolerance);
  report::VerifyReport doc;

  if (base.size() == 3) {
    const NapoleonVerification v = verify_napoleon(base, job.tolerance);
    doc.claim = "napoleon";
    doc.holds = v.holds();
    doc.regularity = report::RegularityDoc::from(v.regularity);
    doc.formula_side = v.formula_side;
    doc.max_formula_deviation = v.max_formula_deviation;
  } else {
    const ConstructionResult result =
        extension_construction(base, ErectionSide::Outward, job.tolerance);
    const RegularityReport regularity = is_regular(result.discovered, job.tolerance);
    const RatioMeasurement ratio = measure_extension_ratio(result);
    doc.claim = "extension";
    doc.holds = regularity.is_regular &&
                job.tolerance.approx_eq(ratio.ratio, ratio.predicted_ratio);
    doc.regularity = report::RegularityDoc::from(regularity);
    doc.ratio = report::RatioDoc::from(ratio);
  }

  emit(job.out_path, report::write_document(doc), out);
  return doc.holds ? ExitCode::Ok : ExitCode::CheckFailed;
}

ExitCode run_ratio_table(const JobSpec& job, std::ostream& out) {
  if (job.n_min < 3 || job.n_min > job.n_max || job.n_max > kMaxTableN) {
    throw GeometryError(ErrorKind::InvalidParameter, "ratio-table needs 3 <= min <= max <= 128");
  }
  report::RatioTable table;
  for (int n = job.n_min; n <= job.n_max; ++n) {
    const Polygon base = make_regular_polygon(n, {0.0, 0.0}, circumradius_for_side(n, 1.0), 0.0);
    const RatioMeasurement m =
        measure_extension_ratio(extension_construction(base, ErectionSide::Outward, job.tolerance));
    table.rows.push_back({n, m.ratio, m.predicted_ratio, m.abs_error});
  }
  emit(job.out_path, job.csv ? report::write_ratio_csv(table) : report::write_document(table),
       out);
  return ExitCode::Ok;
}

ExitCode run_render(const JobSpec& job, std::ostream& out) {
  const Polygon base = resolve_input(*job.input, job.tolerance);
  RenderMode mode = job.render_mode;
  if (mode == RenderMode::Auto) mode = base.size() == 3 ? RenderMode::Napoleon : RenderMode::Extend;
  const ConstructionResult result = mode == RenderMode::Napoleon
                                        ? napoleon_construction(base, job.side, job.tolerance)
                                        : extension_construction(base, job.side, job.tolerance);
  emit(job.svg_path ? job.svg_path : job.out_path, svg::render(result), out);
  return ExitCode::Ok;
}

void report_error(const JobSpec& job, report::ErrorReport doc, std::ostream& out,
                  std::ostream& err) {
  err << "error (" << doc.error << "): " << doc.message << "\n";
  // Best effort: an unwritable --out path falls back to the stream.
  const std::string text = report::write_document(doc);
  try {
    emit(job.out_path, text, out);
  } catch (const GeometryError&) {
    out << text;
  }
}

}  // namespace

std::pair<int, int> parse_n_range(const std::string& text) {
  auto parse_int = [&](std::string_view s) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
      throw GeometryError(ErrorKind::InvalidParameter, "malformed n-range '" + text + "'");
    }
    return v;
  };
  const std::string_view sv = text;
  const auto dots = sv.find("..");
  const int lo = parse_int(sv.substr(0, dots));
  const int hi = dots == std::string_view::npos ? lo : parse_int(sv.substr(dots + 2));
  if (lo < 3 || lo > hi || hi > kMaxTableN) {
    throw GeometryError(ErrorKind::InvalidParameter,
                        "n-range must satisfy 3 <= min <= max <= 128, got '" + text + "'");
  }
  return {lo, hi};
}

Polygon resolve_input(const InputSource& source, const ToleranceConfig& tol) {
  return std::visit(
      [&](const auto& src) -> Polygon {
        using T = std::decay_t<decltype(src)>;
        if constexpr (std::is_same_v<T, InlineVertices>) {
          return Polygon(report::parse_inline_vertices(src.text), tol);
        } else if constexpr (std::is_same_v<T, InputFile>) {
          return Polygon(report::read_vertices_document(read_text_file(src.path)), tol);
        } else {
          return make_regular_polygon(src.n, {0.0, 0.0}, circumradius_for_side(src.n, src.side),
                                      degrees_to_radians(src.phase_deg));
        }
      },
      source);
}

ExitCode execute(const JobSpec& job, std::ostream& out, std::ostream& err) {
  try {
    job.tolerance.validate();
    if (job.command != Command::RatioTable && !job.input) {
      throw GeometryError(ErrorKind::InvalidParameter, "no input polygon given");
    }
    switch (job.command) {
      case Command::Napoleon: return run_napoleon(job, out);
      case Command::Extend: return run_extend(job, out);
      case Command::Verify: return run_verify(job, out);
      case Command::RatioTable: return run_ratio_table(job, out);
      case Command::Render: return run_render(job, out);
    }
    return ExitCode::Internal;
  } catch (const NotRegularError& e) {
    report_error(job, {std::string(to_string(e.kind())), e.what(),
                       report::RegularityDoc::from(e.report())},
                 out, err);
    return ExitCode::Precondition;
  } catch (const GeometryError& e) {
    report_error(job, {std::string(to_string(e.kind())), e.what(), std::nullopt}, out, err);
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return ExitCode::Internal;
  }
}

namespace {

struct InputFlags {
  std::string vertices;
  std::string file;
  int regular_n = 0;
  double side = 1.0;
  double phase_deg = 0.0;
  std::string erection = "outward";
  CLI::Option* vertices_opt = nullptr;
  CLI::Option* file_opt = nullptr;
  CLI::Option* regular_opt = nullptr;
};

void add_input_flags(CLI::App& cmd, InputFlags& f) {
  f.file_opt = cmd.add_option("--input", f.file, "Polygon file: {\"vertices\": [[x, y], ...]}");
  f.vertices_opt = cmd.add_option("--vertices", f.vertices, "Inline vertices \"x,y;x,y;...\"");
  f.regular_opt = cmd.add_option("--regular", f.regular_n, "Generate a regular N-gon");
  auto* side = cmd.add_option("--side", f.side, "Side length of the generated polygon");
  auto* phase = cmd.add_option("--phase", f.phase_deg, "Phase of vertex 0 in degrees");
  side->needs(f.regular_opt);
  phase->needs(f.regular_opt);
  f.regular_opt->needs(side);
  cmd.add_option("--erection", f.erection, "outward | inward")
      ->check(CLI::IsMember({"outward", "inward"}));
}

std::optional<InputSource> input_from(const InputFlags& f) {
  const int given = static_cast<int>(f.file_opt->count() > 0) +
                    static_cast<int>(f.vertices_opt->count() > 0) +
                    static_cast<int>(f.regular_opt->count() > 0);
  if (given != 1) {
    throw GeometryError(ErrorKind::InvalidParameter,
                        "give exactly one of --input, --vertices, --regular");
  }
  if (f.file_opt->count() > 0) return InputFile{f.file};
  if (f.vertices_opt->count() > 0) return InlineVertices{f.vertices};
  return RegularGenerator{f.regular_n, f.side, f.phase_deg};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Napoleon's theorem and regular-polygon extension constructions", "napoleon"};
  app.require_subcommand(1);

  double atol = ToleranceConfig{}.atol;
  double rtol = ToleranceConfig{}.rtol;
  std::string out_path;
  std::string svg_path;
  bool csv = false;
  std::string range;
  std::string mode = "auto";
  InputFlags input;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--atol", atol, "Absolute tolerance");
    cmd->add_option("--rtol", rtol, "Relative tolerance");
    cmd->add_option("--out", out_path, "Write the report here instead of stdout");
  };

  auto* napoleon = app.add_subcommand("napoleon", "Napoleon construction on a triangle");
  auto* extend = app.add_subcommand("extend", "Regular n-gons erected on a regular n-gon");
  auto* verify = app.add_subcommand("verify", "Check the theorem's claim for one input");
  auto* table = app.add_subcommand("ratio-table", "Measured vs predicted ratios over an n-range");
  auto* render = app.add_subcommand("render", "SVG figure of a construction");

  // Each input-taking subcommand owns a flag set; input_from() needs the
  // Option handles of the subcommand that actually ran.
  std::vector<InputFlags> flag_sets(4);
  CLI::App* input_cmds[] = {napoleon, extend, verify, render};
  for (std::size_t i = 0; i < 4; ++i) {
    add_common(input_cmds[i]);
    add_input_flags(*input_cmds[i], flag_sets[i]);
  }
  for (auto* cmd : {napoleon, extend, render}) {
    cmd->add_option("--svg", svg_path, "Write an SVG figure to this path");
  }
  render->add_option("--construction", mode, "auto | napoleon | extend")
      ->check(CLI::IsMember({"auto", "napoleon", "extend"}));
  add_common(table);
  table->add_option("range", range, "n-range as MIN..MAX (3..128)")->required();
  table->add_flag("--csv", csv, "Emit CSV instead of a JSON document");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return static_cast<int>(ExitCode::Ok);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::Usage);
  }

  JobSpec job;
  job.tolerance = {atol, rtol};
  job.csv = csv;
  if (!out_path.empty()) job.out_path = out_path;
  if (!svg_path.empty()) job.svg_path = svg_path;

  CLI::App* chosen = app.get_subcommands().front();
  try {
    if (chosen == table) {
      job.command = Command::RatioTable;
      std::tie(job.n_min, job.n_max) = parse_n_range(range);
    } else {
      const auto idx = static_cast<std::size_t>(
          std::find(std::begin(input_cmds), std::end(input_cmds), chosen) - std::begin(input_cmds));
      const InputFlags& flags = flag_sets[idx];
      job.command = chosen == napoleon ? Command::Napoleon
                    : chosen == extend ? Command::Extend
                    : chosen == verify ? Command::Verify
                                       : Command::Render;
      job.input = input_from(flags);
      job.side = flags.erection == "inward" ? ErectionSide::Inward : ErectionSide::Outward;
      job.render_mode = mode == "napoleon" ? RenderMode::Napoleon
                        : mode == "extend" ? RenderMode::Extend
                                           : RenderMode::Auto;
    }
  } catch (const GeometryError& e) {
    err << "usage error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::Usage);
  }

  return static_cast<int>(execute(job, out, err));
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace napoleon::cli
