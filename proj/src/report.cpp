#include "napoleon/report.hpp"

#include <charconv>
#include <sstream>
#include <type_traits>

#include <json.hpp>

namespace napoleon::report {

using Json = nlohmann::ordered_json;

namespace {

[[noreturn]] void parse_failure(const std::string& message) {
  throw GeometryError(ErrorKind::Parse, message);
}

Json points_to_json(const std::vector<Point2>& pts) {
  Json arr = Json::array();
  for (const auto& p : pts) arr.push_back({p.x, p.y});
  return arr;
}

std::vector<Point2> points_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) parse_failure(where + ": expected an array of [x, y] pairs");
  std::vector<Point2> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const Json& pair = j[i];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
        !pair[1].is_number()) {
      parse_failure(where + "[" + std::to_string(i) + "]: expected [x, y] number pair");
    }
    out.push_back({pair[0].get<double>(), pair[1].get<double>()});
  }
  return out;
}

template <typename T>
void put_optional(Json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

template <typename T>
std::optional<T> get_optional(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

Json to_json(const RegularityDoc& r) {
  return Json{{"is_regular", r.is_regular},
              {"side_lengths", r.side_lengths},
              {"interior_angles_deg", r.interior_angles_deg},
              {"max_side_deviation", r.max_side_deviation},
              {"max_angle_deviation_deg", r.max_angle_deviation_deg},
              {"atol", r.atol},
              {"rtol", r.rtol}};
}

RegularityDoc regularity_from_json(const Json& j) {
  RegularityDoc r;
  r.is_regular = j.at("is_regular").get<bool>();
  r.side_lengths = j.at("side_lengths").get<std::vector<double>>();
  r.interior_angles_deg = j.at("interior_angles_deg").get<std::vector<double>>();
  r.max_side_deviation = j.at("max_side_deviation").get<double>();
  r.max_angle_deviation_deg = j.at("max_angle_deviation_deg").get<double>();
  r.atol = j.at("atol").get<double>();
  r.rtol = j.at("rtol").get<double>();
  return r;
}

Json to_json(const RatioDoc& r) {
  return Json{{"base_side", r.base_side},
              {"discovered_side", r.discovered_side},
              {"ratio", r.ratio},
              {"predicted_ratio", r.predicted_ratio},
              {"abs_error", r.abs_error}};
}

RatioDoc ratio_from_json(const Json& j) {
  return {j.at("base_side").get<double>(), j.at("discovered_side").get<double>(),
          j.at("ratio").get<double>(), j.at("predicted_ratio").get<double>(),
          j.at("abs_error").get<double>()};
}

Json to_json(const NapoleonReport& r) {
  Json j{{"command", "napoleon"},
         {"erection", r.erection},
         {"base", points_to_json(r.base)},
         {"discovered", points_to_json(r.discovered)},
         {"discovered_sides", r.discovered_sides}};
  put_optional(j, "formula_side", r.formula_side);
  put_optional(j, "max_formula_deviation", r.max_formula_deviation);
  put_optional(j, "formula_matches", r.formula_matches);
  j["regularity"] = to_json(r.regularity);
  return j;
}

Json to_json(const ExtendReport& r) {
  return Json{{"command", "extend"},
              {"n", r.n},
              {"erection", r.erection},
              {"base", points_to_json(r.base)},
              {"discovered", points_to_json(r.discovered)},
              {"ratio", to_json(r.ratio)},
              {"regularity", to_json(r.regularity)}};
}

Json to_json(const VerifyReport& r) {
  Json j{{"command", "verify"}, {"claim", r.claim}, {"holds", r.holds},
         {"regularity", to_json(r.regularity)}};
  put_optional(j, "formula_side", r.formula_side);
  put_optional(j, "max_formula_deviation", r.max_formula_deviation);
  if (r.ratio) j["ratio"] = to_json(*r.ratio);
  return j;
}

Json to_json(const RatioTable& t) {
  Json rows = Json::array();
  for (const auto& row : t.rows) {
    rows.push_back(Json{{"n", row.n},
                        {"measured_ratio", row.measured_ratio},
                        {"predicted_ratio", row.predicted_ratio},
                        {"abs_error", row.abs_error}});
  }
  return Json{{"command", "ratio-table"}, {"rows", std::move(rows)}};
}

Json to_json(const ErrorReport& e) {
  Json j{{"command", "error"}, {"error", e.error}, {"message", e.message}};
  if (e.regularity) j["regularity"] = to_json(*e.regularity);
  return j;
}

Document document_from_json(const Json& j) {
  const auto command = j.at("command").get<std::string>();
  if (command == "napoleon") {
    NapoleonReport r;
    r.erection = j.at("erection").get<std::string>();
    r.base = points_from_json(j.at("base"), "base");
    r.discovered = points_from_json(j.at("discovered"), "discovered");
    r.discovered_sides = j.at("discovered_sides").get<std::vector<double>>();
    r.formula_side = get_optional<double>(j, "formula_side");
    r.max_formula_deviation = get_optional<double>(j, "max_formula_deviation");
    r.formula_matches = get_optional<bool>(j, "formula_matches");
    r.regularity = regularity_from_json(j.at("regularity"));
    return r;
  }
  if (command == "extend") {
    ExtendReport r;
    r.n = j.at("n").get<int>();
    r.erection = j.at("erection").get<std::string>();
    r.base = points_from_json(j.at("base"), "base");
    r.discovered = points_from_json(j.at("discovered"), "discovered");
    r.ratio = ratio_from_json(j.at("ratio"));
    r.regularity = regularity_from_json(j.at("regularity"));
    return r;
  }
  if (command == "verify") {
    VerifyReport r;
    r.claim = j.at("claim").get<std::string>();
    r.holds = j.at("holds").get<bool>();
    r.regularity = regularity_from_json(j.at("regularity"));
    r.formula_side = get_optional<double>(j, "formula_side");
    r.max_formula_deviation = get_optional<double>(j, "max_formula_deviation");
    if (j.contains("ratio")) r.ratio = ratio_from_json(j.at("ratio"));
    return r;
  }
  if (command == "ratio-table") {
    RatioTable t;
    for (const auto& row : j.at("rows")) {
      t.rows.push_back({row.at("n").get<int>(), row.at("measured_ratio").get<double>(),
                        row.at("predicted_ratio").get<double>(),
                        row.at("abs_error").get<double>()});
    }
    return t;
  }
  if (command == "error") {
    ErrorReport e;
    e.error = j.at("error").get<std::string>();
    e.message = j.at("message").get<std::string>();
    if (j.contains("regularity")) e.regularity = regularity_from_json(j.at("regularity"));
    return e;
  }
  parse_failure("unknown document command '" + command + "'");
}

std::string position_of(std::string_view text, std::size_t byte) {
  // nlohmann reports the 1-based offset of the last character read.
  const std::size_t offset = std::min(byte == 0 ? 0 : byte - 1, text.size());
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    parse_failure("malformed JSON at " + position_of(text, e.byte));
  }
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

template <typename T>
bool parse_whole(std::string_view s, T& out) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size() && !s.empty();
}

}  // namespace

RegularityDoc RegularityDoc::from(const RegularityReport& r) {
  RegularityDoc d;
  d.is_regular = r.is_regular;
  d.side_lengths = r.side_lengths;
  for (double a : r.interior_angles) d.interior_angles_deg.push_back(radians_to_degrees(a));
  d.max_side_deviation = r.max_side_deviation;
  d.max_angle_deviation_deg = radians_to_degrees(r.max_angle_deviation);
  d.atol = r.tolerance_used.atol;
  d.rtol = r.tolerance_used.rtol;
  return d;
}

RatioDoc RatioDoc::from(const RatioMeasurement& m) {
  return {m.base_side, m.discovered_side, m.ratio, m.predicted_ratio, m.abs_error};
}

std::string write_document(const Document& doc) {
  const Json j = std::visit([](const auto& d) { return to_json(d); }, doc);
  return j.dump(2) + "\n";
}

Document read_document(std::string_view text) {
  const Json j = parse_json(text);
  try {
    return document_from_json(j);
  } catch (const Json::exception& e) {
    parse_failure(std::string("invalid report document: ") + e.what());
  }
}

std::string format_number(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

std::string write_ratio_csv(const RatioTable& table) {
  std::string out = "n,measured_ratio,predicted_ratio,abs_error\n";
  for (const auto& row : table.rows) {
    out += std::to_string(row.n) + "," + format_number(row.measured_ratio) + "," +
           format_number(row.predicted_ratio) + "," + format_number(row.abs_error) + "\n";
  }
  return out;
}

RatioTable read_ratio_csv(std::string_view text) {
  RatioTable table;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line_no == 1) {
      if (line != "n,measured_ratio,predicted_ratio,abs_error") {
        parse_failure("line 1: unexpected CSV header");
      }
      continue;
    }
    if (line.empty()) continue;

    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      fields.push_back(line.substr(start, comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    RatioRow row;
    if (fields.size() != 4 || !parse_whole(fields[0], row.n) ||
        !parse_whole(fields[1], row.measured_ratio) ||
        !parse_whole(fields[2], row.predicted_ratio) ||
        !parse_whole(fields[3], row.abs_error)) {
      parse_failure("line " + std::to_string(line_no) + ": malformed CSV row");
    }
    table.rows.push_back(row);
  }
  if (line_no == 0) parse_failure("empty CSV document");
  return table;
}

std::vector<Point2> read_vertices_document(std::string_view text) {
  const Json j = parse_json(text);
  if (!j.is_object() || !j.contains("vertices")) {
    parse_failure("expected an object with a \"vertices\" array");
  }
  return points_from_json(j.at("vertices"), "vertices");
}

std::vector<Point2> parse_inline_vertices(std::string_view text) {
  std::vector<Point2> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view item = text.substr(start, end - start);
    if (!trim(item).empty()) {
      const auto comma = item.find(',');
      Point2 p;
      if (comma == std::string_view::npos || !parse_whole(item.substr(0, comma), p.x) ||
          !parse_whole(item.substr(comma + 1), p.y)) {
        parse_failure("malformed vertex \"" + std::string(trim(item)) + "\" at position " +
                      std::to_string(start + 1));
      }
      out.push_back(p);
    }
    start = end + 1;
  }
  if (out.empty()) parse_failure("no vertices given");
  return out;
}

}  // namespace napoleon::report
