#pragma once

// Point-set files. Two formats are accepted:
//   CSV  - one "x,y" pair per line, optional header line, LF or CRLF.
//   JSON - {"name": "...", "points": [[x, y], ...], "knots": [...]}.

#include <charconv>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mqs/geometry.hpp"
#include "mqs/spline.hpp"

namespace mqs {

struct PointSetFile {
  std::string name;
  std::vector<Point2> points;
  std::optional<KnotVector> knots;
};

enum class PointFormat { Auto, Csv, Json };

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

inline std::optional<double> parse_double(std::string_view token) {
  token = trim(token);
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) return std::nullopt;
  return value;
}

[[noreturn]] inline void parse_error(std::size_t line, std::size_t column, const std::string& what) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

}  // namespace detail

/// Checks the point-set invariants: at least two finite points, and knots (if
/// any) strictly increasing with one value per point.
inline void validate(const PointSetFile& set) {
  if (set.points.size() < 2) {
    throw Error(ErrorKind::ValidationError, "point set '" + set.name + "' has fewer than two points");
  }
  for (const auto& p : set.points) {
    if (!is_finite(p)) throw Error(ErrorKind::ValidationError, "point set '" + set.name + "' has a non-finite coordinate");
  }
  if (set.knots && set.knots->size() != set.points.size()) {
    throw Error(ErrorKind::ValidationError, "point set '" + set.name + "' has a knot count different from its point count");
  }
}

inline PointSetFile parse_csv_points(std::string_view text, std::string name = "points") {
  if (text.size() >= 3 && text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);

  PointSetFile set;
  set.name = std::move(name);
  std::size_t line_no = 0;
  bool first_content_line = true;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (detail::trim(line).empty()) continue;

    const auto comma = line.find(',');
    const std::string_view xs = line.substr(0, comma);
    const std::string_view ys = comma == std::string_view::npos ? std::string_view{} : line.substr(comma + 1);
    const auto x = detail::parse_double(xs);
    const auto y = detail::parse_double(ys);

    const bool header = first_content_line && !x && !detail::parse_double(ys.substr(0, ys.find(',')));
    first_content_line = false;
    if (header) continue;

    if (comma == std::string_view::npos) detail::parse_error(line_no, line.size() + 1, "expected 'x,y'");
    if (ys.find(',') != std::string_view::npos) {
      detail::parse_error(line_no, comma + 2 + ys.find(','), "expected exactly two fields");
    }
    if (!x) {
      detail::parse_error(line_no, 1, "expected a number, got '" + std::string(detail::trim(xs)) + "'");
    }
    if (!y) {
      detail::parse_error(line_no, comma + 2, "expected a number, got '" + std::string(detail::trim(ys)) + "'");
    }
    set.points.emplace_back(*x, *y);
  }
  validate(set);
  return set;
}

inline PointSetFile parse_json_points(std::string_view text, std::string fallback_name = "points") {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }

  PointSetFile set;
  try {
    if (!doc.is_object()) throw Error(ErrorKind::ParseError, "expected a JSON object at top level");
    set.name = doc.value("name", fallback_name);
    if (!doc.contains("points") || !doc["points"].is_array()) {
      throw Error(ErrorKind::ParseError, "missing 'points' array");
    }
    std::size_t index = 0;
    for (const auto& entry : doc["points"]) {
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number()) {
        throw Error(ErrorKind::ParseError, "points[" + std::to_string(index) + "] must be an [x, y] pair of numbers");
      }
      set.points.emplace_back(entry[0].get<double>(), entry[1].get<double>());
      ++index;
    }
    if (doc.contains("knots") && !doc["knots"].is_null()) {
      if (!doc["knots"].is_array()) throw Error(ErrorKind::ParseError, "'knots' must be an array of numbers");
      std::vector<double> knots;
      for (const auto& k : doc["knots"]) {
        if (!k.is_number()) throw Error(ErrorKind::ParseError, "'knots' must be an array of numbers");
        knots.push_back(k.get<double>());
      }
      try {
        set.knots = KnotVector(std::move(knots));
      } catch (const Error& e) {
        throw Error(ErrorKind::ValidationError, e.what());
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  validate(set);
  return set;
}

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IOError, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline PointSetFile load_point_set(const std::filesystem::path& path, PointFormat format = PointFormat::Auto) {
  if (format == PointFormat::Auto) {
    format = path.extension() == ".json" ? PointFormat::Json : PointFormat::Csv;
  }
  const std::string text = read_text_file(path);
  const std::string stem = path.stem().string();
  return format == PointFormat::Json ? parse_json_points(text, stem) : parse_csv_points(text, stem);
}

/// The four-point benchmark sets of the published comparison.
inline std::vector<PointSetFile> builtin_point_sets() {
  return {
      {"set1", {{0, 0}, {1, 3}, {2, 1}, {3, 2}}, std::nullopt},
      {"set2", {{0, 0}, {0, 3}, {3, 3}, {3, 0}}, std::nullopt},
      {"set3", {{0, 0}, {1, 0}, {2, 0}, {3, 3}}, std::nullopt},
      {"set4", {{0, 0}, {1, 0}, {2, 1}, {3, 3}}, std::nullopt},
  };
}

inline constexpr std::string_view kBuiltinPrefix = "builtin:";

/// Loads a file, or one of the benchmark sets when given "builtin:setN".
inline PointSetFile resolve_point_set(const std::string& source, PointFormat format = PointFormat::Auto) {
  if (std::string_view(source).substr(0, kBuiltinPrefix.size()) == kBuiltinPrefix) {
    const std::string wanted = source.substr(kBuiltinPrefix.size());
    for (auto& set : builtin_point_sets()) {
      if (set.name == wanted) return set;
    }
    throw Error(ErrorKind::ValidationError, "unknown built-in point set '" + wanted + "'");
  }
  return load_point_set(source, format);
}

}  // namespace mqs
