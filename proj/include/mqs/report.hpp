#pragma once

// Middle-segment energy / variation comparison across point sets and
// tangent methods.

#include <cmath>
#include <cstdio>
#include <future>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "mqs/fairness.hpp"
#include "mqs/point_set.hpp"
#include "mqs/spline.hpp"

namespace mqs {

struct ReportRow {
  std::string set;
  std::string method;
  std::string params;
  double energy = 0.0;
  double variation = 0.0;
  std::string knot_convention;
  std::string status;  // "ok" or "failed: <reason>"

  bool ok() const { return status == "ok"; }
  bool operator==(const ReportRow& o) const {
    const auto same = [](double a, double b) { return a == b || (std::isnan(a) && std::isnan(b)); };
    return set == o.set && method == o.method && params == o.params && same(energy, o.energy) &&
           same(variation, o.variation) && knot_convention == o.knot_convention && status == o.status;
  }
};

struct ComparisonReport {
  std::vector<ReportRow> rows;

  bool all_ok() const {
    for (const auto& r : rows) {
      if (!r.ok()) return false;
    }
    return true;
  }
  bool operator==(const ComparisonReport&) const = default;
};

struct CompareOptions {
  KnotConvention knots = KnotConvention::Uniform;
  QuadratureConfig quadrature;
  bool parallel = true;
};

/// Index of the segment reported for an n-point set: the one between t_2 and
/// t_3 for four points.
inline std::size_t middle_segment_index(std::size_t point_count) { return (point_count - 2) / 2; }

struct SegmentMetrics {
  double energy = 0.0;
  double variation = 0.0;
};

inline SegmentMetrics segment_metrics(const HermiteSpline& spline, std::size_t index, const QuadratureConfig& cfg = {}) {
  const HermiteSegment seg = spline.segment(index);
  return {segment_energy(seg, seg.t_start, seg.t_end(), cfg), segment_variation(seg, seg.t_start, seg.t_end(), cfg)};
}

inline ReportRow compare_cell(const PointSetFile& set, const TangentMethod& method, const CompareOptions& options) {
  ReportRow row;
  row.set = set.name;
  row.method = method_name(method);
  row.params = method_params(method);
  row.knot_convention = set.knots ? "explicit" : to_string(options.knots);
  try {
    const KnotVector knots = set.knots ? *set.knots : make_knots(options.knots, set.points);
    const HermiteSpline spline = build_spline(set.points, knots, method);
    const auto m = segment_metrics(spline, middle_segment_index(set.points.size()), options.quadrature);
    row.energy = m.energy;
    row.variation = m.variation;
    row.status = "ok";
  } catch (const std::exception& e) {
    row.energy = std::nan("");
    row.variation = std::nan("");
    row.status = std::string("failed: ") + e.what();
  }
  return row;
}

/// Every (set, method) cell is evaluated independently; a failing cell is
/// recorded in its row and does not stop the others. Sets need four points.
inline ComparisonReport compare(const std::vector<PointSetFile>& sets, const std::vector<TangentMethod>& methods,
                                const CompareOptions& options = {}) {
  options.quadrature.validate();
  for (const auto& set : sets) {
    validate(set);
    if (set.points.size() < 4) {
      throw Error(ErrorKind::ValidationError, "point set '" + set.name + "' needs at least four points to compare");
    }
  }

  ComparisonReport report;
  if (options.parallel) {
    std::vector<std::future<ReportRow>> cells;
    for (const auto& set : sets) {
      for (const auto& method : methods) {
        cells.push_back(std::async(std::launch::async, compare_cell, std::cref(set), std::cref(method),
                                   std::cref(options)));
      }
    }
    for (auto& cell : cells) report.rows.push_back(cell.get());
  } else {
    for (const auto& set : sets) {
      for (const auto& method : methods) report.rows.push_back(compare_cell(set, method, options));
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Rendering

inline std::string format_number(double v, int significant) {
  if (std::isnan(v)) return "nan";
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", significant, v);
  return buf;
}

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::vector<std::string> split_csv_line(std::string_view line, std::size_t line_no) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  if (quoted) parse_error(line_no, line.size(), "unterminated quoted field");
  return fields;
}

}  // namespace detail

inline constexpr const char* kReportHeader = "set,method,params,E,V,knot_convention,status";

/// Machine-readable report; numbers carry 17 significant digits.
inline std::string render_csv(const ComparisonReport& report) {
  std::ostringstream out;
  out << kReportHeader << "\n";
  for (const auto& r : report.rows) {
    out << detail::csv_field(r.set) << ',' << detail::csv_field(r.method) << ',' << detail::csv_field(r.params) << ','
        << format_number(r.energy, 17) << ',' << format_number(r.variation, 17) << ','
        << detail::csv_field(r.knot_convention) << ',' << detail::csv_field(r.status) << "\n";
  }
  return out.str();
}

inline ComparisonReport parse_report_csv(std::string_view text) {
  ComparisonReport report;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (line_no == 1 && line == kReportHeader) continue;

    const auto f = detail::split_csv_line(line, line_no);
    if (f.size() != 7) detail::parse_error(line_no, 1, "expected 7 report fields");
    ReportRow row;
    row.set = f[0];
    row.method = f[1];
    row.params = f[2];
    const auto number = [&](const std::string& s, std::size_t column) {
      if (s == "nan") return std::nan("");
      const auto v = detail::parse_double(s);
      if (!v) detail::parse_error(line_no, column, "expected a number, got '" + s + "'");
      return *v;
    };
    row.energy = number(f[3], 4);
    row.variation = number(f[4], 5);
    row.knot_convention = f[5];
    row.status = f[6];
    report.rows.push_back(std::move(row));
  }
  return report;
}

/// Human-readable table: one column per method, E and V rows per set, four
/// significant digits.
inline std::string render_text(const ComparisonReport& report) {
  std::vector<std::string> columns;
  std::vector<std::string> sets;
  const auto label = [](const ReportRow& r) { return r.params.empty() ? r.method : r.method + " (" + r.params + ")"; };
  for (const auto& r : report.rows) {
    if (std::find(columns.begin(), columns.end(), label(r)) == columns.end()) columns.push_back(label(r));
    if (std::find(sets.begin(), sets.end(), r.set) == sets.end()) sets.push_back(r.set);
  }
  const auto cell = [&](const std::string& set, const std::string& column, bool energy) -> std::string {
    for (const auto& r : report.rows) {
      if (r.set == set && label(r) == column) {
        if (!r.ok()) return "failed";
        return format_number(energy ? r.energy : r.variation, 4);
      }
    }
    return "-";
  };

  std::vector<std::size_t> widths;
  for (const auto& c : columns) widths.push_back(std::max<std::size_t>(10, c.size() + 2));
  std::size_t first = 8;
  for (const auto& s : sets) first = std::max(first, s.size() + 5);

  std::ostringstream out;
  out << "Middle-segment energy E = int kappa^2 dt and variation V = int kappa'^2 dt,\n"
      << "integrated in the spline parameter between the two central knots.\n";
  if (!report.rows.empty()) out << "Knots: " << report.rows.front().knot_convention << "\n";
  out << "\n" << std::left << std::setw(static_cast<int>(first)) << "";
  for (std::size_t j = 0; j < columns.size(); ++j) {
    out << std::right << std::setw(static_cast<int>(widths[j])) << columns[j];
  }
  out << "\n";
  for (const auto& s : sets) {
    for (bool energy : {true, false}) {
      out << std::left << std::setw(static_cast<int>(first)) << (s + (energy ? " E:" : " V:"));
      for (std::size_t j = 0; j < columns.size(); ++j) {
        out << std::right << std::setw(static_cast<int>(widths[j])) << cell(s, columns[j], energy);
      }
      out << "\n";
    }
  }
  for (const auto& r : report.rows) {
    if (!r.ok()) out << "\n" << r.set << " / " << label(r) << ": " << r.status;
  }
  if (!report.all_ok()) out << "\n";
  return out.str();
}

}  // namespace mqs
