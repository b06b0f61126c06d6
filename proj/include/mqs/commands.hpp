#pragma once

// Command implementations behind the `mqs` executable. Each returns the
// process exit status: 0 success, 1 numerical/internal failure, 2 invalid
// input.

#include <array>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "mqs/minquad.hpp"
#include "mqs/point_set.hpp"
#include "mqs/report.hpp"
#include "mqs/spline.hpp"
#include "mqs/svg.hpp"

namespace mqs {

enum class OutputFormat { Text, Csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInvalidInput = 2;

inline int exit_status_for(const std::exception& e) {
  if (const auto* err = dynamic_cast<const Error*>(&e)) {
    return is_input_error(err->kind()) ? kExitInvalidInput : kExitFailure;
  }
  return kExitFailure;
}

/// Runs `body`, reporting any exception on `err` and mapping it to an exit
/// status.
inline int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    err << "mqs: " << e.what() << "\n";
    return exit_status_for(e);
  }
}

/// "x,y" -> Point2.
inline Point2 parse_point(const std::string& text) {
  const auto comma = text.find(',');
  const auto x = comma == std::string::npos ? std::nullopt : detail::parse_double(std::string_view(text).substr(0, comma));
  const auto y = comma == std::string::npos ? std::nullopt : detail::parse_double(std::string_view(text).substr(comma + 1));
  if (!x || !y) throw Error(ErrorKind::ParseError, "expected a point 'x,y', got '" + text + "'");
  return {*x, *y};
}

/// Method specifications:
///   min-energy | ours
///   catmull-rom | cr
///   cardinal[:tau]
///   kochanek-bartels[:tau,bias,continuity] | kb[:...]
inline TangentMethod parse_method(const std::string& text) {
  const auto colon = text.find(':');
  const std::string name = text.substr(0, colon);
  std::vector<double> args;
  if (colon != std::string::npos) {
    std::string_view rest = std::string_view(text).substr(colon + 1);
    while (true) {
      const auto comma = rest.find(',');
      const auto v = detail::parse_double(rest.substr(0, comma));
      if (!v) throw Error(ErrorKind::ParseError, "bad numeric parameter in method '" + text + "'");
      args.push_back(*v);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
  }
  const auto expect_at_most = [&](std::size_t n) {
    if (args.size() > n) throw Error(ErrorKind::ParseError, "too many parameters in method '" + text + "'");
  };
  TangentMethod method;
  if (name == "min-energy" || name == "ours") {
    expect_at_most(0);
    method = MinEnergyQuad{};
  } else if (name == "catmull-rom" || name == "cr") {
    expect_at_most(0);
    method = CatmullRom{};
  } else if (name == "cardinal") {
    expect_at_most(1);
    method = Cardinal{args.empty() ? 0.0 : args[0]};
  } else if (name == "kochanek-bartels" || name == "kb") {
    expect_at_most(3);
    args.resize(3, 0.0);
    method = KochanekBartels{args[0], args[1], args[2]};
  } else {
    throw Error(ErrorKind::ParseError, "unknown tangent method '" + name + "'");
  }
  validate(method);
  return method;
}

inline KnotConvention parse_knot_convention(const std::string& s) {
  if (s == "uniform") return KnotConvention::Uniform;
  if (s == "chord") return KnotConvention::Chord;
  throw Error(ErrorKind::ParseError, "knot convention must be 'uniform' or 'chord', got '" + s + "'");
}

// ---------------------------------------------------------------------------
// solve

struct SolveReport {
  std::array<Point2, 3> points;
  Point2 q2;
  CubicRoots cubic;
  MinQuadSolution solution;
  Vector2 tangent;
  ArcLength arc_length;
};

inline SolveReport solve_triple(const Point2& p1, const Point2& p2, const Point2& p3, const QuadratureConfig& cfg = {}) {
  SolveReport r;
  r.points = {p1, p2, p3};
  r.solution = build_solution(p1, p2, p3);
  r.q2 = r.solution.frame.q2;
  r.cubic = cubic_roots(r.q2);
  r.tangent = tangent_at_p2(r.solution);
  r.arc_length = arc_length_closed(r.solution, cfg);
  return r;
}

inline void print_solve(const SolveReport& r, OutputFormat format, std::ostream& out) {
  const auto& c = r.solution.curve;
  if (format == OutputFormat::Csv) {
    const auto num = [](double v) { return format_number(v, 17); };
    out << "field,value\n";
    out << "q2_x," << num(r.q2.x) << "\nq2_y," << num(r.q2.y) << "\n";
    out << "beta," << num(r.cubic.beta) << "\ngamma," << num(r.cubic.gamma) << "\n";
    for (int i = 0; i < 3; ++i) out << "root" << i + 1 << ',' << num(r.cubic.roots[i]) << "\n";
    out << "T," << num(r.solution.T) << "\n";
    out << "a1_x," << num(c.a1.x) << "\na1_y," << num(c.a1.y) << "\n";
    out << "a2_x," << num(c.a2.x) << "\na2_y," << num(c.a2.y) << "\n";
    out << "a3_x," << num(c.a3.x) << "\na3_y," << num(c.a3.y) << "\n";
    out << "tangent_x," << num(r.tangent.x) << "\ntangent_y," << num(r.tangent.y) << "\n";
    out << "arc_length," << num(r.arc_length.value) << "\n";
    out << "arc_length_closed_form," << (r.arc_length.closed_form ? 1 : 0) << "\n";
    out << "objective," << num(r.solution.objective) << "\n";
    return;
  }
  const auto num = [](double v) { return format_number(v, 10); };
  const auto vec = [&](double x, double y) { return "(" + num(x) + ", " + num(y) + ")"; };
  out << "points       " << vec(r.points[0].x, r.points[0].y) << " " << vec(r.points[1].x, r.points[1].y) << " "
      << vec(r.points[2].x, r.points[2].y) << "\n";
  out << "canonical q2 " << vec(r.q2.x, r.q2.y) << "\n";
  out << "beta         " << num(r.cubic.beta) << "\n";
  out << "gamma        " << num(r.cubic.gamma) << "\n";
  out << "roots        " << num(r.cubic.roots[0]) << " " << num(r.cubic.roots[1]) << " " << num(r.cubic.roots[2]) << "\n";
  out << "T            " << num(r.solution.T) << "\n";
  out << "a1           " << vec(c.a1.x, c.a1.y) << "\n";
  out << "a2           " << vec(c.a2.x, c.a2.y) << "\n";
  out << "a3           " << vec(c.a3.x, c.a3.y) << "\n";
  out << "tangent @p2  " << vec(r.tangent.x, r.tangent.y) << "\n";
  out << "arc length   " << num(r.arc_length.value) << (r.arc_length.closed_form ? "" : " (quadrature fallback)")
      << "\n";
}

inline int cmd_solve(const std::array<std::string, 3>& points, OutputFormat format, const QuadratureConfig& cfg,
                     std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    cfg.validate();
    const SolveReport r = solve_triple(parse_point(points[0]), parse_point(points[1]), parse_point(points[2]), cfg);
    print_solve(r, format, out);
    return kExitOk;
  });
}

// ---------------------------------------------------------------------------
// compare

struct CompareRequest {
  std::vector<std::string> sources;  // paths or builtin:setN
  std::vector<std::string> methods;  // parse_method specs
  bool preset_table1 = false;
  CompareOptions options;
  OutputFormat format = OutputFormat::Text;
};

inline int cmd_compare(const CompareRequest& req, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::vector<PointSetFile> sets;
    for (const auto& s : req.sources) sets.push_back(resolve_point_set(s));
    std::vector<TangentMethod> methods;
    for (const auto& m : req.methods) methods.push_back(parse_method(m));
    if (req.preset_table1) {
      if (sets.empty()) sets = builtin_point_sets();
      const auto preset = table1_methods();
      methods.insert(methods.begin(), preset.begin(), preset.end());
    }
    if (sets.empty()) throw Error(ErrorKind::ValidationError, "no point sets given");
    if (methods.empty()) throw Error(ErrorKind::ValidationError, "no tangent methods given");

    const ComparisonReport report = compare(sets, methods, req.options);
    out << (req.format == OutputFormat::Csv ? render_csv(report) : render_text(report));
    if (!report.all_ok()) {
      err << "mqs: some cells failed; see the status column\n";
      return kExitFailure;
    }
    return kExitOk;
  });
}

// ---------------------------------------------------------------------------
// plot

struct PlotRequest {
  std::string source;
  std::string method = "min-energy";
  std::string output;  // "-" writes to the output stream
  KnotConvention knots = KnotConvention::Uniform;
  PlotOptions options;
};

inline std::string plot_svg(const PointSetFile& set, const TangentMethod& method, KnotConvention knots,
                            const PlotOptions& options) {
  const KnotVector kv = set.knots ? *set.knots : make_knots(knots, set.points);
  return render_svg(build_spline(set.points, kv, method), set.name, options);
}

inline int cmd_plot(const PlotRequest& req, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (req.options.samples_per_segment < 64) {
      throw Error(ErrorKind::ValidationError, "at least 64 samples per segment are required");
    }
    const PointSetFile set = resolve_point_set(req.source);
    const std::string svg = plot_svg(set, parse_method(req.method), req.knots, req.options);
    if (req.output.empty() || req.output == "-") {
      out << svg;
    } else {
      write_text_file(req.output, svg);
    }
    return kExitOk;
  });
}

}  // namespace mqs
