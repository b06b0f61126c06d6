#pragma once

// SVG 1.1 rendering of a point set and its spline.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "mqs/spline.hpp"

namespace mqs {

struct PlotOptions {
  int samples_per_segment = 64;
  bool tangents = false;
  bool highlight_middle = true;
  double padding = 40.0;
  double extent = 480.0;  // pixels spanned by the larger data dimension
};

namespace detail {

inline std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

inline std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Bounds {
  double xmin = std::numeric_limits<double>::infinity();
  double xmax = -std::numeric_limits<double>::infinity();
  double ymin = std::numeric_limits<double>::infinity();
  double ymax = -std::numeric_limits<double>::infinity();

  void add(const Point2& p) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
};

}  // namespace detail

/// Arrow drawn for the tangent at point i: v scaled by half the mean
/// adjacent knot spacing.
inline Point2 tangent_arrow_tip(const HermiteSpline& spline, std::size_t i) {
  const auto& k = spline.knots();
  const std::size_t n = k.size();
  double spacing = 0.0;
  int count = 0;
  if (i > 0) spacing += k[i] - k[i - 1], ++count;
  if (i + 1 < n) spacing += k[i + 1] - k[i], ++count;
  return spline.points()[i] + spline.tangents()[i] * (0.5 * spacing / count);
}

/// Control points as circles, one polyline per segment, optional tangent
/// arrows at interior points. The y axis points up. Output depends only on
/// the inputs.
inline std::string render_svg(const HermiteSpline& spline, const std::string& title, const PlotOptions& opt = {}) {
  const int samples = std::max(opt.samples_per_segment, 2);
  const std::size_t n = spline.points().size();

  std::vector<std::vector<Point2>> polylines;
  detail::Bounds box;
  for (std::size_t s = 0; s < spline.segment_count(); ++s) {
    const HermiteSegment seg = spline.segment(s);
    std::vector<Point2> line;
    line.reserve(static_cast<std::size_t>(samples) + 1);
    for (int j = 0; j <= samples; ++j) {
      const double u = static_cast<double>(j) / samples;
      line.push_back(hermite_eval(seg.pa, seg.pb, seg.va * seg.span, seg.vb * seg.span, u));
      box.add(line.back());
    }
    polylines.push_back(std::move(line));
  }
  for (const auto& p : spline.points()) box.add(p);
  std::vector<std::pair<Point2, Point2>> arrows;
  if (opt.tangents) {
    for (std::size_t i = 1; i + 1 < n; ++i) {
      arrows.emplace_back(spline.points()[i], tangent_arrow_tip(spline, i));
      box.add(arrows.back().second);
    }
  }

  const double span = std::max({box.xmax - box.xmin, box.ymax - box.ymin, 1e-300});
  const double scale = opt.extent / span;
  const double width = (box.xmax - box.xmin) * scale + 2.0 * opt.padding;
  const double height = (box.ymax - box.ymin) * scale + 2.0 * opt.padding;
  const auto X = [&](double x) { return detail::px(opt.padding + (x - box.xmin) * scale); };
  const auto Y = [&](double y) { return detail::px(opt.padding + (box.ymax - y) * scale); };

  const bool highlight = opt.highlight_middle && n >= 4;
  const std::size_t middle = (n - 2) / 2;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << detail::px(width) << "\" height=\""
      << detail::px(height) << "\" viewBox=\"0 0 " << detail::px(width) << ' ' << detail::px(height) << "\">\n"
      << "<title>" << detail::xml_escape(title) << " (" << method_name(spline.method()) << ")</title>\n";
  if (opt.tangents) {
    out << "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"6\" "
           "markerHeight=\"6\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"#1f6f3f\"/></marker></defs>\n";
  }
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t s = 0; s < polylines.size(); ++s) {
    const bool mid = highlight && s == middle;
    out << "<polyline class=\"segment" << (mid ? " middle" : "") << "\" fill=\"none\" stroke=\""
        << (mid ? "#d62728" : "#1f3f8f") << "\" stroke-width=\"2\" points=\"";
    for (std::size_t j = 0; j < polylines[s].size(); ++j) {
      out << (j ? " " : "") << X(polylines[s][j].x) << ',' << Y(polylines[s][j].y);
    }
    out << "\"/>\n";
  }
  for (const auto& [from, to] : arrows) {
    out << "<line class=\"tangent\" x1=\"" << X(from.x) << "\" y1=\"" << Y(from.y) << "\" x2=\"" << X(to.x)
        << "\" y2=\"" << Y(to.y) << "\" stroke=\"#1f6f3f\" stroke-width=\"1.5\" marker-end=\"url(#arrow)\"/>\n";
  }
  for (const auto& p : spline.points()) {
    out << "<circle class=\"control-point\" cx=\"" << X(p.x) << "\" cy=\"" << Y(p.y)
        << "\" r=\"4\" fill=\"black\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

inline void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::IOError, "cannot write '" + path.string() + "'");
  out << content;
  if (!out) throw Error(ErrorKind::IOError, "write to '" + path.string() + "' failed");
}

}  // namespace mqs
