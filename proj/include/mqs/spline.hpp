#pragma once

// Cubic Hermite splines through ordered point sets with interchangeable
// tangent rules.

#include <algorithm>
#include <cstdio>
#include <span>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "mqs/curves.hpp"
#include "mqs/geometry.hpp"
#include "mqs/minquad.hpp"

namespace mqs {

// ---------------------------------------------------------------------------
// Tangent methods

struct MinEnergyQuad {};
struct CatmullRom {};
struct Cardinal {
  double tension = 0.0;
};
struct KochanekBartels {
  double tension = 0.0;
  double bias = 0.0;
  double continuity = 0.0;
};

using TangentMethod = std::variant<MinEnergyQuad, CatmullRom, Cardinal, KochanekBartels>;

inline std::string method_name(const TangentMethod& m) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, MinEnergyQuad>) return "min-energy";
        else if constexpr (std::is_same_v<T, CatmullRom>) return "catmull-rom";
        else if constexpr (std::is_same_v<T, Cardinal>) return "cardinal";
        else return "kochanek-bartels";
      },
      m);
}

namespace detail {
inline std::string short_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}
}  // namespace detail

/// Parameter listing without commas, e.g. "tau=0.5" or "tau=0;beta=0.5;gamma=0".
inline std::string method_params(const TangentMethod& m) {
  using detail::short_number;
  if (const auto* c = std::get_if<Cardinal>(&m)) return "tau=" + short_number(c->tension);
  if (const auto* kb = std::get_if<KochanekBartels>(&m)) {
    return "tau=" + short_number(kb->tension) + ";beta=" + short_number(kb->bias) +
           ";gamma=" + short_number(kb->continuity);
  }
  return "";
}

inline void validate(const TangentMethod& m) {
  const bool ok = std::visit(
      [](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Cardinal>) return std::isfinite(v.tension);
        else if constexpr (std::is_same_v<T, KochanekBartels>)
          return std::isfinite(v.tension) && std::isfinite(v.bias) && std::isfinite(v.continuity);
        else return true;
      },
      m);
  if (!ok) throw Error(ErrorKind::ValidationError, "tangent method parameters must be finite");
}

/// Cardinal spline with tension 0.5, as drawn in the method comparison figure.
inline TangentMethod figure_cardinal() { return Cardinal{0.5}; }
/// Kochanek-Bartels with tension and continuity 0 and bias 0.5.
inline TangentMethod figure_kochanek_bartels() { return KochanekBartels{0.0, 0.5, 0.0}; }

/// Column order of the published comparison table.
inline std::vector<TangentMethod> table1_methods() {
  return {MinEnergyQuad{}, CatmullRom{}, Cardinal{0.1}, Cardinal{0.5},
          KochanekBartels{0.0, 0.5, 0.0}, KochanekBartels{0.0, -0.5, 0.0}};
}

// ---------------------------------------------------------------------------
// Knots

class KnotVector {
 public:
  KnotVector() = default;

  explicit KnotVector(std::vector<double> values) : values_(std::move(values)) {
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (!std::isfinite(values_[i])) throw Error(ErrorKind::InvalidKnots, "knot values must be finite");
      if (i > 0 && !(values_[i] > values_[i - 1])) {
        throw Error(ErrorKind::InvalidKnots, "knot values must be strictly increasing");
      }
    }
  }

  /// t_i = i for i = 0, 1, ..., n - 1.
  static KnotVector uniform(std::size_t n) {
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<double>(i);
    return KnotVector(std::move(v));
  }

  /// Cumulative chord length starting at 0.
  static KnotVector chord_length(std::span<const Point2> points) {
    std::vector<double> v(points.size(), 0.0);
    for (std::size_t i = 1; i < points.size(); ++i) v[i] = v[i - 1] + distance(points[i - 1], points[i]);
    return KnotVector(std::move(v));
  }

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  const std::vector<double>& values() const { return values_; }

 private:
  std::vector<double> values_;
};

enum class KnotConvention { Uniform, Chord };

inline const char* to_string(KnotConvention k) { return k == KnotConvention::Uniform ? "uniform" : "chord"; }

inline KnotVector make_knots(KnotConvention k, std::span<const Point2> points) {
  return k == KnotConvention::Uniform ? KnotVector::uniform(points.size()) : KnotVector::chord_length(points);
}

// ---------------------------------------------------------------------------
// Tangent rules

inline Vector2 tangent_catmull_rom(const Point2& p_prev, const Point2& p_next, double t_prev, double t_next) {
  return (p_next - p_prev) / (t_next - t_prev);
}

inline Vector2 tangent_cardinal(const Point2& p_prev, const Point2& p_next, double t_prev, double t_next,
                                double tension) {
  return (p_next - p_prev) / (t_next - t_prev) * (1.0 - tension);
}

/// Kochanek-Bartels tangent in its unscaled form: no knot-span divisor.
inline Vector2 tangent_kochanek_bartels(const Point2& p_prev, const Point2& p_i, const Point2& p_next,
                                        double tension, double bias, double continuity) {
  const double incoming = (1.0 - tension) * (1.0 + bias) * (1.0 + continuity) / 2.0;
  const double outgoing = (1.0 - tension) * (1.0 - bias) * (1.0 - continuity) / 2.0;
  // Same sum regrouped; with equal weights it rounds exactly like the
  // Catmull-Rom chord.
  return (p_next - p_prev) * outgoing + (p_i - p_prev) * (incoming - outgoing);
}

/// Tangent of the minimum-energy quadratic through the triple at its middle
/// point, divided by the knot span. Throws CollinearPoints or
/// CoincidentEndpoints on degenerate triples.
inline Vector2 tangent_min_energy(const Point2& p_prev, const Point2& p_i, const Point2& p_next, double t_prev,
                                  double t_next) {
  return tangent_at_p2(build_solution(p_prev, p_i, p_next)) / (t_next - t_prev);
}

// ---------------------------------------------------------------------------
// Hermite basis

/// (2t^3 - 3t^2 + 1) pa + (-2t^3 + 3t^2) pb + (t^3 - 2t^2 + t) va + (t^3 - t^2) vb.
inline Point2 hermite_eval(const Point2& pa, const Point2& pb, const Vector2& va, const Vector2& vb, double t) {
  const double t2 = t * t;
  const double t3 = t2 * t;
  const Vector2 r = pa.vec() * (2.0 * t3 - 3.0 * t2 + 1.0) + pb.vec() * (-2.0 * t3 + 3.0 * t2) +
                    va * (t3 - 2.0 * t2 + t) + vb * (t3 - t2);
  return Point2::from(r);
}

/// k-th derivative (k = 1, 2, 3) of hermite_eval with respect to t.
inline Vector2 hermite_derivative(const Point2& pa, const Point2& pb, const Vector2& va, const Vector2& vb,
                                  double t, int k) {
  double w[4];
  switch (k) {
    case 1: w[0] = 6 * t * t - 6 * t; w[1] = -w[0]; w[2] = 3 * t * t - 4 * t + 1; w[3] = 3 * t * t - 2 * t; break;
    case 2: w[0] = 12 * t - 6; w[1] = -w[0]; w[2] = 6 * t - 4; w[3] = 6 * t - 2; break;
    case 3: w[0] = 12; w[1] = -12; w[2] = 6; w[3] = 6; break;
    default: return {};
  }
  return pa.vec() * w[0] + pb.vec() * w[1] + va * w[2] + vb * w[3];
}

/// One spline segment as a curve in the global knot parameter
/// t in [t_start, t_start + span]. Tangents are global-parameter derivatives,
/// so the local Hermite tangents are span * v.
struct HermiteSegment {
  Point2 pa;
  Point2 pb;
  Vector2 va;
  Vector2 vb;
  double t_start = 0.0;
  double span = 1.0;

  double t_end() const { return t_start + span; }
  double local(double t) const { return (t - t_start) / span; }

  Point2 position(double t) const { return hermite_eval(pa, pb, va * span, vb * span, local(t)); }
  Vector2 first(double t) const { return derivative(t, 1) / span; }
  Vector2 second(double t) const { return derivative(t, 2) / (span * span); }
  Vector2 third(double t) const { return derivative(t, 3) / (span * span * span); }

 private:
  Vector2 derivative(double t, int k) const {
    return hermite_derivative(pa, pb, va * span, vb * span, local(t), k);
  }
};

static_assert(CurveEvaluator<HermiteSegment>);

// ---------------------------------------------------------------------------
// Spline

class HermiteSpline {
 public:
  HermiteSpline(std::vector<Point2> points, KnotVector knots, std::vector<Vector2> tangents, TangentMethod method)
      : points_(std::move(points)), knots_(std::move(knots)), tangents_(std::move(tangents)), method_(method) {
    if (points_.size() < 2) throw Error(ErrorKind::TooFewPoints, "a spline needs at least two points");
    if (knots_.size() != points_.size() || tangents_.size() != points_.size()) {
      throw Error(ErrorKind::InvalidKnots, "points, knots and tangents must have equal lengths");
    }
  }

  const std::vector<Point2>& points() const { return points_; }
  const KnotVector& knots() const { return knots_; }
  const std::vector<Vector2>& tangents() const { return tangents_; }
  const TangentMethod& method() const { return method_; }

  std::size_t segment_count() const { return points_.size() - 1; }

  /// Segment i (0-based) spans [knots[i], knots[i + 1]].
  HermiteSegment segment(std::size_t i) const {
    if (i >= segment_count()) throw Error(ErrorKind::IndexOutOfRange, "segment index out of range");
    return {points_[i], points_[i + 1], tangents_[i], tangents_[i + 1], knots_[i], knots_[i + 1] - knots_[i]};
  }

  /// Position at global parameter t, clamped to the knot range.
  Point2 evaluate(double t) const {
    const auto& k = knots_.values();
    if (t <= k.front()) return points_.front();
    if (t >= k.back()) return points_.back();
    const auto it = std::upper_bound(k.begin(), k.end(), t);
    const auto i = static_cast<std::size_t>(it - k.begin()) - 1;
    return segment(i).position(t);
  }

 private:
  std::vector<Point2> points_;
  KnotVector knots_;
  std::vector<Vector2> tangents_;
  TangentMethod method_;
};

inline HermiteSegment spline_segment_evaluator(const HermiteSpline& s, std::size_t i) { return s.segment(i); }

namespace detail {

inline Vector2 one_sided(const Point2& a, const Point2& b, double ta, double tb) { return (b - a) / (tb - ta); }

inline Vector2 interior_tangent(const TangentMethod& method, const Point2& prev, const Point2& cur,
                                const Point2& next, double t_prev, double t_next) {
  return std::visit(
      [&](const auto& m) -> Vector2 {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, MinEnergyQuad>) {
          if (is_collinear(prev, cur, next)) return tangent_catmull_rom(prev, next, t_prev, t_next);
          return tangent_min_energy(prev, cur, next, t_prev, t_next);
        } else if constexpr (std::is_same_v<T, CatmullRom>) {
          return tangent_catmull_rom(prev, next, t_prev, t_next);
        } else if constexpr (std::is_same_v<T, Cardinal>) {
          return tangent_cardinal(prev, next, t_prev, t_next, m.tension);
        } else {
          return tangent_kochanek_bartels(prev, cur, next, m.tension, m.bias, m.continuity);
        }
      },
      method);
}

}  // namespace detail

/// Interior tangents come from the chosen method. End tangents: for the
/// minimum-energy method the end derivative of the first/last triple's
/// quadratic divided by that triple's knot span; otherwise (and for
/// degenerate end triples) the one-sided chord slope.
inline HermiteSpline build_spline(std::span<const Point2> points, const KnotVector& knots,
                                  const TangentMethod& method) {
  const std::size_t n = points.size();
  if (n < 2) throw Error(ErrorKind::TooFewPoints, "a spline needs at least two points");
  if (knots.size() != n) throw Error(ErrorKind::InvalidKnots, "knot count must match point count");
  for (const auto& p : points) check_finite(p);
  validate(method);

  std::vector<Vector2> v(n);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    v[i] = detail::interior_tangent(method, points[i - 1], points[i], points[i + 1], knots[i - 1], knots[i + 1]);
  }

  v.front() = detail::one_sided(points[0], points[1], knots[0], knots[1]);
  v.back() = detail::one_sided(points[n - 2], points[n - 1], knots[n - 2], knots[n - 1]);
  if (std::holds_alternative<MinEnergyQuad>(method) && n >= 3) {
    if (!is_collinear(points[0], points[1], points[2])) {
      const auto first = build_solution(points[0], points[1], points[2]);
      v.front() = first.curve.first(0.0) / (knots[2] - knots[0]);
    }
    if (!is_collinear(points[n - 3], points[n - 2], points[n - 1])) {
      const auto last = build_solution(points[n - 3], points[n - 2], points[n - 1]);
      v.back() = last.curve.first(1.0) / (knots[n - 1] - knots[n - 3]);
    }
  }

  return HermiteSpline(std::vector<Point2>(points.begin(), points.end()), knots, std::move(v), method);
}

inline HermiteSpline build_spline(std::span<const Point2> points, const TangentMethod& method,
                                  KnotConvention convention = KnotConvention::Uniform) {
  return build_spline(points, make_knots(convention, points), method);
}

}  // namespace mqs
