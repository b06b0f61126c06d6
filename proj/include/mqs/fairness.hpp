#pragma once

// Curvature and the two fairness functionals used to rank splines:
//   energy    E = integral of kappa(t)^2 dt
//   variation V = integral of (d kappa / dt)^2 dt
// Both are integrated in the curve parameter, not in arc length.

#include <cmath>

#include "mqs/curves.hpp"
#include "mqs/quadrature.hpp"

namespace mqs {

/// Squared speeds at or below this are treated as a stationary point.
inline constexpr double kMinSquaredSpeed = 1e-300;

namespace detail {
inline double checked_speed2(const Vector2& d1) {
  const double s2 = d1.squared_norm();
  if (!(s2 > kMinSquaredSpeed)) {
    throw Error(ErrorKind::ZeroSpeed, "curve has zero speed at the evaluation parameter");
  }
  return s2;
}
}  // namespace detail

/// Signed curvature (x'y'' - y'x'') / (x'^2 + y'^2)^(3/2).
template <CurveEvaluator C>
double curvature(const C& c, double t) {
  const Vector2 d1 = c.first(t);
  const Vector2 d2 = c.second(t);
  const double s2 = detail::checked_speed2(d1);
  return cross2(d1, d2) / (s2 * std::sqrt(s2));
}

/// d kappa / dt, keeping the third-derivative term (it vanishes for
/// quadratics).
template <CurveEvaluator C>
double curvature_rate(const C& c, double t) {
  const Vector2 d1 = c.first(t);
  const Vector2 d2 = c.second(t);
  const Vector2 d3 = c.third(t);
  const double s2 = detail::checked_speed2(d1);
  const double numerator = cross2(d1, d3) * s2 - 3.0 * dot(d1, d2) * cross2(d1, d2);
  return numerator / (s2 * s2 * std::sqrt(s2));
}

template <CurveEvaluator C>
double segment_energy(const C& c, double t0, double t1, const QuadratureConfig& cfg = {}) {
  return integrate(
      [&](double t) {
        const double k = curvature(c, t);
        return k * k;
      },
      t0, t1, cfg);
}

template <CurveEvaluator C>
double segment_variation(const C& c, double t0, double t1, const QuadratureConfig& cfg = {}) {
  return integrate(
      [&](double t) {
        const double k = curvature_rate(c, t);
        return k * k;
      },
      t0, t1, cfg);
}

/// Energy over the whole real line. `center` and `scale` position the
/// tangent substitution; pick them near the region of high curvature.
template <CurveEvaluator C>
double whole_line_energy(const C& c, const QuadratureConfig& cfg = {}, double center = 0.0,
                         double scale = 1.0) {
  return integrate_real_line(
             [&](double t) {
               const double k = curvature(c, t);
               return k * k;
             },
             cfg, center, scale)
      .value;
}

template <CurveEvaluator C>
double whole_line_variation(const C& c, const QuadratureConfig& cfg = {}, double center = 0.0,
                            double scale = 1.0) {
  return integrate_real_line(
             [&](double t) {
               const double k = curvature_rate(c, t);
               return k * k;
             },
             cfg, center, scale)
      .value;
}

/// Substitution centre and width matched to a quadratic: the speed is
/// smallest at the vertex parameter and grows on the scale |a1 x a2| / (2|a1|^2).
struct LineSubstitution {
  double center = 0.0;
  double scale = 1.0;
};

inline LineSubstitution substitution_for(const QuadraticCurve& q) {
  const double a1sq = q.a1.squared_norm();
  if (a1sq == 0.0) return {};
  const double width = std::abs(cross2(q.a1, q.a2)) / (2.0 * a1sq);
  return {-dot(q.a1, q.a2) / (2.0 * a1sq), width > 0.0 ? width : 1.0};
}

inline double whole_line_energy(const QuadraticCurve& q, const QuadratureConfig& cfg = {}) {
  const auto sub = substitution_for(q);
  return whole_line_energy<QuadraticCurve>(q, cfg, sub.center, sub.scale);
}

inline double whole_line_variation(const QuadraticCurve& q, const QuadratureConfig& cfg = {}) {
  const auto sub = substitution_for(q);
  return whole_line_variation<QuadraticCurve>(q, cfg, sub.center, sub.scale);
}

}  // namespace mqs
