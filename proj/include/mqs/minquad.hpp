#pragma once

// Minimum-energy quadratic through three points.
//
// The quadratic r(t) = a1 t^2 + a2 t + a3 with r(0) = p1, r(T) = p2 and
// r(1) = p3 has whole-line energy proportional to |q2 - q3 T|^4 / (T - T^2)
// in the canonical frame (q1 = 0, q3 = (1, 0)). Its stationary points are the
// roots of
//
//   T^3 - 3/2 T^2 + (q2.x - |q2|^2) T + |q2|^2 / 2 = 0,
//
// which always has three real roots for q2.y != 0, exactly one in (0, 1).

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>

#include "mqs/curves.hpp"
#include "mqs/fairness.hpp"
#include "mqs/geometry.hpp"
#include "mqs/quadrature.hpp"

namespace mqs {

inline double cubic_residual(double T, const Point2& q2) {
  const double n2 = q2.vec().squared_norm();
  return ((T - 1.5) * T + (q2.x - n2)) * T + 0.5 * n2;
}

inline double cubic_residual_derivative(double T, const Point2& q2) {
  const double n2 = q2.vec().squared_norm();
  return (3.0 * T - 3.0) * T + (q2.x - n2);
}

/// Energy objective |q2 - (T, 0)|^4 / (T - T^2), up to a positive constant.
inline double energy_objective(double T, const Point2& q2) {
  if (!(T > 0.0 && T < 1.0)) {
    throw Error(ErrorKind::DomainError, "energy objective requires 0 < T < 1");
  }
  const double dx = q2.x - T;
  const double d2 = dx * dx + q2.y * q2.y;
  return d2 * d2 / (T - T * T);
}

/// The three real roots of the cubic in T, ascending, together with the
/// Cardano parameters beta = 1 - 2 q2.x and
/// gamma = (4 (q2.x - |q2|^2) - 3)^3 / 27.
struct CubicRoots {
  double beta = 0.0;
  double gamma = 0.0;
  std::array<double, 3> roots{};
};

inline constexpr int kNewtonPolishSteps = 2;

inline double polish_root(double T, const Point2& q2) {
  for (int i = 0; i < kNewtonPolishSteps; ++i) {
    const double d = cubic_residual_derivative(T, q2);
    if (d == 0.0) break;
    const double next = T - cubic_residual(T, q2) / d;
    if (!std::isfinite(next)) break;
    T = next;
  }
  return T;
}

/// Trigonometric solution of the depressed cubic x^3 + p x + q = 0 with
/// T = x + 1/2. p = q2.x - |q2|^2 - 3/4 is always <= -1/2, so the cosine form
/// applies without branch choices.
inline CubicRoots cubic_roots(const Point2& q2) {
  const double n2 = q2.vec().squared_norm();
  const double p = q2.x - n2 - 0.75;
  const double q = 0.5 * q2.x - 0.25;

  CubicRoots out;
  out.beta = 1.0 - 2.0 * q2.x;
  out.gamma = 64.0 * p * p * p / 27.0;

  const double m = 2.0 * std::sqrt(-p / 3.0);
  const double arg = std::clamp(3.0 * q / (p * m), -1.0, 1.0);
  const double phi = std::acos(arg) / 3.0;
  constexpr double third_turn = 2.0 * std::numbers::pi / 3.0;
  for (int k = 0; k < 3; ++k) {
    out.roots[k] = polish_root(m * std::cos(phi - third_turn * k) + 0.5, q2);
  }
  std::sort(out.roots.begin(), out.roots.end());
  return out;
}

/// The root of the cubic in (0, 1): the minimizer of energy_objective.
inline double solve_min_T(const Point2& q2) {
  const CubicRoots cr = cubic_roots(q2);
  std::optional<double> best;
  double best_objective = 0.0;
  for (double T : cr.roots) {
    if (!(T > 0.0 && T < 1.0)) continue;
    const double objective = energy_objective(T, q2);
    if (!best || objective < best_objective) {
      best = T;
      best_objective = objective;
    }
  }
  if (!best) {
    throw Error(ErrorKind::NoRootInUnitInterval, "no root of the cubic lies in (0, 1)");
  }
  return *best;
}

struct MinQuadSolution {
  double T = 0.5;
  QuadraticCurve curve;  // original coordinates
  NormalizedTriple frame;
  double objective = 0.0;
  std::array<Point2, 3> points;
};

/// Coefficients of the quadratic through p1, p2, p3 with r(T) = p2.
inline QuadraticCurve quadratic_through(const Point2& p1, const Point2& p2, const Point2& p3, double T) {
  const Vector2 s2 = p2 - p1;
  const Vector2 s3 = p3 - p1;
  const Vector2 a1 = (s2 - s3 * T) / (T * T - T);
  return {a1, s3 - a1, p1};
}

/// Solve the triple. T is frame independent, so the coefficients are built
/// directly in the input coordinates.
inline MinQuadSolution build_solution(const Point2& p1, const Point2& p2, const Point2& p3) {
  MinQuadSolution sol;
  sol.frame = normalize_triple(p1, p2, p3);
  sol.T = solve_min_T(sol.frame.q2);
  sol.curve = quadratic_through(p1, p2, p3, sol.T);
  sol.objective = energy_objective(sol.T, sol.frame.q2);
  sol.points = {p1, p2, p3};
  return sol;
}

/// Derivative of the minimum-energy quadratic at p2, i.e. at t = T.
inline Vector2 tangent_at_p2(const MinQuadSolution& sol) {
  const auto& [p1, p2, p3] = sol.points;
  const double T = sol.T;
  return ((p2 - p1) - (p3 - p1) * T) / (T * T - T) * (2.0 * T - 1.0) + (p3 - p1);
}

struct ArcLength {
  double value = 0.0;
  bool closed_form = true;  // false when the parallel-vector guard forced quadrature
};

inline constexpr double kArcSinGuard = 1e-7;
inline constexpr double kArcCosGuard = 1e-12;

/// Length of the quadratic between p1 and p3 by adaptive quadrature of |r'(t)|.
inline double arc_length_numeric(const MinQuadSolution& sol, const QuadratureConfig& cfg = {}) {
  return integrate([&](double t) { return sol.curve.first(t).norm(); }, 0.0, 1.0, cfg);
}

/// Closed-form length between p1 and p3. With r1 = T s3 - s2,
/// r2 = T^2 s3 - s2 and theta the angle between them,
///   l = [ |r2|^2 cos + (2|r1| - |r2| cos) rho
///         + |r2|^2 sin^2 log((2|r1| - |r2| cos + rho) / (|r2| (1 - cos))) ]
///       / (4 |r1| (T - T^2)).
/// Falls back to quadrature when r1 and r2 are (nearly) parallel.
inline ArcLength arc_length_closed(const MinQuadSolution& sol, const QuadratureConfig& cfg = {}) {
  const auto& [p1, p2, p3] = sol.points;
  const double T = sol.T;
  const Vector2 s2 = p2 - p1;
  const Vector2 s3 = p3 - p1;
  const Vector2 r1 = s3 * T - s2;
  const Vector2 r2 = s3 * (T * T) - s2;
  const double n1 = r1.norm();
  const double n2 = r2.norm();

  if (n1 > 0.0 && n2 > 0.0) {
    const double cos_t = dot(r1, r2) / (n1 * n2);
    const double sin_t = cross2(r1, r2) / (n1 * n2);
    const double sin2 = sin_t * sin_t;
    const double one_minus_cos = cos_t > 0.0 ? sin2 / (1.0 + cos_t) : 1.0 - cos_t;
    if (std::abs(sin_t) >= kArcSinGuard && std::abs(one_minus_cos) >= kArcCosGuard) {
      const double rho = std::sqrt(std::max(0.0, 4.0 * n1 * n1 - 4.0 * n1 * n2 * cos_t + n2 * n2));
      const double head = 2.0 * n1 - n2 * cos_t;
      const double log_term = std::log((head + rho) / (n2 * one_minus_cos));
      const double bracket = n2 * n2 * cos_t + head * rho + n2 * n2 * sin2 * log_term;
      return {bracket / (4.0 * n1 * (T - T * T)), true};
    }
  }
  return {arc_length_numeric(sol, cfg), false};
}

/// Whole-line energy (3 pi / 4) |a1|^4 / |a1 x a2|^3.
inline double total_energy_closed(const QuadraticCurve& curve) {
  const double cross = std::abs(cross2(curve.a1, curve.a2));
  const double a1sq = curve.a1.squared_norm();
  if (!(cross > 1e-12 * a1sq * curve.a2.norm())) {
    throw Error(ErrorKind::DegenerateCurve, "quadratic degenerates to a straight traversal");
  }
  return 0.75 * std::numbers::pi * a1sq * a1sq / (cross * cross * cross);
}

/// Whole-line curvature variation (45 pi / 16) |a1|^8 / |a1 x a2|^5. For the
/// graph y = a t^2 + b t + c this is (45 pi / 16) |a|^3.
inline double total_variation_closed(const QuadraticCurve& curve) {
  const double cross = std::abs(cross2(curve.a1, curve.a2));
  const double a1sq = curve.a1.squared_norm();
  if (!(cross > 1e-12 * a1sq * curve.a2.norm())) {
    throw Error(ErrorKind::DegenerateCurve, "quadratic degenerates to a straight traversal");
  }
  const double a1_4 = a1sq * a1sq;
  return 45.0 / 16.0 * std::numbers::pi * a1_4 * a1_4 / (cross * cross * cross * cross * cross);
}

}  // namespace mqs
