#pragma once

#include <concepts>

#include "mqs/geometry.hpp"

namespace mqs {

/// Anything that can report position and the first three parameter
/// derivatives at a parameter value. Polynomial curves report exact
/// derivatives from their coefficients.
template <class C>
concept CurveEvaluator = requires(const C& c, double t) {
  { c.position(t) } -> std::convertible_to<Point2>;
  { c.first(t) } -> std::convertible_to<Vector2>;
  { c.second(t) } -> std::convertible_to<Vector2>;
  { c.third(t) } -> std::convertible_to<Vector2>;
};

/// r(t) = a1 t^2 + a2 t + a3.
struct QuadraticCurve {
  Vector2 a1;
  Vector2 a2;
  Point2 a3;

  Point2 position(double t) const { return a3 + (a1 * t + a2) * t; }
  Vector2 first(double t) const { return a1 * (2.0 * t) + a2; }
  Vector2 second(double) const { return a1 * 2.0; }
  Vector2 third(double) const { return {}; }
};

/// r(t) = c3 t^3 + c2 t^2 + c1 t + c0.
struct CubicCurve {
  Vector2 c3;
  Vector2 c2;
  Vector2 c1;
  Point2 c0;

  Point2 position(double t) const { return c0 + ((c3 * t + c2) * t + c1) * t; }
  Vector2 first(double t) const { return (c3 * (3.0 * t) + c2 * 2.0) * t + c1; }
  Vector2 second(double t) const { return c3 * (6.0 * t) + c2 * 2.0; }
  Vector2 third(double) const { return c3 * 6.0; }
};

static_assert(CurveEvaluator<QuadraticCurve>);
static_assert(CurveEvaluator<CubicCurve>);

}  // namespace mqs
