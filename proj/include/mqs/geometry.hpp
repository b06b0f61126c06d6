#pragma once

// Planar points, displacement vectors and the similarity frame that maps a
// point triple onto the canonical position q1 = (0,0), q3 = (1,0).

#include <algorithm>
#include <array>
#include <cmath>
#include <ostream>

#include "mqs/errors.hpp"

namespace mqs {

struct Vector2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vector2() = default;
  constexpr Vector2(double x_, double y_) : x(x_), y(y_) {}

  constexpr Vector2 operator+(const Vector2& o) const { return {x + o.x, y + o.y}; }
  constexpr Vector2 operator-(const Vector2& o) const { return {x - o.x, y - o.y}; }
  constexpr Vector2 operator-() const { return {-x, -y}; }
  constexpr Vector2 operator*(double s) const { return {x * s, y * s}; }
  constexpr Vector2 operator/(double s) const { return {x / s, y / s}; }
  constexpr Vector2& operator+=(const Vector2& o) { x += o.x; y += o.y; return *this; }
  constexpr Vector2& operator-=(const Vector2& o) { x -= o.x; y -= o.y; return *this; }
  constexpr Vector2& operator*=(double s) { x *= s; y *= s; return *this; }

  constexpr bool operator==(const Vector2&) const = default;

  double norm() const { return std::hypot(x, y); }
  constexpr double squared_norm() const { return x * x + y * y; }
};

constexpr Vector2 operator*(double s, const Vector2& v) { return v * s; }

/// A location in the plane. Differences of points are vectors; points only
/// combine with vectors through translation.
struct Point2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Point2() = default;
  constexpr Point2(double x_, double y_) : x(x_), y(y_) {}

  /// Displacement from the origin.
  constexpr Vector2 vec() const { return {x, y}; }
  static constexpr Point2 from(const Vector2& v) { return {v.x, v.y}; }

  constexpr Point2 operator+(const Vector2& v) const { return {x + v.x, y + v.y}; }
  constexpr Point2 operator-(const Vector2& v) const { return {x - v.x, y - v.y}; }
  constexpr Vector2 operator-(const Point2& o) const { return {x - o.x, y - o.y}; }

  constexpr bool operator==(const Point2&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, const Vector2& v) {
  return os << "<" << v.x << ", " << v.y << ">";
}

inline std::ostream& operator<<(std::ostream& os, const Point2& p) {
  return os << "(" << p.x << ", " << p.y << ")";
}

constexpr double dot(const Vector2& u, const Vector2& v) { return u.x * v.x + u.y * v.y; }

/// Signed scalar cross product u.x*v.y - u.y*v.x.
constexpr double cross2(const Vector2& u, const Vector2& v) { return u.x * v.y - u.y * v.x; }

inline double distance(const Point2& a, const Point2& b) { return (b - a).norm(); }

inline bool is_finite(const Point2& p) { return std::isfinite(p.x) && std::isfinite(p.y); }
inline bool is_finite(const Vector2& v) { return std::isfinite(v.x) && std::isfinite(v.y); }

/// Proper rotation stored row-major as [[c, s], [-s, c]].
struct Rotation2 {
  double c = 1.0;
  double s = 0.0;

  constexpr Vector2 apply(const Vector2& v) const { return {c * v.x + s * v.y, -s * v.x + c * v.y}; }
  constexpr Vector2 apply_inverse(const Vector2& v) const {
    return {c * v.x - s * v.y, s * v.x + c * v.y};
  }
  constexpr double determinant() const { return c * c + s * s; }
};

/// Relative threshold of the collinearity test: a triple is rejected when
/// |cross(p2 - p1, p3 - p1)| <= kCollinearTolerance * |p3 - p1|^2.
inline constexpr double kCollinearTolerance = 1e-9;
/// |p3 - p1| at or below this fraction of the largest coordinate magnitude
/// counts as coincident endpoints.
inline constexpr double kCoincidentTolerance = 1e-12;

/// Similarity frame for a triple: q = A * (p - translation) / scale.
struct NormalizedTriple {
  Point2 q2;
  Vector2 translation;
  double scale = 1.0;
  Rotation2 rotation;

  Point2 to_canonical(const Point2& p) const {
    return Point2::from(rotation.apply((p.vec() - translation) / scale));
  }
  Point2 from_canonical(const Point2& q) const {
    return Point2::from(rotation.apply_inverse(q.vec()) * scale + translation);
  }
};

inline void check_finite(const Point2& p) {
  if (!is_finite(p)) {
    throw Error(ErrorKind::ValidationError, "non-finite coordinate");
  }
}

/// Throws CoincidentEndpoints or CollinearPoints when the triple cannot be
/// normalized.
inline void check_triple(const Point2& p1, const Point2& p2, const Point2& p3) {
  check_finite(p1);
  check_finite(p2);
  check_finite(p3);
  const Vector2 chord = p3 - p1;
  const double magnitude =
      std::max({std::abs(p1.x), std::abs(p1.y), std::abs(p3.x), std::abs(p3.y)});
  const double length = chord.norm();
  if (length <= kCoincidentTolerance * magnitude || length == 0.0) {
    throw Error(ErrorKind::CoincidentEndpoints, "first and last points coincide");
  }
  if (std::abs(cross2(p2 - p1, chord)) <= kCollinearTolerance * chord.squared_norm()) {
    throw Error(ErrorKind::CollinearPoints, "the three points are collinear");
  }
}

inline bool is_collinear(const Point2& p1, const Point2& p2, const Point2& p3) {
  try {
    check_triple(p1, p2, p3);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::CollinearPoints || e.kind() == ErrorKind::CoincidentEndpoints) {
      return true;
    }
    throw;
  }
  return false;
}

/// Translate p1 to the origin, scale so |p3 - p1| = 1, then rotate the scaled
/// p3 onto (1, 0). The rotation rows are built directly from the scaled p3.
inline NormalizedTriple normalize_triple(const Point2& p1, const Point2& p2, const Point2& p3) {
  check_triple(p1, p2, p3);
  NormalizedTriple frame;
  frame.translation = p1.vec();
  frame.scale = (p3 - p1).norm();
  const Vector2 h3 = (p3 - p1) / frame.scale;
  frame.rotation = Rotation2{h3.x, h3.y};
  frame.q2 = Point2::from(frame.rotation.apply((p2 - p1) / frame.scale));
  return frame;
}

}  // namespace mqs
