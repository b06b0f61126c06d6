#pragma once

// Globally adaptive Gauss-Kronrod (7/15) integration, plus a tangent
// substitution for integrals over the whole real line.

#include <array>
#include <cmath>
#include <numbers>
#include <queue>
#include <vector>

#include "mqs/errors.hpp"

namespace mqs {

struct QuadratureConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  int max_depth = 50;

  void validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || max_depth < 1) {
      throw Error(ErrorKind::ValidationError, "quadrature tolerances must be positive and depth >= 1");
    }
  }
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  int intervals = 0;
};

namespace detail {

// Kronrod abscissae (positive half, descending) and weights; the Gauss
// 7-point rule uses every second node.
inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  double value;
  double error;
  int depth;
  bool operator<(const Panel& o) const { return error < o.error; }
};

template <class F>
Panel gk15(const F& f, double a, double b, int depth) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = kWgk[7] * fc;
  double gauss = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double sum = f(center - dx) + f(center + dx);
    kronrod += kWgk[j] * sum;
    if (j % 2 == 1) gauss += kWg[j / 2] * sum;
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, std::abs(kronrod - gauss), depth};
}

}  // namespace detail

/// Integrate f over [a, b]. The worst panel is bisected until the summed
/// error estimate meets max(abs_tol, rel_tol * |I|). Throws
/// QuadratureDivergence when a panel would exceed cfg.max_depth or the
/// integrand produces non-finite values.
template <class F>
QuadratureResult integrate_adaptive(const F& f, double a, double b, const QuadratureConfig& cfg = {}) {
  cfg.validate();
  if (a == b) return {};
  if (a > b) {
    QuadratureResult r = integrate_adaptive(f, b, a, cfg);
    r.value = -r.value;
    return r;
  }

  std::priority_queue<detail::Panel> panels;
  panels.push(detail::gk15(f, a, b, 0));
  double total = panels.top().value;
  double error = panels.top().error;

  while (true) {
    if (!std::isfinite(total) || !std::isfinite(error)) {
      throw Error(ErrorKind::QuadratureDivergence, "integrand is not finite on the interval");
    }
    if (error <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total))) break;

    const detail::Panel worst = panels.top();
    if (worst.depth >= cfg.max_depth) {
      throw Error(ErrorKind::QuadratureDivergence, "subdivision depth exhausted before convergence");
    }
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const detail::Panel left = detail::gk15(f, worst.a, mid, worst.depth + 1);
    const detail::Panel right = detail::gk15(f, mid, worst.b, worst.depth + 1);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);

    // Re-sum occasionally so cancellation in the running totals cannot stall
    // the stopping test.
    if (panels.size() % 64 == 0) {
      auto copy = panels;
      total = 0.0;
      error = 0.0;
      while (!copy.empty()) {
        total += copy.top().value;
        error += copy.top().error;
        copy.pop();
      }
    }
  }
  return {total, error, static_cast<int>(panels.size())};
}

template <class F>
double integrate(const F& f, double a, double b, const QuadratureConfig& cfg = {}) {
  return integrate_adaptive(f, a, b, cfg).value;
}

/// Integral of f over the real line through t = center + scale * tan(u),
/// u in (-pi/2, pi/2). Requires f to decay faster than 1/t.
template <class F>
QuadratureResult integrate_real_line(const F& f, const QuadratureConfig& cfg = {}, double center = 0.0,
                                     double scale = 1.0) {
  const auto mapped = [&](double u) {
    const double c = std::cos(u);
    if (c == 0.0) return 0.0;
    const double t = center + scale * std::tan(u);
    return f(t) * scale / (c * c);
  };
  const double half_pi = 0.5 * std::numbers::pi;
  return integrate_adaptive(mapped, -half_pi, half_pi, cfg);
}

}  // namespace mqs
