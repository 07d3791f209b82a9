#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>

#include "waveholtz/errors.hpp"

namespace wh {

/// Composite Simpson rule with a fixed, even number of steps.
template <class F>
double simpson(F&& f, double a, double b, int steps) {
  if (steps < 2 || steps % 2 != 0)
    throw std::invalid_argument("simpson: step count must be even and >= 2");
  const double h = (b - a) / steps;
  double odd = 0.0, even = 0.0;
  for (int m = 1; m < steps; m += 2) odd += f(a + m * h);
  for (int m = 2; m < steps; m += 2) even += f(a + m * h);
  return h / 3.0 * (f(a) + f(b) + 4.0 * odd + 2.0 * even);
}

struct AdaptiveResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = true;
};

namespace detail {

template <class F>
AdaptiveResult adaptive_simpson_rec(F& f, double a, double b, double fa, double fm, double fb,
                                    double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double h6 = (b - a) / 12.0;
  const double left = h6 * (fa + 4.0 * flm + fm);
  const double right = h6 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * tol || (b - a) < 1e-14 * (std::abs(a) + std::abs(b) + 1.0)) {
    return {left + right + delta / 15.0, std::abs(delta) / 15.0, true};
  }
  if (depth <= 0) {
    return {left + right + delta / 15.0, std::abs(delta) / 15.0, false};
  }
  AdaptiveResult rl = adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1);
  AdaptiveResult rr = adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
  return {rl.value + rr.value, rl.error_estimate + rr.error_estimate, rl.converged && rr.converged};
}

}  // namespace detail

/// Adaptive Simpson quadrature with an absolute tolerance.
template <class F>
AdaptiveResult integrate_adaptive(F&& f, double a, double b, double abs_tol, int max_depth = 48) {
  if (!(b >= a)) throw std::invalid_argument("integrate_adaptive: b < a");
  if (a == b) return {0.0, 0.0, true};
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return detail::adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, abs_tol, max_depth);
}

/// Adaptive Simpson that throws ToleranceError when the tolerance is not met.
template <class F>
double integrate_or_throw(F&& f, double a, double b, double abs_tol, int max_depth = 48) {
  AdaptiveResult r = integrate_adaptive(std::forward<F>(f), a, b, abs_tol, max_depth);
  if (!r.converged)
    throw ToleranceError("adaptive quadrature did not reach tolerance", r.value, r.error_estimate);
  return r.value;
}

namespace detail {
// 16-point Gauss-Legendre nodes/weights on [-1, 1] (positive half; nodes are symmetric).
inline constexpr double kGL16Nodes[8] = {
    0.0950125098376374, 0.2816035507792589, 0.4580167776572274, 0.6178762444026438,
    0.7554044083550030, 0.8656312023878318, 0.9445750230732326, 0.9894009349916499};
inline constexpr double kGL16Weights[8] = {
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
    0.1246289712555339, 0.0951585116824928, 0.0622535239386479, 0.0271524594117541};
}  // namespace detail

/// Composite 16-point Gauss-Legendre quadrature. Works for real- or
/// complex-valued integrands; panels must be >= 1.
template <class F>
auto gauss_legendre(F&& f, double a, double b, int panels) -> decltype(f(a)) {
  if (panels < 1) throw std::invalid_argument("gauss_legendre: panels must be >= 1");
  using R = decltype(f(a));
  R total{};
  const double w = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double c = a + (p + 0.5) * w;
    const double s = 0.5 * w;
    R acc{};
    for (int i = 0; i < 8; ++i) {
      const double dx = s * detail::kGL16Nodes[i];
      acc += detail::kGL16Weights[i] * (f(c + dx) + f(c - dx));
    }
    total += s * acc;
  }
  return total;
}

}  // namespace wh
