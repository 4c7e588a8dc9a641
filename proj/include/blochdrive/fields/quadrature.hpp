#pragma once

#include <cmath>
#include <complex>
#include <string>

#include "blochdrive/core/errors.hpp"

namespace blochdrive {

struct QuadratureOptions {
  double abs_tol = 1e-10;
  int max_depth = 40;
};

template <typename T>
struct QuadratureResult {
  T value{};
  double error_estimate = 0.0;
  bool converged = true;
};

namespace detail {

inline double magnitude(double x) { return std::abs(x); }
inline double magnitude(const std::complex<double>& z) {
  return std::max(std::abs(z.real()), std::abs(z.imag()));
}

template <typename T, typename Fn>
void simpson_step(const Fn& f, double a, double b, T fa, T fm, T fb, T whole, double tol,
                  int depth, QuadratureResult<T>& acc) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const T flm = f(lm);
  const T frm = f(rm);
  const T left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const T right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const T delta = left + right - whole;
  const double err = magnitude(delta);
  if (err <= 15.0 * tol || depth <= 0) {
    if (err > 15.0 * tol) acc.converged = false;
    acc.value += left + right + delta / 15.0;
    acc.error_estimate += err / 15.0;
    return;
  }
  simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, acc);
  simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, acc);
}

}  // namespace detail

// Adaptive Simpson integration of f over [a, b] with Richardson correction.
// T is double or std::complex<double>. Deterministic: the subdivision
// depends only on f, the interval and the options.
template <typename T, typename Fn>
QuadratureResult<T> adaptive_simpson(const Fn& f, double a, double b,
                                     const QuadratureOptions& opts = {}) {
  QuadratureResult<T> acc;
  if (a == b) return acc;
  const T fa = f(a);
  const T fb = f(b);
  const T fm = f(0.5 * (a + b));
  const T whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  detail::simpson_step<T>(f, a, b, fa, fm, fb, whole, opts.abs_tol, opts.max_depth, acc);
  return acc;
}

// Like adaptive_simpson but first splits [a, b] into pieces no longer than
// `panel`, so that long oscillatory integrands are not under-resolved by
// the initial three-point estimate. The tolerance is shared across panels
// in proportion to their length.
template <typename T, typename Fn>
QuadratureResult<T> paneled_simpson(const Fn& f, double a, double b, double panel,
                                    const QuadratureOptions& opts = {}) {
  QuadratureResult<T> total;
  if (a == b) return total;
  const double length = b - a;
  const int pieces = std::max(1, static_cast<int>(std::ceil(std::abs(length) / panel)));
  const double h = length / pieces;
  QuadratureOptions local = opts;
  local.abs_tol = opts.abs_tol / pieces;
  for (int i = 0; i < pieces; ++i) {
    const double lo = a + i * h;
    const double hi = (i + 1 == pieces) ? b : a + (i + 1) * h;
    auto part = adaptive_simpson<T>(f, lo, hi, local);
    total.value += part.value;
    total.error_estimate += part.error_estimate;
    total.converged = total.converged && part.converged;
  }
  return total;
}

}  // namespace blochdrive
