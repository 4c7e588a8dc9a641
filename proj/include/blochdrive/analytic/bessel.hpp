#pragma once

namespace blochdrive {

// Bessel functions of the first kind for integer order.
//
// Two independent evaluation paths are provided. The power series is summed
// in extended precision and is accurate to ~1e-15 absolute for |z| <= 12.
// The integral representation J_n(z) = (1/2pi) int_0^{2pi} cos(n t - z sin t) dt
// is evaluated with the trapezoidal rule, which converges geometrically for
// this periodic integrand once the node count exceeds |z| + n.

inline constexpr int kBesselMaxOrder = 20;
inline constexpr double kBesselMaxArgument = 50.0;
inline constexpr double kBesselSeriesLimit = 12.0;

// J_n(z) for 0 <= n <= 20, |z| <= 50. Series for |z| <= 12, integral
// representation beyond. Throws ArgumentError outside that range.
double bessel_jn(int n, double z);

// Any integer order with |n| <= 20, using J_{-n} = (-1)^n J_n.
double bessel_jn_signed(int n, double z);

// Power-series path; requires |z| <= 12.
double bessel_jn_series(int n, double z);

// Integral-representation path; valid over the full supported range.
double bessel_jn_integral(int n, double z);

// index-th positive zero of J_0 (1 <= index <= 5), bracketed on a coarse
// scan and refined by bisection to 1e-12.
double bessel_j0_root(int index);

}  // namespace blochdrive
