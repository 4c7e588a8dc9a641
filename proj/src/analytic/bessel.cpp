#include "blochdrive/analytic/bessel.hpp"

#include <cmath>

#include "blochdrive/core/errors.hpp"
#include "blochdrive/core/types.hpp"

namespace blochdrive {
namespace {

constexpr int kSeriesTerms = 60;
constexpr int kTrapezoidNodes = 256;

void check_range(int n, double z) {
  if (n < 0 || n > kBesselMaxOrder) throw ArgumentError("Bessel order out of range [0, 20]");
  if (!(std::abs(z) <= kBesselMaxArgument)) throw ArgumentError("Bessel argument out of range");
}

}  // namespace

double bessel_jn_series(int n, double z) {
  check_range(n, z);
  if (std::abs(z) > kBesselSeriesLimit) throw ArgumentError("series path requires |z| <= 12");
  const long double half = 0.5L * z;
  const long double q = half * half;
  long double term = 1.0L;
  for (int i = 1; i <= n; ++i) term *= half / i;
  long double sum = term;
  for (int m = 1; m < kSeriesTerms; ++m) {
    term *= -q / (static_cast<long double>(m) * (m + n));
    sum += term;
    if (term == 0.0L) break;
  }
  return static_cast<double>(sum);
}

double bessel_jn_integral(int n, double z) {
  check_range(n, z);
  long double sum = 0.0L;
  for (int i = 0; i < kTrapezoidNodes; ++i) {
    const double theta = kTwoPi * i / kTrapezoidNodes;
    sum += std::cos(n * theta - z * std::sin(theta));
  }
  return static_cast<double>(sum / kTrapezoidNodes);
}

double bessel_jn(int n, double z) {
  check_range(n, z);
  return std::abs(z) <= kBesselSeriesLimit ? bessel_jn_series(n, z) : bessel_jn_integral(n, z);
}

double bessel_jn_signed(int n, double z) {
  if (n >= 0) return bessel_jn(n, z);
  const double j = bessel_jn(-n, z);
  return (n % 2 == 0) ? j : -j;
}

double bessel_j0_root(int index) {
  if (index < 1 || index > 5) throw ArgumentError("J0 root index must be in [1, 5]");
  constexpr double kScanStep = 0.25;
  int found = 0;
  double a = kScanStep;
  double fa = bessel_jn(0, a);
  while (true) {
    const double b = a + kScanStep;
    const double fb = bessel_jn(0, b);
    if (fa * fb <= 0.0) {
      if (++found == index) {
        double lo = a, hi = b, flo = fa;
        while (hi - lo > 1e-12) {
          const double mid = 0.5 * (lo + hi);
          const double fm = bessel_jn(0, mid);
          if (flo * fm <= 0.0) {
            hi = mid;
          } else {
            lo = mid;
            flo = fm;
          }
        }
        return 0.5 * (lo + hi);
      }
    }
    a = b;
    fa = fb;
  }
}

}  // namespace blochdrive
