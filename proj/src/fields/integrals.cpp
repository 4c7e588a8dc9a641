#include "blochdrive/fields/integrals.hpp"

#include <cmath>
#include <complex>
#include <sstream>

#include "blochdrive/core/errors.hpp"
#include "blochdrive/core/types.hpp"

namespace blochdrive {
namespace {

// Longest piece handed to a single adaptive Simpson run.
constexpr double kPanel = 0.5;

template <typename Angle>
std::complex<double> integrate_phase(const Angle& angle, double a, double b,
                                     const QuadratureOptions& opts) {
  auto f = [&](double s) { return std::polar(1.0, angle(s)); };
  auto r = paneled_simpson<std::complex<double>>(f, a, b, kPanel, opts);
  if (!r.converged) {
    std::ostringstream os;
    os << "quadrature of the drive phase over [" << a << ", " << b
       << "] did not converge; error estimate " << r.error_estimate;
    throw NumericalError(os.str(), r.error_estimate);
  }
  return r.value;
}

FieldIntegrals assemble(std::complex<double> uv, double duration, double impulse, double J) {
  FieldIntegrals fi;
  fi.duration = duration;
  fi.u = uv.real();
  fi.v = uv.imag();
  fi.impulse = impulse;
  if (duration == 0.0) {
    fi.effective_hopping = J;
    return fi;
  }
  double phase = std::atan2(-fi.v, fi.u);
  if (phase <= -kPi) phase += kTwoPi;
  fi.phase_shift = (fi.u == 0.0 && fi.v == 0.0) ? 0.0 : phase;
  fi.effective_hopping = J * fi.amplitude() / duration;
  return fi;
}

void check_interval(double t, double t_prime) {
  if (!(t_prime > t)) throw ArgumentError("field integrals require t_prime > t");
}

}  // namespace

double FieldIntegrals::amplitude() const { return std::hypot(u, v); }

FieldIntegrals field_integrals(const FieldProfile& field, double t, double t_prime, double J,
                               const QuadratureOptions& opts) {
  check_interval(t, t_prime);
  auto angle = [&](double s) { return impulse(field, t, s); };
  const auto uv = integrate_phase(angle, t, t_prime, opts);
  return assemble(uv, t_prime - t, impulse(field, t, t_prime), J);
}

FieldIntegrals field_integrals(const FluxProfile& flux, double t, double t_prime, double J,
                               const QuadratureOptions& opts) {
  check_interval(t, t_prime);
  auto angle = [&](double s) { return -flux.phase(s); };
  const auto uv = integrate_phase(angle, t, t_prime, opts);
  return assemble(uv, t_prime - t, flux.phase(t) - flux.phase(t_prime), J);
}

namespace {

template <typename Angle, typename Impulse>
std::vector<FieldIntegrals> series(const Angle& angle, const Impulse& total_impulse, double origin,
                                   std::span<const double> times, double J,
                                   const QuadratureOptions& opts) {
  std::vector<FieldIntegrals> out;
  out.reserve(times.size());
  std::complex<double> acc = 0.0;
  double last = origin;
  for (double t : times) {
    if (t < last) throw ArgumentError("series times must be non-decreasing and >= origin");
    if (t > last) acc += integrate_phase(angle, last, t, opts);
    last = t;
    out.push_back(assemble(acc, t - origin, total_impulse(t), J));
  }
  return out;
}

}  // namespace

std::vector<FieldIntegrals> field_integrals_series(const FieldProfile& field, double origin,
                                                   std::span<const double> times, double J,
                                                   const QuadratureOptions& opts) {
  auto angle = [&](double s) { return impulse(field, origin, s); };
  auto total = [&](double t) { return impulse(field, origin, t); };
  return series(angle, total, origin, times, J, opts);
}

std::vector<FieldIntegrals> field_integrals_series(const FluxProfile& flux, double origin,
                                                   std::span<const double> times, double J,
                                                   const QuadratureOptions& opts) {
  auto angle = [&](double s) { return -flux.phase(s); };
  auto total = [&](double t) { return flux.phase(origin) - flux.phase(t); };
  return series(angle, total, origin, times, J, opts);
}

}  // namespace blochdrive
