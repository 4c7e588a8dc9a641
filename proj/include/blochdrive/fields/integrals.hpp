#pragma once

#include <span>
#include <vector>

#include "blochdrive/fields/profile.hpp"
#include "blochdrive/fields/quadrature.hpp"

namespace blochdrive {

// Time integrals that parameterize the exact propagator over [t, t_prime].
// With the drive angle theta(s) (chain: I(s, t); ring: -phi(s)),
//   u = int cos theta,  v = int sin theta,
// and for every momentum k
//   int cos(k - theta) = u cos k + v sin k = sqrt(u^2+v^2) cos(k + phase_shift).
struct FieldIntegrals {
  double duration = 0.0;
  double u = 0.0;
  double v = 0.0;
  double phase_shift = 0.0;      // arg(u - i v) in (-pi, pi]
  double impulse = 0.0;          // I(t_prime, t)
  double effective_hopping = 0.0;  // J sqrt(u^2+v^2) / duration

  double amplitude() const;  // sqrt(u^2 + v^2)
};

// Chain drive. Throws ArgumentError unless t_prime > t and NumericalError
// when the quadrature misses its tolerance.
FieldIntegrals field_integrals(const FieldProfile& field, double t, double t_prime, double J,
                               const QuadratureOptions& opts = {});

// Ring drive; for a flux equivalent to a field (phi = -I) this coincides
// with the chain result started at t = 0.
FieldIntegrals field_integrals(const FluxProfile& flux, double t, double t_prime, double J,
                               const QuadratureOptions& opts = {});

// Integrals over [origin, times[i]] for a non-decreasing list of times, built
// by accumulating consecutive pieces. times[i] == origin yields the
// zero-duration limit (u = v = 0, effective hopping J).
std::vector<FieldIntegrals> field_integrals_series(const FieldProfile& field, double origin,
                                                   std::span<const double> times, double J,
                                                   const QuadratureOptions& opts = {});
std::vector<FieldIntegrals> field_integrals_series(const FluxProfile& flux, double origin,
                                                   std::span<const double> times, double J,
                                                   const QuadratureOptions& opts = {});

}  // namespace blochdrive
