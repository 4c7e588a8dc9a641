#pragma once

#include <span>
#include <vector>

#include "blochdrive/core/types.hpp"
#include "blochdrive/fields/profile.hpp"

namespace blochdrive {

// Gaussian wave packet Lambda sum_k exp[-(k-k0)^2/alpha^2 - i center k] |k>.
struct PacketParams {
  double k0 = 0.0;      // central momentum
  double center = 0.0;  // central position N_A, in site-index units
  double alpha = 0.1;   // momentum-space width parameter

  // alpha <= 0.2: the shape-preserving closed forms apply.
  bool is_wide() const { return alpha <= 0.2; }
  // Standard deviation of the site-probability distribution, 1/alpha.
  double position_spread() const { return 1.0 / alpha; }
};

// Packet parameters after evolving from t = 0 in the wide-packet limit.
struct EvolvedPacket {
  double time = 0.0;
  double k_center = 0.0;      // reduced into (-pi, pi]
  double center = 0.0;        // N_A + D(t)
  double displacement = 0.0;  // D(t)
  double phase = 0.0;         // global phase gamma(t); not an observable
  double alpha = 0.0;
};

// Materialize the packet on the site basis with unit norm. Throws
// ArgumentError when alpha <= 0, the center lies outside the lattice, or the
// position spread exceeds N/4.
StateVector gwp_build(const PacketParams& params, const LatticeSpec& lattice);

// Chain: k_center = k0 - I(t, 0), center = N_A + 2 J_eff sin(k0 + phase_shift) t.
EvolvedPacket gwp_evolve_params(const PacketParams& params, const FieldProfile& field, double J,
                                double t);
// Ring: no momentum shift; displacement from the flux integrals.
EvolvedPacket gwp_evolve_params(const PacketParams& params, const FluxProfile& flux, double J,
                                double t);

// Same as gwp_evolve_params at each of the non-decreasing times, sharing the
// quadrature work between consecutive times.
std::vector<EvolvedPacket> gwp_evolve_series(const PacketParams& params, const FieldProfile& field,
                                             double J, std::span<const double> times);
std::vector<EvolvedPacket> gwp_evolve_series(const PacketParams& params, const FluxProfile& flux,
                                             double J, std::span<const double> times);

// 2J sin(k0 - I(t, 0)).
double group_velocity(const PacketParams& params, const FieldProfile& field, double J, double t);
// 2J sin(k0 + phi(t)).
double group_velocity(const PacketParams& params, const FluxProfile& flux, double J, double t);

}  // namespace blochdrive
