#pragma once

#include <vector>

#include "blochdrive/core/types.hpp"
#include "blochdrive/fields/integrals.hpp"
#include "blochdrive/fields/profile.hpp"

namespace blochdrive {

// Diagonal of the exact ring propagator U(t_prime, t) on the momentum grid:
// exp(i 2 J_eff cos(k + phase_shift) (t_prime - t)).
std::vector<cplx> ring_propagator_phases(const FluxProfile& flux, const LatticeSpec& lattice,
                                         double t, double t_prime);

// Applies ring_propagator_phases in momentum space.
StateVector ring_propagate_state(const StateVector& state, const FluxProfile& flux,
                                 const LatticeSpec& lattice, double t, double t_prime);

// Exact infinite-chain propagator on the N-point grid: dispersion phases in
// momentum space, then the rigid momentum shift -I(t_prime, t) realized as
// the site-space ramp exp(-i I (j - offset)).
// Throws StateError when the edge occupancy of `state` is 1e-8 or more,
// since the closed form describes an unbounded chain.
StateVector chain_propagate_state(const StateVector& state, const FieldProfile& field,
                                  const LatticeSpec& lattice, double t, double t_prime);

inline constexpr double kChainEdgeTolerance = 1e-8;

}  // namespace blochdrive
