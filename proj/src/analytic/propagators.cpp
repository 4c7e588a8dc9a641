#include "blochdrive/analytic/propagators.hpp"

#include <cmath>
#include <sstream>

#include "blochdrive/core/errors.hpp"
#include "blochdrive/core/transforms.hpp"

namespace blochdrive {
namespace {

std::vector<cplx> dispersion_phases(const FieldIntegrals& fi, const LatticeSpec& lattice) {
  const MomentumGrid grid(lattice.sites);
  const double J = lattice.hopping;
  std::vector<cplx> phases(lattice.sites);
  for (int m = 0; m < lattice.sites; ++m) {
    const double k = grid.raw(m);
    phases[m] = std::polar(1.0, 2.0 * J * (fi.u * std::cos(k) + fi.v * std::sin(k)));
  }
  return phases;
}

void check_times(double t, double t_prime) {
  if (!(t_prime >= t)) throw ArgumentError("propagation requires t_prime >= t");
}

}  // namespace

std::vector<cplx> ring_propagator_phases(const FluxProfile& flux, const LatticeSpec& lattice,
                                         double t, double t_prime) {
  lattice.validate();
  if (!lattice.is_ring()) throw ArgumentError("ring propagator requires a ring lattice");
  check_times(t, t_prime);
  if (t_prime == t) return std::vector<cplx>(lattice.sites, cplx{1.0, 0.0});
  return dispersion_phases(field_integrals(flux, t, t_prime, lattice.hopping), lattice);
}

StateVector ring_propagate_state(const StateVector& state, const FluxProfile& flux,
                                 const LatticeSpec& lattice, double t, double t_prime) {
  const auto phases = ring_propagator_phases(flux, lattice, t, t_prime);
  auto c = dft_to_momentum(state, lattice);
  for (std::size_t m = 0; m < c.size(); ++m) c[m] *= phases[m];
  return StateVector::unchecked(dft_to_sites(c, lattice));
}

StateVector chain_propagate_state(const StateVector& state, const FieldProfile& field,
                                  const LatticeSpec& lattice, double t, double t_prime) {
  lattice.validate();
  if (!lattice.is_chain()) throw ArgumentError("chain propagator requires a chain lattice");
  check_times(t, t_prime);
  const double edge = edge_occupancy(state, default_edge_width(lattice));
  if (edge >= kChainEdgeTolerance) {
    std::ostringstream os;
    os << "edge occupancy " << edge << " too large for the infinite-chain propagator";
    throw StateError(os.str());
  }
  if (t_prime == t) return state;
  const auto fi = field_integrals(field, t, t_prime, lattice.hopping);
  auto c = dft_to_momentum(state, lattice);
  const auto phases = dispersion_phases(fi, lattice);
  for (std::size_t m = 0; m < c.size(); ++m) c[m] *= phases[m];
  auto psi = dft_to_sites(c, lattice);
  for (int j = 0; j < lattice.sites; ++j) {
    psi[j] *= std::polar(1.0, -fi.impulse * (j - lattice.position_offset));
  }
  return StateVector::unchecked(std::move(psi));
}

}  // namespace blochdrive
