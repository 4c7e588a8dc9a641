#include "blochdrive/analytic/packet.hpp"

#include <cmath>

#include "blochdrive/core/errors.hpp"
#include "blochdrive/core/transforms.hpp"
#include "blochdrive/fields/integrals.hpp"

namespace blochdrive {
namespace {

// Chain and ring packets share D(t) = 2J (u sin k0 - v cos k0), which equals
// 2 J_eff sin(k0 + phase_shift) t.
double displacement(const FieldIntegrals& fi, double J, double k0) {
  return 2.0 * J * (fi.u * std::sin(k0) - fi.v * std::cos(k0));
}

double dispersion_phase(const FieldIntegrals& fi, double J, double k0) {
  return 2.0 * J * (fi.u * std::cos(k0) + fi.v * std::sin(k0));
}

EvolvedPacket chain_packet(const PacketParams& p, const FieldIntegrals& fi, double J, double t) {
  EvolvedPacket e;
  e.time = t;
  e.alpha = p.alpha;
  e.k_center = wrap_angle(p.k0 - fi.impulse);
  e.displacement = displacement(fi, J, p.k0);
  e.center = p.center + e.displacement;
  e.phase = dispersion_phase(fi, J, p.k0) - p.center * fi.impulse;
  return e;
}

EvolvedPacket ring_packet(const PacketParams& p, const FieldIntegrals& fi, double J, double t) {
  EvolvedPacket e;
  e.time = t;
  e.alpha = p.alpha;
  e.k_center = wrap_angle(p.k0);
  e.displacement = displacement(fi, J, p.k0);
  e.center = p.center + e.displacement;
  // Printed form: 2 J_eff [cos(k0 + phase_shift) + k0 sin(k0 + phase_shift)] t.
  e.phase = dispersion_phase(fi, J, p.k0) + p.k0 * e.displacement;
  return e;
}

void check_time(double t) {
  if (!(t >= 0.0)) throw ArgumentError("packets are evolved from t = 0 forward");
}

}  // namespace

StateVector gwp_build(const PacketParams& params, const LatticeSpec& lattice) {
  lattice.validate();
  if (!(params.alpha > 0.0)) throw ArgumentError("alpha must be positive");
  if (!(params.center >= 0.0 && params.center <= lattice.sites - 1)) {
    throw ArgumentError("packet center must lie within the lattice");
  }
  if (params.position_spread() > lattice.sites / 4.0) {
    throw ArgumentError("packet too wide for lattice: spread exceeds N/4");
  }
  const MomentumGrid grid(lattice.sites);
  std::vector<cplx> c(lattice.sites);
  for (int m = 0; m < lattice.sites; ++m) {
    // Representative of k_m nearest k0, so that exp(-i N_A k) is smooth
    // across the packet for non-integer centers.
    const double dk = wrap_angle(grid.raw(m) - params.k0);
    const double k = params.k0 + dk;
    c[m] = std::exp(-dk * dk / (params.alpha * params.alpha)) * std::polar(1.0, -params.center * k);
  }
  return StateVector::normalize(dft_to_sites(c, lattice));
}

EvolvedPacket gwp_evolve_params(const PacketParams& params, const FieldProfile& field, double J,
                                double t) {
  check_time(t);
  if (t == 0.0) return chain_packet(params, FieldIntegrals{}, J, 0.0);
  return chain_packet(params, field_integrals(field, 0.0, t, J), J, t);
}

EvolvedPacket gwp_evolve_params(const PacketParams& params, const FluxProfile& flux, double J,
                                double t) {
  check_time(t);
  if (t == 0.0) return ring_packet(params, FieldIntegrals{}, J, 0.0);
  return ring_packet(params, field_integrals(flux, 0.0, t, J), J, t);
}

std::vector<EvolvedPacket> gwp_evolve_series(const PacketParams& params, const FieldProfile& field,
                                             double J, std::span<const double> times) {
  const auto fis = field_integrals_series(field, 0.0, times, J);
  std::vector<EvolvedPacket> out;
  out.reserve(fis.size());
  for (std::size_t i = 0; i < fis.size(); ++i) out.push_back(chain_packet(params, fis[i], J, times[i]));
  return out;
}

std::vector<EvolvedPacket> gwp_evolve_series(const PacketParams& params, const FluxProfile& flux,
                                             double J, std::span<const double> times) {
  const auto fis = field_integrals_series(flux, 0.0, times, J);
  std::vector<EvolvedPacket> out;
  out.reserve(fis.size());
  for (std::size_t i = 0; i < fis.size(); ++i) out.push_back(ring_packet(params, fis[i], J, times[i]));
  return out;
}

double group_velocity(const PacketParams& params, const FieldProfile& field, double J, double t) {
  return 2.0 * J * std::sin(params.k0 - signed_impulse(field, 0.0, t));
}

double group_velocity(const PacketParams& params, const FluxProfile& flux, double J, double t) {
  return 2.0 * J * std::sin(params.k0 + flux.phase(t));
}

}  // namespace blochdrive
