#include "blochdrive/numeric/evolution.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "blochdrive/core/errors.hpp"
#include "blochdrive/core/transforms.hpp"
#include "blochdrive/kernels/kernels.hpp"

namespace blochdrive {
namespace {

// Circular mean of the momentum distribution; NaN when undefined.
double circular_mean(std::span<const cplx> psi, const LatticeSpec& lattice) {
  std::vector<cplx> c(psi.begin(), psi.end());
  transforms::forward_dft(c);
  const MomentumGrid grid(lattice.sites);
  cplx z = 0.0;
  double mass = 0.0;
  for (int m = 0; m < lattice.sites; ++m) {
    const double p = std::norm(c[m]);
    z += p * std::polar(1.0, grid.raw(m));
    mass += p;
  }
  if (!(std::abs(z) >= kMomentumResolution * mass)) return std::numeric_limits<double>::quiet_NaN();
  return wrap_angle(std::arg(z));
}

ObservableSample observe(std::span<const cplx> psi, const LatticeSpec& lattice, double t,
                         int edge_width) {
  const auto mom = kernels::active().moments(psi);
  ObservableSample s;
  s.t = t;
  s.norm = std::sqrt(mom.mass);
  s.center = mom.first / mom.mass;
  const double var = mom.second / mom.mass - s.center * s.center;
  s.width = std::sqrt(std::max(var, 0.0));
  s.central_momentum = circular_mean(psi, lattice);
  if (lattice.is_chain()) {
    const std::size_t n = psi.size();
    const std::size_t w = std::min<std::size_t>(static_cast<std::size_t>(edge_width), n / 2);
    double edge = 0.0;
    for (std::size_t j = 0; j < w; ++j) edge += std::norm(psi[j]) + std::norm(psi[n - 1 - j]);
    s.edge_occupancy = edge;
  }
  return s;
}

void fill_group_velocity(std::vector<ObservableSample>& s) {
  const std::size_t n = s.size();
  if (n < 2) return;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t lo = (i == 0) ? 0 : i - 1;
    const std::size_t hi = (i + 1 == n) ? n - 1 : i + 1;
    s[i].group_velocity = (s[hi].center - s[lo].center) / (s[hi].t - s[lo].t);
  }
}

}  // namespace

ObservableSample measure(const StateVector& state, const LatticeSpec& lattice, double t,
                         int edge_width) {
  if (state.size() != static_cast<std::size_t>(lattice.sites)) {
    throw ArgumentError("state size does not match lattice");
  }
  return observe(state.amplitudes(), lattice, t,
                 edge_width > 0 ? edge_width : default_edge_width(lattice));
}

double central_momentum(const StateVector& state, const LatticeSpec& lattice) {
  if (state.size() != static_cast<std::size_t>(lattice.sites)) {
    throw ArgumentError("state size does not match lattice");
  }
  const double k = circular_mean(state.amplitudes(), lattice);
  if (std::isnan(k)) throw UndefinedMomentumError("momentum distribution has no circular mean");
  return k;
}

EvolutionResult run_evolution(const StateVector& initial, const LatticeSpec& lattice,
                              const Drive& drive, const TimeGrid& grid,
                              const RunOptions& options) {
  lattice.validate();
  grid.validate();
  if (initial.size() != static_cast<std::size_t>(lattice.sites)) {
    throw ArgumentError("state size does not match lattice");
  }
  if (options.sample_every < 1) throw ArgumentError("sample_every must be >= 1");
  if (options.snapshot_every < 0) throw ArgumentError("snapshot_every must be >= 0");
  const int edge_width = options.edge_width > 0 ? options.edge_width : default_edge_width(lattice);
  const double eps = grid.step();

  EvolutionResult result;
  std::vector<cplx> psi(initial.amplitudes().begin(), initial.amplitudes().end());
  Stepper stepper(options.method);

  auto record = [&](int n) {
    const double t = grid.time(n);
    if (n % options.sample_every == 0 || n == grid.steps) {
      auto s = observe(psi, lattice, t, edge_width);
      if (lattice.is_chain() && s.edge_occupancy > options.edge_abort) {
        std::ostringstream os;
        os << "boundary contamination at t = " << t << ": edge occupancy " << s.edge_occupancy
           << " exceeds " << options.edge_abort;
        throw BoundaryContaminationError(os.str(), t, s.edge_occupancy);
      }
      result.series.samples.push_back(s);
    }
    if (options.snapshot_every > 0 && (n % options.snapshot_every == 0 || n == grid.steps)) {
      result.snapshots.push_back({t, StateVector::unchecked(psi)});
    }
  };

  record(0);
  for (int n = 0; n < grid.steps; ++n) {
    const double mid = grid.time(n) + 0.5 * eps;
    stepper.apply(psi, build_hamiltonian(lattice, drive, mid), eps);
    record(n + 1);
  }
  fill_group_velocity(result.series.samples);
  result.final_state = StateVector::unchecked(std::move(psi));
  result.decompositions = stepper.decompositions();
  return result;
}

}  // namespace blochdrive
