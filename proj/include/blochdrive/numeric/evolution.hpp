#pragma once

#include <vector>

#include "blochdrive/core/types.hpp"
#include "blochdrive/numeric/hamiltonian.hpp"
#include "blochdrive/numeric/stepper.hpp"

namespace blochdrive {

// Measured packet observables at one instant.
struct ObservableSample {
  double t = 0.0;
  double center = 0.0;            // <j>
  double width = 0.0;             // sqrt(<j^2> - <j>^2)
  double central_momentum = 0.0;  // circular mean in (-pi, pi]; NaN when undefined
  double group_velocity = 0.0;    // finite difference of center
  double norm = 0.0;              // ||psi||
  double edge_occupancy = 0.0;    // chain only; 0 on a ring
};

struct ObservableSeries {
  std::vector<ObservableSample> samples;

  std::size_t size() const { return samples.size(); }
  const ObservableSample& operator[](std::size_t i) const { return samples[i]; }
};

struct Snapshot {
  double t = 0.0;
  StateVector state;
};

struct RunOptions {
  StepMethod method = StepMethod::exact_diag;
  int sample_every = 1;       // observables every this many steps (and at the end)
  int snapshot_every = 0;     // keep full states every this many steps; 0 keeps none
  double edge_abort = 1e-4;   // chain runs abort above this edge occupancy
  int edge_width = 0;         // 0 selects default_edge_width(lattice)
};

struct EvolutionResult {
  StateVector final_state;
  ObservableSeries series;
  std::vector<Snapshot> snapshots;
  long decompositions = 0;
};

// Time-steps the state through the grid with the Hamiltonian sampled at each
// step midpoint t_n + eps/2. Throws BoundaryContaminationError when a chain
// sample exceeds options.edge_abort.
EvolutionResult run_evolution(const StateVector& initial, const LatticeSpec& lattice,
                              const Drive& drive, const TimeGrid& grid,
                              const RunOptions& options = {});

// Observables of one state, without the finite-difference velocity.
ObservableSample measure(const StateVector& state, const LatticeSpec& lattice, double t,
                         int edge_width = 0);

// Circular mean arg(sum_k |c_k|^2 e^{ik}) in (-pi, pi]. Throws
// UndefinedMomentumError when the mean vector is shorter than 1e-6.
double central_momentum(const StateVector& state, const LatticeSpec& lattice);

inline constexpr double kMomentumResolution = 1e-6;

}  // namespace blochdrive
