#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "blochdrive/core/types.hpp"
#include "blochdrive/kernels/kernels.hpp"
#include "blochdrive/numeric/hamiltonian.hpp"

namespace blochdrive {

enum class StepMethod {
  exact_diag,  // exp(-i H eps) from the eigendecomposition of H
  split_step,  // Strang splitting, hopping applied exactly in its eigenbasis
};

std::string_view to_string(StepMethod m);
StepMethod parse_step_method(std::string_view name);

// Applies exp(-i H eps) to a mutable amplitude buffer.
// exact_diag: chain matrices are diagonalized with LAPACK's divide-and-conquer
// tridiagonal solver; rings are circulant and are diagonalized by the DFT,
// with eigenvalues taken from the matrix's first row. The last decomposition
// is kept and reused while H and eps stay bit-identical, which makes runs
// through stretches of constant field cheap.
// split_step (chain): exp(-iV eps/2) exp(-iT eps) exp(-iV eps/2) with the
// open-chain hopping T diagonalized by the sine transform. A ring has no
// on-site term, so both methods coincide there.
// One Stepper per run; not shareable between threads.
class Stepper {
 public:
  Stepper(StepMethod method, const kernels::KernelTable& kernels = kernels::active());

  void apply(std::span<cplx> psi, const HamiltonianMatrix& h, double eps);

  StepMethod method() const { return method_; }
  // Number of eigendecompositions performed so far.
  long decompositions() const { return decompositions_; }

 private:
  void exact_chain(std::span<cplx> psi, const HamiltonianMatrix& h, double eps);
  void circulant(std::span<cplx> psi, const HamiltonianMatrix& h, double eps);
  void split_chain(std::span<cplx> psi, const HamiltonianMatrix& h, double eps);

  StepMethod method_;
  const kernels::KernelTable* kernels_;

  HamiltonianMatrix cached_h_;
  double cached_eps_ = 0.0;
  bool cache_valid_ = false;
  std::vector<double> basis_;    // eigenvectors, column-major
  std::vector<cplx> phases_;     // exp(-i lambda eps)
  std::vector<cplx> potential_;  // half-step on-site phases (split_step)
  std::vector<cplx> scratch_;
  long decompositions_ = 0;
};

// One step on an immutable state. Throws NumericalError when the
// eigensolver fails and ArgumentError for eps <= 0.
StateVector evolve_step(const StateVector& state, const HamiltonianMatrix& h, double eps,
                        StepMethod method);

}  // namespace blochdrive
