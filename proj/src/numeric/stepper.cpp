#include "blochdrive/numeric/stepper.hpp"

#include <lapacke.h>

#include <cmath>
#include <string>

#include "blochdrive/core/errors.hpp"
#include "blochdrive/core/transforms.hpp"

namespace blochdrive {

std::string_view to_string(StepMethod m) {
  return m == StepMethod::exact_diag ? "exact_diag" : "split_step";
}

StepMethod parse_step_method(std::string_view name) {
  if (name == "exact_diag") return StepMethod::exact_diag;
  if (name == "split_step") return StepMethod::split_step;
  throw ArgumentError("unknown step method '" + std::string(name) + "'");
}

Stepper::Stepper(StepMethod method, const kernels::KernelTable& kernels)
    : method_(method), kernels_(&kernels) {}

void Stepper::apply(std::span<cplx> psi, const HamiltonianMatrix& h, double eps) {
  if (!(eps > 0.0)) throw ArgumentError("time step must be positive");
  if (psi.size() != static_cast<std::size_t>(h.size())) {
    throw ArgumentError("state size does not match Hamiltonian");
  }
  if (h.structure == LatticeKind::ring) {
    circulant(psi, h, eps);
  } else if (method_ == StepMethod::exact_diag) {
    exact_chain(psi, h, eps);
  } else {
    split_chain(psi, h, eps);
  }
}

void Stepper::exact_chain(std::span<cplx> psi, const HamiltonianMatrix& h, double eps) {
  const int n = h.size();
  if (!cache_valid_ || eps != cached_eps_ || !(h == cached_h_)) {
    std::vector<double> d = h.diagonal;
    std::vector<double> e(static_cast<std::size_t>(std::max(n - 1, 1)));
    for (int j = 0; j + 1 < n; ++j) {
      if (h.bonds[j].imag() != 0.0) throw ArgumentError("chain bonds must be real");
      e[j] = h.bonds[j].real();
    }
    basis_.assign(static_cast<std::size_t>(n) * n, 0.0);
    const lapack_int info = LAPACKE_dstedc(LAPACK_COL_MAJOR, 'I', n, d.data(), e.data(),
                                           basis_.data(), n);
    if (info != 0) {
      cache_valid_ = false;
      throw NumericalError("tridiagonal eigensolver failed (info " + std::to_string(info) + ")",
                           static_cast<double>(info));
    }
    phases_.resize(n);
    for (int m = 0; m < n; ++m) phases_[m] = std::polar(1.0, -d[m] * eps);
    cached_h_ = h;
    cached_eps_ = eps;
    cache_valid_ = true;
    ++decompositions_;
  }
  scratch_.resize(n);
  kernels_->project(basis_, psi, scratch_);
  kernels_->multiply(scratch_, phases_);
  kernels_->expand(basis_, scratch_, psi);
}

void Stepper::circulant(std::span<cplx> psi, const HamiltonianMatrix& h, double eps) {
  const int n = h.size();
  if (!cache_valid_ || eps != cached_eps_ || !(h == cached_h_)) {
    for (int j = 0; j < n; ++j) {
      if (h.diagonal[j] != h.diagonal[0] || h.bonds[j] != h.bonds[0]) {
        throw ArgumentError("ring Hamiltonian is not circulant");
      }
    }
    // First row: H(0,0) = d, H(0,1) = b, H(0,N-1) = conj(b).
    const cplx b = h.bonds[0];
    const MomentumGrid grid(n);
    phases_.resize(n);
    for (int m = 0; m < n; ++m) {
      const double k = grid.raw(m);
      const double lambda = h.diagonal[0] + (b * std::polar(1.0, k) + std::conj(b) * std::polar(1.0, -k)).real();
      phases_[m] = std::polar(1.0, -lambda * eps);
    }
    cached_h_ = h;
    cached_eps_ = eps;
    cache_valid_ = true;
    ++decompositions_;
  }
  transforms::forward_dft(psi);
  kernels_->multiply(psi, phases_);
  transforms::inverse_dft(psi);
}

void Stepper::split_chain(std::span<cplx> psi, const HamiltonianMatrix& h, double eps) {
  const int n = h.size();
  // Hopping eigenvalues of the open chain: 2 b cos(pi (m+1)/(N+1)), b = H(j, j+1).
  if (!cache_valid_ || eps != cached_eps_ || h.bonds != cached_h_.bonds) {
    for (int j = 0; j + 1 < n; ++j) {
      if (h.bonds[j] != h.bonds[0] || h.bonds[j].imag() != 0.0) {
        throw ArgumentError("split_step needs uniform real chain bonds");
      }
    }
    const double b = h.bonds[0].real();
    phases_.resize(n);
    for (int m = 0; m < n; ++m) {
      const double lambda = 2.0 * b * std::cos(kPi * (m + 1) / (n + 1));
      phases_[m] = std::polar(1.0, -lambda * eps);
    }
    cached_h_.bonds = h.bonds;
    cached_eps_ = eps;
    cache_valid_ = true;
  }
  potential_.resize(n);
  for (int j = 0; j < n; ++j) potential_[j] = std::polar(1.0, -0.5 * eps * h.diagonal[j]);
  kernels_->multiply(psi, potential_);
  transforms::sine_transform(psi);
  kernels_->multiply(psi, phases_);
  transforms::sine_transform(psi);
  kernels_->multiply(psi, potential_);
}

StateVector evolve_step(const StateVector& state, const HamiltonianMatrix& h, double eps,
                        StepMethod method) {
  std::vector<cplx> psi(state.amplitudes().begin(), state.amplitudes().end());
  Stepper stepper(method);
  stepper.apply(psi, h, eps);
  return StateVector::unchecked(std::move(psi));
}

}  // namespace blochdrive
