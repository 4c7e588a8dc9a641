#include "blochdrive/core/transforms.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include "blochdrive/core/errors.hpp"

namespace blochdrive {
namespace {

enum class PlanKind { forward, inverse, sine };

struct PlanDeleter {
  void operator()(fftw_plan_s* p) const { fftw_destroy_plan(p); }
};
using PlanPtr = std::unique_ptr<fftw_plan_s, PlanDeleter>;

// FFTW_ESTIMATE keeps plan selection independent of timing, so repeated
// runs produce identical bytes.
fftw_plan plan_for(PlanKind kind, int n) {
  static std::mutex mutex;
  static std::map<std::pair<PlanKind, int>, PlanPtr> plans;
  std::lock_guard lock(mutex);
  auto& slot = plans[{kind, n}];
  if (!slot) {
    constexpr unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    std::vector<cplx> scratch(static_cast<std::size_t>(n));
    auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
    fftw_plan p = nullptr;
    switch (kind) {
      case PlanKind::forward:
        p = fftw_plan_dft_1d(n, buf, buf, FFTW_FORWARD, flags);
        break;
      case PlanKind::inverse:
        p = fftw_plan_dft_1d(n, buf, buf, FFTW_BACKWARD, flags);
        break;
      case PlanKind::sine: {
        // Two interleaved real sequences (re, im) with stride 2.
        auto* rbuf = reinterpret_cast<double*>(scratch.data());
        fftw_r2r_kind rk = FFTW_RODFT00;
        p = fftw_plan_many_r2r(1, &n, 2, rbuf, nullptr, 2, 1, rbuf, nullptr, 2, 1, &rk, flags);
        break;
      }
    }
    if (p == nullptr) throw NumericalError("FFTW plan creation failed", 0.0);
    slot.reset(p);
  }
  return slot.get();
}

}  // namespace

namespace transforms {

void forward_dft(std::span<cplx> data) {
  const int n = static_cast<int>(data.size());
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(plan_for(PlanKind::forward, n), buf, buf);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (auto& c : data) c *= scale;
}

void inverse_dft(std::span<cplx> data) {
  const int n = static_cast<int>(data.size());
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(plan_for(PlanKind::inverse, n), buf, buf);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (auto& c : data) c *= scale;
}

void sine_transform(std::span<cplx> data) {
  const int n = static_cast<int>(data.size());
  auto* buf = reinterpret_cast<double*>(data.data());
  fftw_execute_r2r(plan_for(PlanKind::sine, n), buf, buf);
  const double scale = 1.0 / std::sqrt(2.0 * (n + 1));
  for (auto& c : data) c *= scale;
}

}  // namespace transforms

std::vector<cplx> dft_to_momentum(const StateVector& state, const LatticeSpec& lattice) {
  if (state.size() != static_cast<std::size_t>(lattice.sites)) {
    throw ArgumentError("state size does not match lattice");
  }
  std::vector<cplx> c(state.amplitudes().begin(), state.amplitudes().end());
  transforms::forward_dft(c);
  return c;
}

std::vector<cplx> dft_to_sites(std::span<const cplx> momentum, const LatticeSpec& lattice) {
  if (momentum.size() != static_cast<std::size_t>(lattice.sites)) {
    throw ArgumentError("momentum vector size does not match lattice");
  }
  std::vector<cplx> psi(momentum.begin(), momentum.end());
  transforms::inverse_dft(psi);
  return psi;
}

std::vector<double> momentum_distribution(const StateVector& state, const LatticeSpec& lattice) {
  const auto c = dft_to_momentum(state, lattice);
  std::vector<double> p(c.size());
  for (std::size_t m = 0; m < c.size(); ++m) p[m] = std::norm(c[m]);
  return p;
}

}  // namespace blochdrive
