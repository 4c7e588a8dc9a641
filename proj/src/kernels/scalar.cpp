#include <cstdlib>
#include <string_view>

#include "blochdrive/kernels/kernels.hpp"

namespace blochdrive::kernels {
namespace {

void project_scalar(std::span<const double> basis, std::span<const cplx> in, std::span<cplx> out) {
  const std::size_t n = in.size();
  for (std::size_t m = 0; m < out.size(); ++m) {
    const double* col = basis.data() + m * n;
    double re = 0.0, im = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      re += col[j] * in[j].real();
      im += col[j] * in[j].imag();
    }
    out[m] = {re, im};
  }
}

void expand_scalar(std::span<const double> basis, std::span<const cplx> in, std::span<cplx> out) {
  const std::size_t n = out.size();
  for (std::size_t j = 0; j < n; ++j) out[j] = 0.0;
  for (std::size_t m = 0; m < in.size(); ++m) {
    const double* col = basis.data() + m * n;
    const double wr = in[m].real(), wi = in[m].imag();
    for (std::size_t j = 0; j < n; ++j) {
      out[j] = {out[j].real() + col[j] * wr, out[j].imag() + col[j] * wi};
    }
  }
}

void multiply_scalar(std::span<cplx> data, std::span<const cplx> factors) {
  for (std::size_t i = 0; i < data.size(); ++i) {
    const double ar = data[i].real(), ai = data[i].imag();
    const double br = factors[i].real(), bi = factors[i].imag();
    data[i] = {ar * br - ai * bi, ai * br + ar * bi};
  }
}

Moments moments_scalar(std::span<const cplx> psi) {
  Moments m;
  for (std::size_t j = 0; j < psi.size(); ++j) {
    const double p = std::norm(psi[j]);
    const double x = static_cast<double>(j);
    m.mass += p;
    m.first += x * p;
    m.second += x * x * p;
  }
  return m;
}

constexpr KernelTable kScalar{"scalar", project_scalar, expand_scalar, multiply_scalar,
                              moments_scalar};

}  // namespace

const KernelTable& scalar() { return kScalar; }

const KernelTable* avx2() { return detail::avx2_table(); }

const KernelTable& active() {
  static const KernelTable* table = [] {
    const char* env = std::getenv("BLOCH_DRIVE_SIMD");
    if (env != nullptr && std::string_view(env) == "scalar") return &kScalar;
    const KernelTable* fast = avx2();
    return fast != nullptr ? fast : &kScalar;
  }();
  return *table;
}

}  // namespace blochdrive::kernels
