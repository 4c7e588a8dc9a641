#include <cmath>
#include <cstdlib>
#include <random>

#include <gtest/gtest.h>

#include "blochdrive/core/errors.hpp"
#include "blochdrive/core/transforms.hpp"
#include "blochdrive/core/types.hpp"
#include "blochdrive/kernels/kernels.hpp"

using namespace blochdrive;

namespace {

std::vector<cplx> random_amplitudes(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<cplx> a(n);
  for (auto& z : a) z = {g(rng), g(rng)};
  return a;
}

}  // namespace

TEST(WrapAngle, LandsInHalfOpenInterval) {
  EXPECT_DOUBLE_EQ(wrap_angle(kPi), kPi);
  EXPECT_DOUBLE_EQ(wrap_angle(-kPi), kPi);
  EXPECT_NEAR(wrap_angle(3 * kPi / 2), -kPi / 2, 1e-15);
  EXPECT_NEAR(wrap_angle(-2 * kPi), 0.0, 1e-15);
  for (double x = -20; x < 20; x += 0.37) {
    const double w = wrap_angle(x);
    EXPECT_GT(w, -kPi);
    EXPECT_LE(w, kPi);
    EXPECT_NEAR(std::remainder(w - x, kTwoPi), 0.0, 1e-12);
  }
}

TEST(LatticeSpec, DefaultsAndValidation) {
  const auto c = LatticeSpec::chain(200);
  EXPECT_EQ(c.position_offset, 100);
  EXPECT_EQ(LatticeSpec::chain(7).position_offset, 3);
  EXPECT_NO_THROW(c.validate());
  EXPECT_THROW(LatticeSpec::chain(1).validate(), ArgumentError);
  EXPECT_THROW(LatticeSpec::ring(2).validate(), ArgumentError);
  EXPECT_THROW(LatticeSpec::chain(10, 0.0).validate(), ArgumentError);
  EXPECT_THROW(LatticeSpec::chain(10, -1.0).validate(), ArgumentError);
}

TEST(TimeGrid, StepNeverExceedsRequest) {
  const auto g = TimeGrid::with_step(0.0, 5 * kTwoPi, 0.01);
  EXPECT_LE(g.step(), 0.01);
  EXPECT_EQ(g.steps, 3142);
  EXPECT_DOUBLE_EQ(g.time(g.steps), 5 * kTwoPi);
  EXPECT_EQ(TimeGrid::with_step(0.0, 1.0, 0.1).steps, 10);
  EXPECT_THROW(TimeGrid::with_step(1.0, 0.0, 0.1), ArgumentError);
  EXPECT_THROW(TimeGrid::with_step(0.0, 1.0, 0.0), ArgumentError);
}

TEST(StateVector, NormalizationIsChecked) {
  EXPECT_THROW(StateVector::normalized({1.0, 1.0}), ArgumentError);
  const auto s = StateVector::normalized({1 / std::sqrt(2.0), cplx(0, 1 / std::sqrt(2.0))});
  EXPECT_NEAR(s.norm(), 1.0, 1e-15);
  const auto n = StateVector::normalize({3.0, 4.0});
  EXPECT_NEAR(std::abs(n[0]), 0.6, 1e-15);
  EXPECT_THROW(StateVector::normalize({0.0, 0.0}), ArgumentError);
  EXPECT_THROW(StateVector::site(4, 4), ArgumentError);
}

TEST(StateVector, FidelityAndDistance) {
  const auto a = StateVector::site(3, 0);
  const auto b = StateVector::site(3, 1);
  EXPECT_DOUBLE_EQ(fidelity(a, a), 1.0);
  EXPECT_DOUBLE_EQ(fidelity(a, b), 0.0);
  EXPECT_DOUBLE_EQ(probability_distance(a, a), 0.0);
  EXPECT_NEAR(probability_distance(a, b), std::sqrt(2.0), 1e-15);
  // a global phase changes neither
  const auto c = StateVector::normalized({cplx(0, 1), 0.0, 0.0});
  EXPECT_DOUBLE_EQ(fidelity(a, c), 1.0);
}

TEST(EdgeOccupancy, CountsBothEnds) {
  const auto lattice = LatticeSpec::chain(200);
  EXPECT_EQ(default_edge_width(lattice), 10);
  EXPECT_EQ(default_edge_width(LatticeSpec::chain(10)), 1);
  EXPECT_DOUBLE_EQ(edge_occupancy(StateVector::site(200, 0), 10), 1.0);
  EXPECT_DOUBLE_EQ(edge_occupancy(StateVector::site(200, 190), 10), 1.0);
  EXPECT_DOUBLE_EQ(edge_occupancy(StateVector::site(200, 189), 10), 0.0);
}

TEST(MomentumGrid, ValuesWrapIntoBrillouinZone) {
  MomentumGrid g(4);
  EXPECT_DOUBLE_EQ(g.value(0), 0.0);
  EXPECT_DOUBLE_EQ(g.value(1), kPi / 2);
  EXPECT_DOUBLE_EQ(g.value(2), kPi);
  EXPECT_DOUBLE_EQ(g.value(3), -kPi / 2);
}

TEST(Dft, UniformStateSitsAtZeroMomentum) {
  const int N = 16;
  const auto s = StateVector::normalized(std::vector<cplx>(N, 1 / std::sqrt(double(N))));
  const auto c = dft_to_momentum(s, LatticeSpec::ring(N));
  EXPECT_NEAR(std::abs(c[0]), 1.0, 1e-14);
  for (int m = 1; m < N; ++m) EXPECT_NEAR(std::abs(c[m]), 0.0, 1e-14);
}

TEST(Dft, SiteDeltaHasFlatSpectrum) {
  const int N = 12;
  const auto p = momentum_distribution(StateVector::site(N, 0), LatticeSpec::chain(N));
  for (double x : p) EXPECT_NEAR(x, 1.0 / N, 1e-15);
}

TEST(Dft, FourPointHandComputed) {
  // (1, i, -1, -i)/2 = e^{i k j}/2 with k = pi/2
  const auto s = StateVector::normalized({0.5, cplx(0, 0.5), -0.5, cplx(0, -0.5)});
  const auto c = dft_to_momentum(s, LatticeSpec::ring(4));
  EXPECT_NEAR(std::abs(c[1]), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(c[0]) + std::abs(c[2]) + std::abs(c[3]), 0.0, 1e-15);
}

TEST(Dft, RoundTripAndParseval) {
  std::mt19937_64 rng(7);
  for (int N : {3, 8, 31, 200}) {
    const auto s = StateVector::normalize(random_amplitudes(N, rng));
    const auto lattice = LatticeSpec::chain(N);
    const auto c = dft_to_momentum(s, lattice);
    double norm = 0.0;
    for (auto z : c) norm += std::norm(z);
    EXPECT_NEAR(norm, 1.0, 1e-12);
    const auto back = dft_to_sites(c, lattice);
    for (int j = 0; j < N; ++j) EXPECT_NEAR(std::abs(back[j] - s[j]), 0.0, 1e-12);
  }
}

TEST(SineTransform, IsOrthonormalInvolution) {
  std::mt19937_64 rng(11);
  const int N = 37;
  auto data = random_amplitudes(N, rng);
  const auto original = data;
  double before = 0, after = 0;
  for (auto z : data) before += std::norm(z);
  transforms::sine_transform(data);
  for (auto z : data) after += std::norm(z);
  EXPECT_NEAR(after, before, 1e-12 * before);
  transforms::sine_transform(data);
  for (int j = 0; j < N; ++j) EXPECT_NEAR(std::abs(data[j] - original[j]), 0.0, 1e-12);
}

class KernelEquivalence : public ::testing::Test {
 protected:
  void SetUp() override {
    fast_ = kernels::avx2();
    if (!fast_) GTEST_SKIP() << "AVX2 kernels unavailable on this CPU";
  }
  const kernels::KernelTable* fast_ = nullptr;
};

TEST_F(KernelEquivalence, ProjectExpandMultiplyMoments) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  for (int n : {1, 2, 3, 5, 8, 13, 64, 199, 200}) {
    std::vector<double> basis(static_cast<std::size_t>(n) * n);
    for (auto& b : basis) b = g(rng);
    const auto in = random_amplitudes(n, rng);
    std::vector<cplx> a(n), b(n);

    kernels::scalar().project(basis, in, a);
    fast_->project(basis, in, b);
    for (int i = 0; i < n; ++i) EXPECT_NEAR(std::abs(a[i] - b[i]), 0.0, 1e-12 * (1 + std::abs(a[i])));

    kernels::scalar().expand(basis, in, a);
    fast_->expand(basis, in, b);
    for (int i = 0; i < n; ++i) EXPECT_NEAR(std::abs(a[i] - b[i]), 0.0, 1e-12 * (1 + std::abs(a[i])));

    auto x = in, y = in;
    const auto f = random_amplitudes(n, rng);
    kernels::scalar().multiply(x, f);
    fast_->multiply(y, f);
    for (int i = 0; i < n; ++i) EXPECT_NEAR(std::abs(x[i] - y[i]), 0.0, 1e-13 * (1 + std::abs(x[i])));

    const auto ms = kernels::scalar().moments(in);
    const auto mf = fast_->moments(in);
    EXPECT_NEAR(ms.mass, mf.mass, 1e-12 * ms.mass);
    EXPECT_NEAR(ms.first, mf.first, 1e-12 * (1 + std::abs(ms.first)));
    EXPECT_NEAR(ms.second, mf.second, 1e-12 * (1 + ms.second));
  }
}

TEST(KernelDispatch, ScalarOverrideIsHonored) {
  // active() is fixed per process; just check it is one of the known tables
  const auto& k = kernels::active();
  const bool known = &k == &kernels::scalar() || &k == kernels::avx2();
  EXPECT_TRUE(known);
  if (const char* env = std::getenv("BLOCH_DRIVE_SIMD"); env && std::string(env) == "scalar") {
    EXPECT_EQ(&k, &kernels::scalar());
  }
}
