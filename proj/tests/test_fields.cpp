#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "blochdrive/analytic/bessel.hpp"
#include "blochdrive/core/errors.hpp"
#include "blochdrive/core/types.hpp"
#include "blochdrive/fields/integrals.hpp"
#include "blochdrive/fields/profile.hpp"
#include "blochdrive/fields/quadrature.hpp"

using namespace blochdrive;

namespace {

std::vector<FieldProfile> sample_profiles() {
  return {
      field::Constant{0.3},
      field::AcDc{1, 0.0, 1.0, 1.0},
      field::AcDc{2, 0.05, 1.7, 2.5},
      field::GaussianTrain{0.886, {2.0, 12.0}},
      field::SawtoothTrain{{{3.0, 2.0, 1.2}, {9.0, 3.0, -0.7}}},
      field::Tabulated{{-1.0, 2.0, 5.0, 9.0, 20.0}, {0.2, -0.4, 1.0, 0.0, 0.3}},
  };
}

}  // namespace

TEST(Evaluate, ClosedForms) {
  EXPECT_DOUBLE_EQ(evaluate(field::Constant{0.5}, 3.0), 0.5);
  EXPECT_DOUBLE_EQ(evaluate(field::AcDc{1, 0.0, 1.0, 1.0}, 0.0), 2.0);
  EXPECT_NEAR(evaluate(field::AcDc{1, 0.02, 1.0, 1.0}, kPi), 0.02, 1e-15);
  EXPECT_NEAR(evaluate(field::GaussianTrain{0.886, {10.0}}, 10.0), std::sqrt(kPi) / (2 * 0.886), 1e-15);
  EXPECT_NEAR(evaluate(field::GaussianTrain{0.886, {10.0}}, 10.0), 1.000256, 1e-6);
}

TEST(Evaluate, GaussianIsZeroBeyondTruncation) {
  const FieldProfile g = field::GaussianTrain{1.0, {0.0}};
  EXPECT_GT(evaluate(g, 7.99), 0.0);
  EXPECT_EQ(evaluate(g, 8.01), 0.0);
  EXPECT_EQ(evaluate(g, -8.01), 0.0);
}

TEST(Evaluate, SawtoothIsATriangle) {
  const FieldProfile s = field::SawtoothTrain{{{5.0, 2.0, 1.5}}};
  EXPECT_DOUBLE_EQ(evaluate(s, 5.0), 1.5);
  EXPECT_DOUBLE_EQ(evaluate(s, 4.5), 0.75);
  EXPECT_DOUBLE_EQ(evaluate(s, 6.0), 0.0);
  EXPECT_DOUBLE_EQ(evaluate(s, 3.0), 0.0);
}

TEST(Evaluate, TabulatedInterpolatesAndGuardsDomain) {
  const FieldProfile t = field::Tabulated{{0.0, 1.0, 3.0}, {0.0, 2.0, -2.0}};
  EXPECT_DOUBLE_EQ(evaluate(t, 0.5), 1.0);
  EXPECT_DOUBLE_EQ(evaluate(t, 2.0), 0.0);
  EXPECT_THROW(evaluate(t, 3.5), DomainError);
  EXPECT_THROW(evaluate(t, -0.1), DomainError);
}

TEST(Profiles, RejectBadParameters) {
  EXPECT_THROW(FieldProfile(field::AcDc{1, 0.0, 1.0, 0.0}), ArgumentError);
  EXPECT_THROW(FieldProfile(field::GaussianTrain{0.0, {1.0}}), ArgumentError);
  EXPECT_THROW(FieldProfile(field::GaussianTrain{1.0, {3.0, 1.0}}), ArgumentError);
  EXPECT_THROW(FieldProfile(field::SawtoothTrain{{{0.0, -1.0, 1.0}}}), ArgumentError);
  EXPECT_THROW(FieldProfile(field::Tabulated{{0.0, 0.0}, {1.0, 1.0}}), ArgumentError);
  EXPECT_THROW(FieldProfile(field::Tabulated{{0.0}, {1.0}}), ArgumentError);
}

TEST(Profiles, CrowdedPulsesOnlyWarn) {
  const FieldProfile g = field::GaussianTrain{1.0, {0.0, 1.0}};
  EXPECT_FALSE(g.warnings().empty());
  const FieldProfile ok = field::GaussianTrain{0.886, {20.0, 40.0}};
  EXPECT_TRUE(ok.warnings().empty());
}

TEST(Impulse, ClosedFormExamples) {
  EXPECT_NEAR(impulse(field::Constant{0.2}, 0.0, 10 * kPi), 2 * kPi, 1e-13);
  EXPECT_NEAR(impulse(field::AcDc{1, 0.0, 1.0, 1.0}, 0.0, kTwoPi), kTwoPi, 1e-13);
  EXPECT_NEAR(impulse(field::GaussianTrain{0.886, {20.0}}, 0.0, 40.0), kPi / 2, 1e-15);
  EXPECT_NEAR(impulse(field::SawtoothTrain{{{5.0, 3.0, kPi / 2}}}, 0.0, 10.0), kPi / 2, 1e-15);
  EXPECT_NEAR(impulse(field::Tabulated{{0.0, 1.0, 3.0}, {0.0, 2.0, -2.0}}, 0.0, 3.0), 1.0, 1e-15);
  EXPECT_THROW(impulse(field::Constant{1.0}, 2.0, 1.0), ArgumentError);
  EXPECT_DOUBLE_EQ(impulse(field::Constant{1.0}, 2.0, 2.0), 0.0);
}

TEST(Impulse, MatchesQuadratureOfEvaluate) {
  for (const auto& p : sample_profiles()) {
    const auto q = paneled_simpson<double>([&](double s) { return evaluate(p, s); }, 0.0, 18.0, 0.5);
    EXPECT_NEAR(impulse(p, 0.0, 18.0), q.value, 1e-8) << p.type_name();
  }
}

TEST(Impulse, IsAdditive) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(0.0, 19.0);
  for (const auto& p : sample_profiles()) {
    for (int i = 0; i < 20; ++i) {
      double t0 = u(rng), t1 = u(rng), t2 = u(rng);
      if (t0 > t1) std::swap(t0, t1);
      if (t1 > t2) std::swap(t1, t2);
      if (t0 > t1) std::swap(t0, t1);
      EXPECT_NEAR(impulse(p, t0, t2), impulse(p, t0, t1) + impulse(p, t1, t2), 1e-12)
          << p.type_name();
    }
  }
}

TEST(Flux, FromFieldStartsAtZeroAndDifferentiatesToMinusField) {
  for (const auto& p : sample_profiles()) {
    const auto flux = FluxProfile::from_field(p);
    EXPECT_NEAR(flux.phase(0.0), 0.0, 1e-15);
    for (double t : {0.7, 3.3, 6.1, 11.9, 15.0}) {
      const double h = 1e-5;
      const double d = (flux.phase(t + h) - flux.phase(t - h)) / (2 * h);
      EXPECT_NEAR(d, -evaluate(p, t), 1e-6) << p.type_name() << " t=" << t;
    }
  }
}

TEST(Flux, DirectAndConstant) {
  EXPECT_DOUBLE_EQ(FluxProfile::constant(0.4).phase(12.0), 0.4);
  const auto f = FluxProfile::direct(field::AcDc{0, 0.0, 2.0, 1.0});
  EXPECT_NEAR(f.phase(0.0), 2.0, 1e-15);
  EXPECT_NEAR(flux_phase_from_quanta(50.0, 200), kPi / 2, 1e-15);
}

TEST(FieldIntegrals, ZeroField) {
  const auto fi = field_integrals(FieldProfile::zero(), 1.0, 4.0, 1.0);
  EXPECT_NEAR(fi.u, 3.0, 1e-12);
  EXPECT_NEAR(fi.v, 0.0, 1e-12);
  EXPECT_NEAR(fi.phase_shift, 0.0, 1e-12);
  EXPECT_NEAR(fi.effective_hopping, 1.0, 1e-12);
  EXPECT_NEAR(fi.impulse, 0.0, 0.0);
}

TEST(FieldIntegrals, UnitConstantFieldOverHalfTurn) {
  const auto fi = field_integrals(field::Constant{1.0}, 0.0, kPi, 1.0);
  EXPECT_NEAR(fi.u, 0.0, 1e-10);
  EXPECT_NEAR(fi.v, 2.0, 1e-10);
  EXPECT_NEAR(fi.phase_shift, -kPi / 2, 1e-10);
  EXPECT_NEAR(fi.effective_hopping, 2.0 / kPi, 1e-10);
}

TEST(FieldIntegrals, RequiresPositiveDuration) {
  EXPECT_THROW(field_integrals(field::Constant{1.0}, 1.0, 1.0, 1.0), ArgumentError);
}

TEST(FieldIntegrals, OnePeriodOfAcDcGivesBesselModulus) {
  for (int n : {0, 1, 2, 3}) {
    for (double F_A : {0.5, 1.0, 2.404825557695773, 3.0}) {
      const double omega = 1.3;
      const double tau = kTwoPi / omega;
      const auto fi = field_integrals(field::AcDc{n, 0.0, F_A, omega}, 0.0, tau, 1.0);
      EXPECT_NEAR(fi.amplitude(), tau * std::abs(bessel_jn(n, F_A / omega)), 1e-9)
          << "n=" << n << " F_A=" << F_A;
    }
  }
}

TEST(FieldIntegrals, FirstBesselRootFreezesDrift) {
  const double root = bessel_j0_root(1);
  const auto fi = field_integrals(field::AcDc{0, 0.0, root, 1.0}, 0.0, kTwoPi, 1.0);
  EXPECT_NEAR(fi.u, 0.0, 1e-9);
  EXPECT_NEAR(fi.v, 0.0, 1e-9);
  EXPECT_LT(fi.effective_hopping, 1e-9);
}

TEST(FieldIntegrals, Invariants) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 18.0);
  std::uniform_real_distribution<double> k(-kPi, kPi);
  for (const auto& p : sample_profiles()) {
    for (int i = 0; i < 10; ++i) {
      double a = u(rng), b = u(rng);
      if (a > b) std::swap(a, b);
      if (b - a < 1e-3) continue;
      const auto fi = field_integrals(p, a, b, 1.3);
      EXPECT_LE(fi.u * fi.u + fi.v * fi.v, (b - a) * (b - a) * (1 + 1e-12));
      EXPECT_GT(fi.phase_shift, -kPi);
      EXPECT_LE(fi.phase_shift, kPi);
      EXPECT_GE(fi.effective_hopping, 0.0);
      EXPECT_LE(fi.effective_hopping, 1.3 * (1 + 1e-12));
      EXPECT_NEAR(fi.impulse, impulse(p, a, b), 1e-12);
      // cos(k) u + sin(k) v factors through the phase shift
      for (int j = 0; j < 5; ++j) {
        const double kk = k(rng);
        EXPECT_NEAR(std::cos(kk) * fi.u + std::sin(kk) * fi.v,
                    fi.amplitude() * std::cos(kk + fi.phase_shift), 1e-12);
      }
    }
  }
}

TEST(FieldIntegrals, SeriesMatchesPointwise) {
  const FieldProfile p = field::AcDc{1, 0.0, 1.0, 1.0};
  const std::vector<double> times{0.0, 0.5, 3.0, 7.7, 12.0};
  const auto series = field_integrals_series(p, 0.0, times, 1.0);
  ASSERT_EQ(series.size(), times.size());
  EXPECT_DOUBLE_EQ(series[0].effective_hopping, 1.0);
  for (std::size_t i = 1; i < times.size(); ++i) {
    const auto direct = field_integrals(p, 0.0, times[i], 1.0);
    EXPECT_NEAR(series[i].u, direct.u, 1e-9);
    EXPECT_NEAR(series[i].v, direct.v, 1e-9);
  }
}

TEST(FieldIntegrals, RingUsesFluxDirectly) {
  const auto flux = FluxProfile::constant(0.7);
  const auto fi = field_integrals(flux, 0.0, 2.0, 1.0);
  // cos(k) u + sin(k) v = 2 cos(k + 0.7)
  EXPECT_NEAR(fi.amplitude(), 2.0, 1e-12);
  EXPECT_NEAR(fi.phase_shift, 0.7, 1e-12);
}

TEST(Quadrature, ConvergesAndReportsFailure) {
  const auto r = adaptive_simpson<double>([](double x) { return std::exp(x); }, 0.0, 1.0);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value, std::exp(1.0) - 1.0, 1e-11);
  QuadratureOptions tight;
  tight.abs_tol = 1e-30;
  tight.max_depth = 3;
  const auto bad = adaptive_simpson<double>([](double x) { return std::sin(50 * x); }, 0.0, 3.0, tight);
  EXPECT_FALSE(bad.converged);
}
