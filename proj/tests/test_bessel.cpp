#include <cmath>

#include <gtest/gtest.h>

#include "blochdrive/analytic/bessel.hpp"
#include "blochdrive/core/errors.hpp"

using namespace blochdrive;

TEST(Bessel, KnownValues) {
  EXPECT_DOUBLE_EQ(bessel_jn(0, 0.0), 1.0);
  EXPECT_DOUBLE_EQ(bessel_jn(1, 0.0), 0.0);
  EXPECT_NEAR(bessel_jn(1, 1.0), 0.44005058574493355, 1e-15);
  EXPECT_NEAR(bessel_jn(0, 1.0), 0.7651976865579666, 1e-15);
  EXPECT_NEAR(bessel_jn(2, 5.0), 0.04656511627775222, 1e-14);
  EXPECT_NEAR(bessel_jn(0, 30.0), -0.08636798358104436, 1e-12);
}

TEST(Bessel, AgreesWithStandardLibrary) {
  for (int n = 0; n <= 20; ++n)
    for (double z = 0.0; z <= 50.0; z += 0.73)
      EXPECT_NEAR(bessel_jn(n, z), std::cyl_bessel_j(double(n), z), 1e-12) << n << ' ' << z;
}

TEST(Bessel, SeriesAndIntegralPathsAgree) {
  for (int n = 0; n <= 10; ++n)
    for (double z = 0.0; z <= 12.0; z += 0.25)
      EXPECT_NEAR(bessel_jn_series(n, z), bessel_jn_integral(n, z), 1e-10) << n << ' ' << z;
}

TEST(Bessel, Recurrence) {
  for (int n = 1; n <= 10; ++n)
    for (double z = 0.1; z <= 10.0; z += 0.1)
      EXPECT_NEAR(bessel_jn(n - 1, z) + bessel_jn(n + 1, z), 2 * n / z * bessel_jn(n, z), 1e-10);
}

TEST(Bessel, NegativeArgumentsAndOrders) {
  EXPECT_NEAR(bessel_jn(3, -2.0), -bessel_jn(3, 2.0), 1e-15);
  EXPECT_NEAR(bessel_jn(2, -2.0), bessel_jn(2, 2.0), 1e-15);
  EXPECT_NEAR(bessel_jn_signed(-3, 1.5), -bessel_jn(3, 1.5), 1e-15);
  EXPECT_NEAR(bessel_jn_signed(-2, 1.5), bessel_jn(2, 1.5), 1e-15);
}

TEST(Bessel, RangeIsEnforced) {
  EXPECT_THROW(bessel_jn(21, 1.0), ArgumentError);
  EXPECT_THROW(bessel_jn(-1, 1.0), ArgumentError);
  EXPECT_THROW(bessel_jn(0, 50.5), ArgumentError);
  EXPECT_THROW(bessel_jn_series(0, 13.0), ArgumentError);
}

TEST(Bessel, ZerosOfJ0) {
  EXPECT_NEAR(bessel_j0_root(1), 2.404825557695773, 1e-11);
  EXPECT_NEAR(bessel_j0_root(2), 5.520078110286311, 1e-11);
  EXPECT_NEAR(bessel_j0_root(5), 14.930917708487787, 1e-11);
  for (int i = 1; i <= 5; ++i) EXPECT_NEAR(bessel_jn(0, bessel_j0_root(i)), 0.0, 1e-12);
  EXPECT_THROW(bessel_j0_root(0), ArgumentError);
  EXPECT_THROW(bessel_j0_root(6), ArgumentError);
  // the often quoted 0.768 pi lies just past the root
  EXPECT_GT(0.768 * 3.141592653589793, bessel_j0_root(1));
  EXPECT_NEAR(bessel_j0_root(1) / 3.141592653589793, 0.7655, 1e-4);
}
