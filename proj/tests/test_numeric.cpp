#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "plap/numeric.hpp"

using namespace plap;

TEST(PowNonneg, ExactCorners) {
  EXPECT_EQ(pow_nonneg(0.0, 2.5), 0.0);
  EXPECT_EQ(pow_nonneg(0.0, 0.0), 1.0);
  EXPECT_EQ(pow_nonneg(3.7, 0.0), 1.0);
  EXPECT_EQ(pow_nonneg(3.7, 1.0), 3.7);
  EXPECT_TRUE(std::isinf(pow_nonneg(0.0, -1.0)));
}

TEST(PowNonneg, MatchesStdPow) {
  for (double x : {1e-8, 0.3, 1.0, 2.0, 17.5})
    for (double q : {-1.5, 0.5, 1.5, 3.0}) EXPECT_NEAR(pow_nonneg(x, q) / std::pow(x, q), 1.0, 1e-14);
}

TEST(PowNonneg, RejectsNegativeBase) { EXPECT_THROW(pow_nonneg(-1.0, 2.0), DomainError); }

TEST(SignedPow, IsOddAndDualityMap) {
  EXPECT_EQ(signed_pow(0.0, 0.5), 0.0);
  EXPECT_DOUBLE_EQ(signed_pow(-8.0, 1.0 / 3.0), -2.0);
  // |x|^{p-2} x with p = 3
  EXPECT_DOUBLE_EQ(signed_pow(-3.0, 2.0), -9.0);
}

TEST(RelativeDifference, UsesLargerMagnitude) {
  EXPECT_EQ(relative_difference(1.0, 1.1), (1.1 - 1.0) / 1.1);
  EXPECT_EQ(relative_difference(0.0, 0.0), 0.0);
}

TEST(Require, ThrowsDomainError) {
  EXPECT_NO_THROW(require(true, "ok"));
  EXPECT_THROW(require(false, "bad"), DomainError);
}
