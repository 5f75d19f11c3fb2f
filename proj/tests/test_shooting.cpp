#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "plap/closed_form_bounds.hpp"
#include "plap/numeric.hpp"
#include "plap/profile_analysis.hpp"
#include "plap/shooting.hpp"

using namespace plap;

namespace {

constexpr double kPi = std::numbers::pi;

// First zero of J0 by bisection on the standard library Bessel function.
double j01() {
  double lo = 2.0, hi = 3.0;
  for (int k = 0; k < 200; ++k) {
    const double mid = 0.5 * (lo + hi);
    (std::cyl_bessel_j(0.0, mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST(Shoot, ZeroLambdaGivesConstant) {
  const ShootResult s = shoot(ModelSpace(3, 1.0), 2.5, 0.0, 5.0);
  EXPECT_FALSE(s.first_zero);
  for (std::size_t i = 0; i < s.profile.size(); ++i) {
    EXPECT_EQ(s.profile.u[i], 1.0);
    EXPECT_EQ(s.profile.v[i], 0.0);
  }
}

TEST(Shoot, FlatDiskBesselZero) {
  const double z = j01();
  EXPECT_NEAR(z, 2.404825557695773, 1e-14);
  const ShootResult s = shoot(ModelSpace::flat(2), 2.0, z * z, 1.0 + 1e-3);
  ASSERT_TRUE(s.first_zero);
  EXPECT_NEAR(*s.first_zero, 1.0, 1e-5);
  // The p = 2 solution is J0(j01 r) with u(r0) = 1.
  const RadialProfile& prof = s.profile;
  for (std::size_t i = 0; i < prof.size(); i += 2000) {
    EXPECT_NEAR(prof.u[i], std::cyl_bessel_j(0.0, z * prof.r[i]), 1e-7) << prof.r[i];
  }
}

TEST(Shoot, BelowSpectralBottomStaysPositive) {
  const ShootResult s = shoot(ModelSpace(2, 1.0), 2.0, 0.2, 50.0);
  EXPECT_FALSE(s.first_zero);
  EXPECT_GT(s.profile.u.back(), 0.0);
}

TEST(Shoot, ProfileInvariants) {
  const ShootResult s = shoot(ModelSpace(3, 1.0), 1.5, 0.5, 20.0);
  const RadialProfile& prof = s.profile;
  ASSERT_GT(prof.size(), 2u);
  EXPECT_EQ(prof.u.front(), 1.0);
  EXPECT_LE(prof.v.front(), 0.0);
  for (std::size_t i = 1; i < prof.size(); ++i) EXPECT_LT(prof.u[i], prof.u[i - 1]);
}

TEST(Shoot, RejectsBadInput) {
  EXPECT_THROW(shoot(ModelSpace::flat(2), 1.0, 1.0, 1.0), DomainError);
  EXPECT_THROW(shoot(ModelSpace::flat(2), 2.0, -1.0, 1.0), DomainError);
  EXPECT_THROW(shoot(ModelSpace::flat(2), 2.0, 1.0, 0.0), DomainError);
}

TEST(PiP, Values) {
  EXPECT_NEAR(pi_p(2.0), kPi, 1e-15);
  EXPECT_NEAR(pi_p(3.0), 2.4183991523122903, 1e-15);
  EXPECT_NEAR(pi_p(1.5), 4.8367983046245809, 1e-14);
}

TEST(Interval, ClosedForms) {
  EXPECT_NEAR(interval_eigenvalue_1d(2.0, kPi).lambda, 1.0, 1e-8);
  EXPECT_NEAR(interval_eigenvalue_1d(3.0, pi_p(3.0)).lambda, 2.0, 1e-6);
  EXPECT_NEAR(interval_eigenvalue_1d(1.5, pi_p(1.5)).lambda, 0.5, 1e-6);
  EXPECT_NEAR(interval_eigenvalue_1d(2.0, 1.0).lambda / (kPi * kPi), 1.0, 1e-6);
  for (double p : {1.3, 2.5, 4.0}) {
    const double L = 1.7;
    const double closed = (p - 1) * std::pow(pi_p(p) / L, p);
    EXPECT_LE(relative_difference(interval_eigenvalue_1d(p, L).lambda, closed), 1e-6) << p;
  }
}

TEST(Dirichlet, BracketContract) {
  DirichletOptions opts;
  const EigenResult e = dirichlet_eigenvalue(ModelSpace(2, 1.0), 2.5, 10.0, opts);
  EXPECT_LT(e.lambda_lo, e.lambda_hi);
  EXPECT_LE(e.lambda_hi - e.lambda_lo, opts.tol * e.lambda_hi);
  ASSERT_TRUE(e.boundary_zero);
  EXPECT_NEAR(*e.boundary_zero, 10.0, 1e-5 * 10.0);
  EXPECT_TRUE(e.zero_monotone);
  EXPECT_EQ(e.method, EigenMethod::shoot);
  EXPECT_GT(e.iterations, 0);
}

TEST(Dirichlet, FlatDisk) {
  const double z = j01();
  EXPECT_LE(relative_difference(dirichlet_eigenvalue(ModelSpace::flat(2), 2.0, 1.0).lambda, z * z), 1e-8);
}

TEST(Dirichlet, HyperbolicPlaneAtForty) {
  const double lambda = dirichlet_eigenvalue(ModelSpace(2, 1.0), 2.0, 40.0).lambda;
  EXPECT_GT(lambda, 0.25);
  EXPECT_LT(lambda, 0.258);
}

TEST(Dirichlet, HyperbolicThreeSpaceAnalytic) {
  // u = sin(pi r / R) / sinh r solves the n = 3, p = 2 problem with lambda = 1 + pi^2/R^2.
  for (double R : {2.0, 5.0, 10.0}) {
    EXPECT_LE(relative_difference(dirichlet_eigenvalue(ModelSpace(3, 1.0), 2.0, R).lambda, 1.0 + kPi * kPi / (R * R)),
              1e-8)
        << R;
  }
}

TEST(Dirichlet, FlatScaling) {
  for (int n : {2, 3})
    for (double p : {1.5, 2.5}) {
      const double a = dirichlet_eigenvalue(ModelSpace::flat(n), p, 1.0).lambda;
      const double b = dirichlet_eigenvalue(ModelSpace::flat(n), p, 2.0).lambda;
      EXPECT_LE(relative_difference(b, a * std::pow(2.0, -p)), 1e-6) << n << " " << p;
    }
}

TEST(Dirichlet, StartupHalving) {
  for (double p : {1.5, 3.0}) {
    DirichletOptions half;
    half.shoot.startup_fraction = 0.5e-6;
    const ModelSpace ms(3, 1.0);
    EXPECT_LE(relative_difference(dirichlet_eigenvalue(ms, p, 10.0).lambda, dirichlet_eigenvalue(ms, p, 10.0, half).lambda),
              1e-8);
  }
}

TEST(Dirichlet, FirstZeroDecreasesInLambda) {
  const ModelSpace ms(2, 1.0);
  const double lambda1 = dirichlet_eigenvalue(ms, 2.5, 10.0).lambda;
  ShootOptions probe;
  probe.grid_points = 0;
  double prev = 1e300;
  for (int k = 1; k <= 10; ++k) {
    const ShootResult s = shoot(ms, 2.5, lambda1 * (1.0 + 0.1 * k), 10.0, probe);
    ASSERT_TRUE(s.first_zero);
    EXPECT_LT(*s.first_zero, prev);
    prev = *s.first_zero;
  }
}

TEST(Dirichlet, DecreasingInRadiusAndAboveBound) {
  for (int n : {2, 3})
    for (double p : {1.5, 2.0, 3.0}) {
      const ModelSpace ms(n, 1.0);
      double prev = 1e300;
      for (double R : {2.0, 5.0, 10.0, 20.0, 40.0}) {
        const double lambda = dirichlet_eigenvalue(ms, p, R).lambda;
        EXPECT_LT(lambda, prev);
        EXPECT_GT(lambda, eigen_upper_bound(n, p, 1.0));
        prev = lambda;
      }
    }
}

TEST(Dirichlet, GroundStateResidual) {
  const EigenResult e = dirichlet_eigenvalue(ModelSpace(2, 1.0), 2.0, 10.0);
  EXPECT_LE(e.residual, 1e-4);
  EXPECT_LE(relative_equation_residual(e.profile, RadialRange{1.0, 9.0}), 1e-4);
}

TEST(Dirichlet, BracketingFailureIsReported) {
  DirichletOptions opts;
  opts.max_doublings = 0;
  EXPECT_THROW(dirichlet_eigenvalue(ModelSpace::flat(2), 2.0, 1.0, opts), SolverError);
}
