#include <gtest/gtest.h>

#include <cmath>

#include "plap/closed_form_bounds.hpp"
#include "plap/numeric.hpp"
#include "plap/profile_analysis.hpp"

using namespace plap;

namespace {

RadialProfile constant_profile() {
  const auto grid = uniform_grid(0.01, 10.0, 501);
  return make_profile(ModelSpace(3, 1.0), 2.5, 0.0, 10.0, grid, [](double) { return 1.0; }, [](double) { return 0.0; });
}

// u = exp(-(n-1) K r / p): h is linear in r.
RadialProfile exponential_profile(int n, double p, double K, double lambda, double lo, double hi, std::size_t pts) {
  const double s = (n - 1) * K / p;
  const auto grid = uniform_grid(lo, hi, pts);
  return make_profile(ModelSpace(n, K), p, lambda, hi, grid, [s](double r) { return std::exp(-s * r); },
                      [s](double r) { return -s * std::exp(-s * r); });
}

}  // namespace

TEST(HAndG, ConstantProfile) {
  const GradientProfile g = h_and_G(constant_profile());
  for (std::size_t i = 0; i < g.r.size(); ++i) {
    EXPECT_EQ(g.h[i], 0.0);
    EXPECT_EQ(g.G[i], 0.0);
  }
}

TEST(HAndG, ExponentialProfileHasConstantGradient) {
  const int n = 3;
  const double p = 2.5, K = 1.0;
  const GradientProfile g = h_and_G(exponential_profile(n, p, K, 0.0, 0.1, 20.0, 401));
  const double level = (p - 1) * (n - 1) * K / p;
  for (std::size_t i = 0; i < g.r.size(); ++i) {
    EXPECT_NEAR(std::abs(g.dh[i]), level, 1e-13);
    EXPECT_NEAR(g.G[i], std::pow(level, p), 1e-12);
  }
}

TEST(HAndG, RejectsNonpositiveU) {
  const auto grid = uniform_grid(0.1, 2.0, 20);
  const RadialProfile prof = make_profile(ModelSpace::flat(2), 2.0, 1.0, 2.0, grid, [](double r) { return 1.0 - r; },
                                          [](double) { return -1.0; });
  EXPECT_THROW(h_and_G(prof), DomainError);
  EXPECT_NO_THROW(h_and_G(prof, RadialRange{0.1, 0.9}));
}

TEST(EquationResidual, ConstantProfileIsExact) {
  EXPECT_EQ(equation_residual(constant_profile(), RadialRange{1.0, 9.0}), 0.0);
  EXPECT_THROW(equation_residual(constant_profile(), RadialRange{0.0, 9.0}), DomainError);
}

TEST(EquationResidual, ExponentialProfileAtSharpLambdaFarOut) {
  for (double p : {1.5, 2.5, 3.0}) {
    const int n = 2;
    const double K = 1.0;
    const RadialProfile prof = exponential_profile(n, p, K, eigen_upper_bound(n, p, K), 19.9, 20.1, 2001);
    EXPECT_LE(equation_residual(prof, RadialRange{19.95, 20.05}), 1e-8) << "p=" << p;
  }
  // Near the center coth(Kr) > 1 leaves a visible residual.
  const RadialProfile near = exponential_profile(2, 2.5, 1.0, eigen_upper_bound(2, 2.5, 1.0), 0.9, 1.1, 2001);
  EXPECT_GT(equation_residual(near, RadialRange{0.95, 1.05}), 1e-3);
}

TEST(SigmaRatio, DegenerateAndConstantGradient) {
  EXPECT_EQ(sigma_ratio(constant_profile(), 10.0), 1.0);
  EXPECT_NEAR(sigma_ratio(exponential_profile(3, 2.5, 1.0, 0.0, 0.1, 20.0, 401), 20.0), 1.0, 1e-12);
}

TEST(SupGradient, ConstantAndExponential) {
  EXPECT_EQ(sup_gradient(constant_profile(), 0.5), 0.0);
  const double level = std::pow(1.5 * 2.0 / 2.5, 2.5);
  EXPECT_NEAR(sup_gradient(exponential_profile(3, 2.5, 1.0, 0.0, 0.1, 20.0, 401), 0.5), level, 1e-12);
  EXPECT_THROW(sup_gradient(constant_profile(), 0.0), DomainError);
  EXPECT_THROW(sup_gradient(constant_profile(), 1.5), DomainError);
}
