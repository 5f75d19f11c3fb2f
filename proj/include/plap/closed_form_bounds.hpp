#pragma once

namespace plap {

/// Parameters feeding every closed-form estimate: dimension, exponent,
/// curvature scale and an eigenvalue candidate lambda >= 0.
struct SpectralInput {
  int n = 2;
  double p = 2.0;
  double K = 1.0;
  double lambda = 0.0;
};

/// Term-by-term evaluation of a gradient estimate for |grad h|^p, h = (p-1) log u:
/// total = prefactor * (linear_term + sqrt_value), sqrt_value = sqrt(sqrt_argument).
struct BoundBreakdown {
  double prefactor = 0.0;
  double linear_term = 0.0;
  double sqrt_argument = 0.0;
  double sqrt_value = 0.0;
  double total = 0.0;
};

/// Upper bound ((n-1)K/p)^p on the bottom of the p-Laplacian spectrum.
double eigen_upper_bound(int n, double p, double K);

/// Cheng's bound (n-1)^2 K^2 / 4 for the Laplacian.
double cheng_bound(int n, double K);

/// Gradient estimate for positive solutions with p > 2.
/// Requires 0 <= lambda <= eigen_upper_bound (values above by at most 1e-12
/// relative are clamped onto the bound).
BoundBreakdown grad_bound_supercritical(const SpectralInput& in);

/// Gradient estimate for positive solutions with 1 < p < 2; same lambda contract.
BoundBreakdown grad_bound_subcritical(const SpectralInput& in);

/// Dispatches on p; p == 2 is rejected.
BoundBreakdown grad_bound(const SpectralInput& in);

/// lambda = 0 specialisation for positive p-harmonic functions.
/// p == 2 returns the limit value (n-1)^2 K^2.
double p_harmonic_bound(int n, double p, double K);

/// Relative slack by which lambda may exceed eigen_upper_bound and still be accepted.
inline constexpr double kLambdaClampTolerance = 1e-12;

/// Validates lambda against the eigenvalue bound and clamps the 1e-12 overshoot.
double admissible_lambda(int n, double p, double K, double lambda);

}  // namespace plap
