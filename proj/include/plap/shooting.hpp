#pragma once

#include <cstddef>
#include <optional>

#include "plap/eigen_result.hpp"
#include "plap/model_geometry.hpp"
#include "plap/radial_profile.hpp"

namespace plap {

struct ShootOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-30;
  /// Startup radius r0 = startup_fraction * R.
  double startup_fraction = 1e-6;
  /// Uniform profile grid size on [r0, end]; 0 skips profile recording.
  std::size_t grid_points = 20001;
};

struct ShootResult {
  explicit ShootResult(RadialProfile prof) : profile(std::move(prof)) {}

  RadialProfile profile;
  /// First zero of u in (0, R], if any.
  std::optional<double> first_zero;
  std::size_t steps = 0;
};

/// Integrates the radial equation (w v)' = -lambda w |u|^{p-2} u, u' = |v|^{1/(p-1)} sgn v
/// from a series startup at r0 with u(r0) = 1; stops at the first zero of u or at R.
ShootResult shoot(const ModelSpace& ms, double p, double lambda, double R, const ShootOptions& opts = {});

struct DirichletOptions {
  /// Relative bracket width: stop when lambda_hi - lambda_lo <= tol * lambda_hi.
  double tol = 1e-10;
  /// lambda_hi may grow by at most 2^max_doublings over its starting value.
  int max_doublings = 10;
  int max_bisections = 200;
  ShootOptions shoot;
};

/// First Dirichlet eigenvalue of B(R) by bisection on lambda using the first-zero test.
EigenResult dirichlet_eigenvalue(const ModelSpace& ms, double p, double R, const DirichletOptions& opts = {});

/// First Dirichlet eigenvalue of the interval (0, L) with weight 1; computed
/// on the symmetric half-interval [0, L/2].
EigenResult interval_eigenvalue_1d(double p, double L, const DirichletOptions& opts = {});

/// Generalized half-period pi_p = 2 pi / (p sin(pi / p)).
double pi_p(double p);

}  // namespace plap
