#pragma once

#include <vector>

#include "plap/radial_profile.hpp"

namespace plap {

struct RadialRange {
  double lo = 0.0;
  double hi = 0.0;
};

/// h = (p-1) log u, its derivative h' = (p-1) u'/u and G = |h'|^p sampled on the profile grid.
struct GradientProfile {
  std::vector<double> r;
  std::vector<double> h;
  std::vector<double> dh;
  std::vector<double> G;
};

/// Whole profile; throws if u <= 0 anywhere.
GradientProfile h_and_G(const RadialProfile& prof);
/// Grid points with r in [range.lo, range.hi]; throws if u <= 0 there.
GradientProfile h_and_G(const RadialProfile& prof, RadialRange range);

/// max over interior grid points in range of |Delta_p h + |h'|^p + (p-1)^{p-1} lambda|,
/// with Delta_p h = (w |h'|^{p-2} h')' / w by central differences.
/// range.lo must be > 0.
double equation_residual(const RadialProfile& prof, RadialRange range);

/// equation_residual divided by (p-1)^{p-1} lambda, or by max G on the range when lambda = 0.
double relative_equation_residual(const RadialProfile& prof, RadialRange range);

/// sup_{r <= R/2} G / sup_{r <= R} G; 1 when G vanishes identically.
double sigma_ratio(const RadialProfile& prof, double R);

/// max of G over grid points with r <= fraction * prof.R.
double sup_gradient(const RadialProfile& prof, double fraction);

}  // namespace plap
