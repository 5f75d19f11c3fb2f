#pragma once

#include <cstddef>

#include "plap/eigen_result.hpp"
#include "plap/model_geometry.hpp"
#include "plap/rayleigh_kernels.hpp"

namespace plap {

struct RayleighOptions {
  std::size_t mesh_size = 4000;  ///< number of mesh intervals on [0, R]; at least 100
  double tol = 1e-10;            ///< stop when the quotient changes by less than tol * Q
  int max_iterations = 20000;
  kernels::Backend backend = kernels::Backend::openmp;
};

/// Builds the weighted mesh of the discretized Rayleigh quotient on [0, R].
kernels::RayleighMesh make_rayleigh_mesh(const ModelSpace& ms, double R, std::size_t intervals);

/// Minimizes int |u'|^p w / int |u|^p w over mesh functions with u(R) = 0 by
/// lagged inverse iteration with a monotone line search and p-norm
/// normalization. The returned profile lives on the mesh nodes, u(0) = 1.
EigenResult rayleigh_minimize(const ModelSpace& ms, double p, double R, const RayleighOptions& opts = {});

/// Same on the interval (0, L) with w = 1, via the half-interval [0, L/2].
EigenResult rayleigh_interval_1d(double p, double L, const RayleighOptions& opts = {});

}  // namespace plap
