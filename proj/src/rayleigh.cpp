#include "plap/rayleigh.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

#include "plap/numeric.hpp"
#include "plap/radial_profile.hpp"

namespace plap {

namespace kn = kernels;

kn::RayleighMesh make_rayleigh_mesh(const ModelSpace& ms, double R, std::size_t intervals) {
  require(R > 0.0 && std::isfinite(R), "rayleigh: R must be > 0");
  require(intervals >= 100, "rayleigh: mesh_size must be >= 100");
  kn::RayleighMesh mesh;
  mesh.h = R / static_cast<double>(intervals);
  std::vector<double> log_mid(intervals);
  std::vector<double> log_node(intervals + 1);
  for (std::size_t i = 0; i < intervals; ++i) log_mid[i] = log_volume_weight(ms, (static_cast<double>(i) + 0.5) * mesh.h);
  for (std::size_t j = 0; j <= intervals; ++j) log_node[j] = log_volume_weight(ms, static_cast<double>(j) * mesh.h);
  double top = -std::numeric_limits<double>::infinity();
  for (double x : log_mid) top = std::max(top, x);
  for (double x : log_node) top = std::max(top, x);
  mesh.mid_weight.resize(intervals);
  mesh.node_weight.resize(intervals + 1);
  for (std::size_t i = 0; i < intervals; ++i) mesh.mid_weight[i] = std::exp(log_mid[i] - top);
  for (std::size_t j = 0; j <= intervals; ++j) {
    const double trapezoid = (j == 0 || j == intervals) ? 0.5 : 1.0;
    mesh.node_weight[j] = std::isinf(log_node[j]) ? 0.0 : trapezoid * std::exp(log_node[j] - top);
  }
  return mesh;
}

namespace {

void normalize(std::vector<double>& u, const kn::RayleighMesh& mesh, double p, kn::Backend b) {
  const double scale = pow_nonneg(kn::mass(b, u, mesh, p), -1.0 / p);
  for (double& x : u) x *= scale;
}

double quotient(const std::vector<double>& u, const kn::RayleighMesh& mesh, double p, kn::Backend b) {
  return kn::energy(b, u, mesh, p) / kn::mass(b, u, mesh, p);
}

}  // namespace

EigenResult rayleigh_minimize(const ModelSpace& ms, double p, double R, const RayleighOptions& opts) {
  require(p > 1.0 && std::isfinite(p), "rayleigh: p must be > 1");
  require(opts.tol > 0.0, "rayleigh: tol must be > 0");
  const kn::RayleighMesh mesh = make_rayleigh_mesh(ms, R, opts.mesh_size);
  const std::size_t N = mesh.intervals();
  const kn::Backend backend = opts.backend;

  std::vector<double> u(N + 1);
  for (std::size_t j = 0; j <= N; ++j) u[j] = std::cos(0.5 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(N));
  u[N] = 0.0;
  normalize(u, mesh, p, backend);
  double Q = quotient(u, mesh, p, backend);

  std::vector<double> a(N), rhs(N), y(N), trial(N + 1);
  double change = std::numeric_limits<double>::infinity();
  int iterations = 0;
  while (change >= opts.tol) {
    if (iterations >= opts.max_iterations) {
      std::ostringstream os;
      os.precision(12);
      os << "rayleigh: no convergence after " << iterations << " iterations; last quotient " << Q
         << ", last relative change " << change;
      throw SolverError(os.str());
    }
    ++iterations;
    const double floor = 1e-14 * kn::max_slope(backend, u, mesh);
    kn::stiffness(backend, u, mesh, p, floor, a);
    kn::mass_load(backend, u, mesh, p, rhs);
    kn::solve_stiffness(a, rhs, y);

    // Inverse-iteration direction Q y - u, with step halving until Q decreases.
    double t = 1.0;
    double Q_new = Q;
    bool accepted = false;
    for (int k = 0; k < 40; ++k, t *= 0.5) {
      for (std::size_t j = 0; j < N; ++j) trial[j] = u[j] + t * (Q * y[j] - u[j]);
      trial[N] = 0.0;
      Q_new = quotient(trial, mesh, p, backend);
      if (std::isfinite(Q_new) && Q_new < Q) {
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      // No descent left at double precision: already at the discrete minimum.
      change = 0.0;
      break;
    }
    u.swap(trial);
    normalize(u, mesh, p, backend);
    change = (Q - Q_new) / Q;
    Q = Q_new;
  }

  require(u[0] != 0.0, "rayleigh: degenerate minimizer");
  const double scale = 1.0 / u[0];
  RadialProfile prof(ms, p, Q, R);
  prof.r = uniform_grid(0.0, R, N + 1);
  prof.u.resize(N + 1);
  prof.v.resize(N + 1);
  for (std::size_t j = 0; j <= N; ++j) prof.u[j] = u[j] * scale;
  for (std::size_t j = 0; j <= N; ++j) {
    double du = 0.0;  // symmetric at the center
    if (j == N) {
      du = (prof.u[N] - prof.u[N - 1]) / mesh.h;
    } else if (j > 0) {
      du = (prof.u[j + 1] - prof.u[j - 1]) / (2.0 * mesh.h);
    }
    prof.v[j] = signed_pow(du, p - 1.0);
  }

  EigenResult result(std::move(prof));
  result.lambda = Q;
  result.lambda_lo = Q;
  result.lambda_hi = Q;
  result.residual = change;
  result.iterations = iterations;
  result.method = EigenMethod::rayleigh;
  return result;
}

EigenResult rayleigh_interval_1d(double p, double L, const RayleighOptions& opts) {
  require(L > 0.0 && std::isfinite(L), "rayleigh_interval_1d: L must be > 0");
  return rayleigh_minimize(ModelSpace::interval(), p, 0.5 * L, opts);
}

}  // namespace plap
