#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "plap/numeric.hpp"
#include "plap/rayleigh.hpp"
#include "plap/rayleigh_kernels.hpp"
#include "plap/shooting.hpp"

using namespace plap;
namespace kn = plap::kernels;

namespace {

std::vector<double> random_field(std::size_t size, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> u(size);
  for (double& x : u) x = dist(rng);
  u.back() = 0.0;
  return u;
}

}  // namespace

TEST(RayleighKernels, BackendsBitwiseEqual) {
  for (std::size_t N : {100u, 2047u, 2048u, 2049u, 10000u}) {
    const kn::RayleighMesh mesh = make_rayleigh_mesh(ModelSpace(3, 1.0), 7.0, N);
    const std::vector<double> u = random_field(N + 1, static_cast<unsigned>(N));
    for (double p : {1.5, 2.0, 3.7}) {
      EXPECT_EQ(kn::serial::energy(u, mesh, p), kn::omp::energy(u, mesh, p));
      EXPECT_EQ(kn::serial::mass(u, mesh, p), kn::omp::mass(u, mesh, p));
      EXPECT_EQ(kn::serial::max_slope(u, mesh), kn::omp::max_slope(u, mesh));
      std::vector<double> a1(N), a2(N), b1(N), b2(N);
      kn::serial::stiffness(u, mesh, p, 1e-8, a1);
      kn::omp::stiffness(u, mesh, p, 1e-8, a2);
      kn::serial::mass_load(u, mesh, p, b1);
      kn::omp::mass_load(u, mesh, p, b2);
      EXPECT_EQ(a1, a2);
      EXPECT_EQ(b1, b2);
    }
  }
}

TEST(RayleighKernels, EnergyAndMassOnLinearField) {
  // u = 1 - r/R on the flat disk: slope 1/R everywhere.
  const std::size_t N = 1000;
  const double R = 2.0;
  const kn::RayleighMesh mesh = make_rayleigh_mesh(ModelSpace::flat(2), R, N);
  std::vector<double> u(N + 1);
  for (std::size_t j = 0; j <= N; ++j) u[j] = 1.0 - static_cast<double>(j) / static_cast<double>(N);
  const double p = 2.0;
  double weight_sum = 0.0;
  for (double w : mesh.mid_weight) weight_sum += w * mesh.h;
  EXPECT_NEAR(kn::serial::energy(u, mesh, p), weight_sum / (R * R), 1e-12 * weight_sum);
  EXPECT_NEAR(kn::serial::max_slope(u, mesh), 1.0 / R, 1e-12);
}

TEST(RayleighKernels, ThomasMatchesRowEquations) {
  const std::size_t n = 9;
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> pos(0.5, 2.0), any(-1.0, 1.0);
  std::vector<double> a(n), rhs(n), y(n);
  for (double& x : a) x = pos(rng);
  for (double& x : rhs) x = any(rng);
  kn::solve_stiffness(a, rhs, y);
  for (std::size_t j = 0; j < n; ++j) {
    const double am = j > 0 ? a[j - 1] : 0.0;
    const double ym = j > 0 ? y[j - 1] : 0.0;
    const double yp = j + 1 < n ? y[j + 1] : 0.0;
    EXPECT_NEAR((am + a[j]) * y[j] - am * ym - a[j] * yp, rhs[j], 1e-12) << j;
  }
}

TEST(RayleighKernels, SizeMismatchRejected) {
  std::vector<double> a(3, 1.0), rhs(4, 1.0), y(3);
  EXPECT_THROW(kn::solve_stiffness(a, rhs, y), DomainError);
}

TEST(Rayleigh, FlatDisk) {
  const double j01 = 2.404825557695773;
  const EigenResult e = rayleigh_minimize(ModelSpace::flat(2), 2.0, 1.0);
  EXPECT_EQ(e.method, EigenMethod::rayleigh);
  EXPECT_LE(relative_difference(e.lambda, j01 * j01), 1e-3);
  EXPECT_DOUBLE_EQ(e.profile.u.front(), 1.0);
  EXPECT_EQ(e.profile.u.back(), 0.0);
}

TEST(Rayleigh, AgreesWithShooting) {
  const ModelSpace ms(3, 1.0);
  const double shot = dirichlet_eigenvalue(ms, 2.5, 10.0).lambda;
  const double ray = rayleigh_minimize(ms, 2.5, 10.0).lambda;
  EXPECT_LE(relative_difference(ray, shot), 1e-3);
}

TEST(Rayleigh, SerialAndOpenMPAgreeBitwise) {
  RayleighOptions serial;
  serial.backend = kn::Backend::serial;
  serial.mesh_size = 1000;
  RayleighOptions parallel = serial;
  parallel.backend = kn::Backend::openmp;
  const ModelSpace ms(2, 1.0);
  const EigenResult a = rayleigh_minimize(ms, 1.8, 6.0, serial);
  const EigenResult b = rayleigh_minimize(ms, 1.8, 6.0, parallel);
  EXPECT_EQ(a.lambda, b.lambda);
  EXPECT_EQ(a.iterations, b.iterations);
  EXPECT_EQ(a.profile.u, b.profile.u);
}

TEST(Rayleigh, IntervalClosedForm) {
  EXPECT_LE(relative_difference(rayleigh_interval_1d(3.0, pi_p(3.0)).lambda, 2.0), 1e-3);
  EXPECT_LE(relative_difference(rayleigh_interval_1d(2.0, 1.0).lambda, M_PI * M_PI), 1e-3);
}

TEST(Rayleigh, RejectsBadInput) {
  RayleighOptions coarse;
  coarse.mesh_size = 99;
  EXPECT_THROW(rayleigh_minimize(ModelSpace::flat(2), 2.0, 1.0, coarse), DomainError);
  EXPECT_THROW(rayleigh_minimize(ModelSpace::flat(2), 1.0, 1.0), DomainError);
  EXPECT_THROW(rayleigh_minimize(ModelSpace::flat(2), 2.0, -1.0), DomainError);
  EXPECT_THROW(rayleigh_interval_1d(2.0, 0.0), DomainError);
}

TEST(Rayleigh, IterationCapReported) {
  RayleighOptions capped;
  capped.max_iterations = 1;
  capped.tol = 1e-15;
  EXPECT_THROW(rayleigh_minimize(ModelSpace(2, 1.0), 3.0, 10.0, capped), SolverError);
}
