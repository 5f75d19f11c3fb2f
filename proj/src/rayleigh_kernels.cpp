#include "plap/rayleigh_kernels.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "plap/numeric.hpp"

namespace plap::kernels {

namespace {

std::size_t block_count(std::size_t n) { return (n + kReductionBlock - 1) / kReductionBlock; }

template <class Term>
double block_sum(std::size_t b, std::size_t n, Term term) {
  const std::size_t lo = b * kReductionBlock;
  const std::size_t hi = std::min(n, lo + kReductionBlock);
  double s = 0.0;
  for (std::size_t i = lo; i < hi; ++i) s += term(i);
  return s;
}

template <class Term>
double block_max(std::size_t b, std::size_t n, Term term) {
  const std::size_t lo = b * kReductionBlock;
  const std::size_t hi = std::min(n, lo + kReductionBlock);
  double m = 0.0;
  for (std::size_t i = lo; i < hi; ++i) m = std::max(m, term(i));
  return m;
}

template <class Term>
double serial_sum(std::size_t n, Term term) {
  double total = 0.0;
  for (std::size_t b = 0; b < block_count(n); ++b) total += block_sum(b, n, term);
  return total;
}

template <class Term>
double parallel_sum(std::size_t n, Term term) {
  const std::size_t blocks = block_count(n);
  std::vector<double> partial(blocks, 0.0);
  const auto nb = static_cast<long long>(blocks);
#pragma omp parallel for schedule(static)
  for (long long b = 0; b < nb; ++b) partial[static_cast<std::size_t>(b)] = block_sum(static_cast<std::size_t>(b), n, term);
  double total = 0.0;
  for (double x : partial) total += x;
  return total;
}

template <class Term>
double serial_max(std::size_t n, Term term) {
  double m = 0.0;
  for (std::size_t b = 0; b < block_count(n); ++b) m = std::max(m, block_max(b, n, term));
  return m;
}

template <class Term>
double parallel_max(std::size_t n, Term term) {
  const std::size_t blocks = block_count(n);
  std::vector<double> partial(blocks, 0.0);
  const auto nb = static_cast<long long>(blocks);
#pragma omp parallel for schedule(static)
  for (long long b = 0; b < nb; ++b) partial[static_cast<std::size_t>(b)] = block_max(static_cast<std::size_t>(b), n, term);
  double m = 0.0;
  for (double x : partial) m = std::max(m, x);
  return m;
}

void check_sizes(std::span<const double> u, const RayleighMesh& mesh) {
  require(u.size() == mesh.intervals() + 1 && mesh.node_weight.size() == u.size(), "rayleigh kernels: size mismatch");
}

auto energy_term(std::span<const double> u, const RayleighMesh& mesh, double p) {
  return [u, &mesh, p](std::size_t i) {
    return mesh.mid_weight[i] * pow_nonneg(std::abs(u[i + 1] - u[i]) / mesh.h, p) * mesh.h;
  };
}

auto mass_term(std::span<const double> u, const RayleighMesh& mesh, double p) {
  return [u, &mesh, p](std::size_t j) { return mesh.node_weight[j] * pow_nonneg(std::abs(u[j]), p) * mesh.h; };
}

auto slope_term(std::span<const double> u, const RayleighMesh& mesh) {
  return [u, &mesh](std::size_t i) { return std::abs(u[i + 1] - u[i]) / mesh.h; };
}

double stiffness_entry(std::span<const double> u, const RayleighMesh& mesh, double p, double floor, std::size_t i) {
  const double s = std::max(std::abs(u[i + 1] - u[i]) / mesh.h, floor);
  return mesh.mid_weight[i] * pow_nonneg(s, p - 2.0) / mesh.h;
}

double mass_entry(std::span<const double> u, const RayleighMesh& mesh, double p, std::size_t j) {
  return mesh.node_weight[j] * mesh.h * signed_pow(u[j], p - 1.0);
}

}  // namespace

namespace serial {

double energy(std::span<const double> u, const RayleighMesh& mesh, double p) {
  check_sizes(u, mesh);
  return serial_sum(mesh.intervals(), energy_term(u, mesh, p));
}

double mass(std::span<const double> u, const RayleighMesh& mesh, double p) {
  check_sizes(u, mesh);
  return serial_sum(u.size(), mass_term(u, mesh, p));
}

double max_slope(std::span<const double> u, const RayleighMesh& mesh) {
  check_sizes(u, mesh);
  return serial_max(mesh.intervals(), slope_term(u, mesh));
}

void stiffness(std::span<const double> u, const RayleighMesh& mesh, double p, double floor, std::span<double> a) {
  check_sizes(u, mesh);
  require(a.size() == mesh.intervals(), "stiffness: output size mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = stiffness_entry(u, mesh, p, floor, i);
}

void mass_load(std::span<const double> u, const RayleighMesh& mesh, double p, std::span<double> b) {
  check_sizes(u, mesh);
  require(b.size() <= u.size(), "mass_load: output size mismatch");
  for (std::size_t j = 0; j < b.size(); ++j) b[j] = mass_entry(u, mesh, p, j);
}

}  // namespace serial

namespace omp {

double energy(std::span<const double> u, const RayleighMesh& mesh, double p) {
  check_sizes(u, mesh);
  return parallel_sum(mesh.intervals(), energy_term(u, mesh, p));
}

double mass(std::span<const double> u, const RayleighMesh& mesh, double p) {
  check_sizes(u, mesh);
  return parallel_sum(u.size(), mass_term(u, mesh, p));
}

double max_slope(std::span<const double> u, const RayleighMesh& mesh) {
  check_sizes(u, mesh);
  return parallel_max(mesh.intervals(), slope_term(u, mesh));
}

void stiffness(std::span<const double> u, const RayleighMesh& mesh, double p, double floor, std::span<double> a) {
  check_sizes(u, mesh);
  require(a.size() == mesh.intervals(), "stiffness: output size mismatch");
  const auto n = static_cast<long long>(a.size());
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < n; ++i) a[static_cast<std::size_t>(i)] = stiffness_entry(u, mesh, p, floor, static_cast<std::size_t>(i));
}

void mass_load(std::span<const double> u, const RayleighMesh& mesh, double p, std::span<double> b) {
  check_sizes(u, mesh);
  require(b.size() <= u.size(), "mass_load: output size mismatch");
  const auto n = static_cast<long long>(b.size());
#pragma omp parallel for schedule(static)
  for (long long j = 0; j < n; ++j) b[static_cast<std::size_t>(j)] = mass_entry(u, mesh, p, static_cast<std::size_t>(j));
}

}  // namespace omp

double energy(Backend b, std::span<const double> u, const RayleighMesh& mesh, double p) {
  return b == Backend::openmp ? omp::energy(u, mesh, p) : serial::energy(u, mesh, p);
}

double mass(Backend b, std::span<const double> u, const RayleighMesh& mesh, double p) {
  return b == Backend::openmp ? omp::mass(u, mesh, p) : serial::mass(u, mesh, p);
}

double max_slope(Backend b, std::span<const double> u, const RayleighMesh& mesh) {
  return b == Backend::openmp ? omp::max_slope(u, mesh) : serial::max_slope(u, mesh);
}

void stiffness(Backend b, std::span<const double> u, const RayleighMesh& mesh, double p, double floor,
               std::span<double> a) {
  if (b == Backend::openmp) {
    omp::stiffness(u, mesh, p, floor, a);
  } else {
    serial::stiffness(u, mesh, p, floor, a);
  }
}

void mass_load(Backend b, std::span<const double> u, const RayleighMesh& mesh, double p, std::span<double> out) {
  if (b == Backend::openmp) {
    omp::mass_load(u, mesh, p, out);
  } else {
    serial::mass_load(u, mesh, p, out);
  }
}

void solve_stiffness(std::span<const double> a, std::span<const double> rhs, std::span<double> y) {
  const std::size_t n = a.size();
  require(rhs.size() == n && y.size() == n && n > 0, "solve_stiffness: size mismatch");
  std::vector<double> c(n, 0.0);
  std::vector<double> d(n, 0.0);
  double prev = 0.0;  // a_{j-1}
  for (std::size_t j = 0; j < n; ++j) {
    const double diag = prev + a[j];
    const double lower = -prev;
    const double denom = diag - (j > 0 ? lower * c[j - 1] : 0.0);
    require(denom > 0.0, "solve_stiffness: matrix is not positive definite");
    c[j] = (j + 1 < n) ? -a[j] / denom : 0.0;
    d[j] = (rhs[j] - (j > 0 ? lower * d[j - 1] : 0.0)) / denom;
    prev = a[j];
  }
  y[n - 1] = d[n - 1];
  for (std::size_t j = n - 1; j-- > 0;) y[j] = d[j] - c[j] * y[j + 1];
}

}  // namespace plap::kernels
