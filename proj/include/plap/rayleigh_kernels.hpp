#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace plap::kernels {

/// Uniform mesh r_j = j h, j = 0..N, for the discretized p-Rayleigh quotient.
/// mid_weight[i] is the volume weight at (i + 1/2) h, node_weight[j] the
/// trapezoid-scaled weight at r_j. Both share one arbitrary positive scale.
struct RayleighMesh {
  double h = 0.0;
  std::vector<double> mid_weight;   // N entries
  std::vector<double> node_weight;  // N + 1 entries
  std::size_t intervals() const { return mid_weight.size(); }
};

/// Reductions are summed in fixed-size blocks whose partials are added in
/// block order, so both backends give bitwise identical results.
inline constexpr std::size_t kReductionBlock = 2048;

enum class Backend { serial, openmp };

namespace serial {
/// sum_i mid_weight_i |(u_{i+1} - u_i)/h|^p h
double energy(std::span<const double> u, const RayleighMesh& mesh, double p);
/// sum_j node_weight_j |u_j|^p h
double mass(std::span<const double> u, const RayleighMesh& mesh, double p);
/// max_i |u_{i+1} - u_i| / h
double max_slope(std::span<const double> u, const RayleighMesh& mesh);
/// a_i = mid_weight_i max(|s_i|, floor)^{p-2} / h
void stiffness(std::span<const double> u, const RayleighMesh& mesh, double p, double floor, std::span<double> a);
/// b_j = node_weight_j h |u_j|^{p-2} u_j
void mass_load(std::span<const double> u, const RayleighMesh& mesh, double p, std::span<double> b);
}  // namespace serial

namespace omp {
double energy(std::span<const double> u, const RayleighMesh& mesh, double p);
double mass(std::span<const double> u, const RayleighMesh& mesh, double p);
double max_slope(std::span<const double> u, const RayleighMesh& mesh);
void stiffness(std::span<const double> u, const RayleighMesh& mesh, double p, double floor, std::span<double> a);
void mass_load(std::span<const double> u, const RayleighMesh& mesh, double p, std::span<double> b);
}  // namespace omp

double energy(Backend b, std::span<const double> u, const RayleighMesh& mesh, double p);
double mass(Backend b, std::span<const double> u, const RayleighMesh& mesh, double p);
double max_slope(Backend b, std::span<const double> u, const RayleighMesh& mesh);
void stiffness(Backend b, std::span<const double> u, const RayleighMesh& mesh, double p, double floor,
               std::span<double> a);
void mass_load(Backend b, std::span<const double> u, const RayleighMesh& mesh, double p, std::span<double> out);

/// Solves the symmetric tridiagonal system with rows
///   (a_{j-1} + a_j) y_j - a_{j-1} y_{j-1} - a_j y_{j+1} = rhs_j,  j = 0..N-1,
/// with a_{-1} = 0 and y_N = 0. Thomas algorithm; sequential by nature.
void solve_stiffness(std::span<const double> a, std::span<const double> rhs, std::span<double> y);

}  // namespace plap::kernels
