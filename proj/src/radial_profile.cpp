#include "plap/radial_profile.hpp"

#include <algorithm>

#include "plap/numeric.hpp"

namespace plap {

double RadialProfile::du(std::size_t i) const { return signed_pow(v.at(i), 1.0 / (p - 1.0)); }

double RadialProfile::step() const {
  require(r.size() >= 2, "RadialProfile::step: profile needs at least two points");
  return (r.back() - r.front()) / static_cast<double>(r.size() - 1);
}

std::size_t RadialProfile::last_index_at_or_below(double radius) const {
  const auto it = std::upper_bound(r.begin(), r.end(), radius);
  if (it == r.begin()) return 0;
  return static_cast<std::size_t>(std::distance(r.begin(), it) - 1);
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t points) {
  require(points >= 2, "uniform_grid: need at least two points");
  require(hi > lo, "uniform_grid: empty interval");
  std::vector<double> grid(points);
  const double h = (hi - lo) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) grid[i] = lo + h * static_cast<double>(i);
  grid.back() = hi;
  return grid;
}

RadialProfile make_profile(const ModelSpace& space, double p, double lambda, double R, std::span<const double> r,
                           const std::function<double(double)>& u, const std::function<double(double)>& du) {
  RadialProfile prof(space, p, lambda, R);
  prof.r.assign(r.begin(), r.end());
  prof.u.reserve(r.size());
  prof.v.reserve(r.size());
  for (double x : r) {
    prof.u.push_back(u(x));
    prof.v.push_back(signed_pow(du(x), p - 1.0));
  }
  return prof;
}

}  // namespace plap
