#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "plap/model_geometry.hpp"

namespace plap {

/// Discretized radial function on a uniform grid in (0, R]: values u and the
/// p-momentum v = |u'|^{p-2} u'. Keeps the (space, p, lambda, R) it belongs to.
struct RadialProfile {
  RadialProfile(ModelSpace space_, double p_, double lambda_, double R_)
      : space(space_), p(p_), lambda(lambda_), R(R_) {}

  ModelSpace space;
  double p;
  double lambda;
  double R;
  std::vector<double> r;
  std::vector<double> u;
  std::vector<double> v;

  std::size_t size() const { return r.size(); }
  /// u'(r_i) recovered from the momentum.
  double du(std::size_t i) const;
  /// Grid spacing; the grid is uniform by construction.
  double step() const;
  /// Index of the last grid point with r <= radius (0 if none).
  std::size_t last_index_at_or_below(double radius) const;
};

std::vector<double> uniform_grid(double lo, double hi, std::size_t points);

/// Builds a profile from closed-form u and u' (test fixtures, model solutions).
RadialProfile make_profile(const ModelSpace& space, double p, double lambda, double R, std::span<const double> r,
                           const std::function<double(double)>& u, const std::function<double(double)>& du);

}  // namespace plap
