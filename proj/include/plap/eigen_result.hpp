#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "plap/radial_profile.hpp"

namespace plap {

enum class EigenMethod { shoot, rayleigh };

/// First Dirichlet eigenvalue of a geodesic ball together with its ground state.
struct EigenResult {
  explicit EigenResult(RadialProfile prof) : profile(std::move(prof)) {}

  double lambda = 0.0;
  double lambda_lo = 0.0;  ///< shooting: largest lambda seen without a zero in (0, R]
  double lambda_hi = 0.0;  ///< shooting: smallest lambda seen with a zero in (0, R]
  /// Shooting: relative equation residual of the ground state on [0.1R, 0.9R].
  /// Rayleigh: relative change of the quotient in the last iteration.
  double residual = 0.0;
  RadialProfile profile;
  int iterations = 0;
  EigenMethod method = EigenMethod::shoot;
  /// Shooting: first zero at lambda_hi (within integrator accuracy of R).
  std::optional<double> boundary_zero;
  /// Shooting: first-zero radius strictly decreasing in lambda over all bracket evaluations.
  bool zero_monotone = true;
};

/// Integration or iteration failure inside a solver (step-size underflow,
/// non-finite state, bracketing or convergence failure).
class SolverError : public std::runtime_error {
 public:
  explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace plap
