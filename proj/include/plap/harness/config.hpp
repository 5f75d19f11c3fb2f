#pragma once

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

namespace plap::harness {

inline constexpr const char* kSweepSchema = "plap-sweep/1";

enum class SolveMethod { shoot, rayleigh };

/// Cell lists and solver settings of an R-convergence sweep.
struct SweepSpec {
  std::vector<int> n;
  std::vector<double> p;
  std::vector<double> K;
  std::vector<double> R;
  double tol = 1e-10;
  SolveMethod method = SolveMethod::shoot;
  std::size_t mesh = 4000;
  /// Gradient columns use the positive solution at this fraction of the eigenvalue bound.
  double grad_lambda_fraction = 0.9;
  std::string out;       ///< CSV path; empty writes to stdout
  std::string plot_dir;  ///< directory for two-column .dat curves; empty skips
  bool check = false;    ///< fail when ratio <= 1 or grad_sup > grad_bound on a hyperbolic cell
};

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Parses the line-based `key = value` format:
///
///     schema = plap-sweep/1
///     n = 2, 3
///     p = 1.5, 2, 2.5
///     K = 1
///     R = 5, 10, 20
///     method = shoot
///
/// `#` starts a comment. Lists are comma separated and may be empty.
/// The schema line is mandatory; unknown keys are errors.
SweepSpec parse_sweep_config(std::istream& in, const std::string& source = "<config>");
SweepSpec load_sweep_config(const std::string& path);

SolveMethod parse_method(const std::string& name);
const char* method_name(SolveMethod m);

}  // namespace plap::harness
