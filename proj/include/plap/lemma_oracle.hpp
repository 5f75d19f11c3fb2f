#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "plap/profile_analysis.hpp"
#include "plap/radial_profile.hpp"

namespace plap {

/// min{2(p-1), n(p-1)^2/(n-1)}.
double alpha(int n, double p);

/// Values of a radial function on a subset of the profile grid.
struct RadialSeries {
  std::vector<double> r;
  std::vector<double> value;
};

/// [max(0.05 R, 10 dr), min(0.5 R, r where u first drops below delta u(0))].
RadialRange default_region(const RadialProfile& prof, double delta = 1e-3);

/// Radial L(G) = (1/w) (w (p-1) |h'|^{p-2} G')' in conservative flux form.
RadialSeries discrete_L_of_G(const RadialProfile& prof, RadialRange region);

/// Right-hand side of the pointwise differential inequality for L(G).
RadialSeries in5_rhs(const RadialProfile& prof, double lambda, RadialRange region);

struct LemmaReport {
  double r_min = 0.0;
  double r_max = 0.0;
  double min_slack = 0.0;       ///< min of (L(G) - rhs) / max(G^2, 1e-30)
  double min_slack_at = 0.0;    ///< radius of the minimum
  std::size_t violations = 0;   ///< points with slack < -tol
  std::size_t points = 0;
  double residual = 0.0;        ///< relative equation residual on the region
};

/// The profile failed the equation-residual gate; not a lemma violation.
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr double kLemmaTolerance = 1e-2;
inline constexpr double kLemmaResidualGate = 1e-4;

LemmaReport check_in5(const RadialProfile& prof, double lambda, RadialRange region, double tol = kLemmaTolerance);

}  // namespace plap
