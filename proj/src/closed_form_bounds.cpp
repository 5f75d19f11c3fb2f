#include "plap/closed_form_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "plap/numeric.hpp"

namespace plap {

namespace {

void require_common(int n, double p, double K) {
  require(n >= 2, "dimension n must be >= 2");
  require(p > 1.0 && std::isfinite(p), "exponent p must be > 1");
  require(K >= 0.0 && std::isfinite(K), "curvature scale K must be >= 0");
}

std::string describe(const SpectralInput& in) {
  std::ostringstream os;
  os << "(n=" << in.n << ", p=" << in.p << ", K=" << in.K << ", lambda=" << in.lambda << ")";
  return os.str();
}

// A rounding-level negative sqrt argument at the sharpness point is treated as 0.
BoundBreakdown finish(double prefactor, double linear, double sqrt_arg, double sqrt_scale) {
  BoundBreakdown b;
  b.prefactor = prefactor;
  b.linear_term = linear;
  if (sqrt_arg < 0.0 && sqrt_arg > -1e-12 * std::max(sqrt_scale, 1e-300)) sqrt_arg = 0.0;
  b.sqrt_argument = sqrt_arg;
  b.sqrt_value = std::sqrt(sqrt_arg);
  b.total = prefactor * (linear + b.sqrt_value);
  return b;
}

}  // namespace

double eigen_upper_bound(int n, double p, double K) {
  require_common(n, p, K);
  return pow_nonneg((n - 1) * K / p, p);
}

double cheng_bound(int n, double K) {
  require_common(n, 2.0, K);
  return (n - 1) * (n - 1) * K * K / 4.0;
}

double admissible_lambda(int n, double p, double K, double lambda) {
  require(lambda >= 0.0, "lambda must be >= 0");
  const double bound = eigen_upper_bound(n, p, K);
  if (lambda <= bound) return lambda;
  if (lambda <= bound * (1.0 + kLambdaClampTolerance)) return bound;
  std::ostringstream os;
  os << "lambda=" << lambda << " exceeds the eigenvalue bound " << bound
     << "; such lambda is not an admissible eigenvalue";
  throw DomainError(os.str());
}

BoundBreakdown grad_bound_supercritical(const SpectralInput& in) {
  require_common(in.n, in.p, in.K);
  require(in.p > 2.0, "grad_bound_supercritical requires p > 2 " + describe(in));
  const double p = in.p;
  const double nm1 = in.n - 1.0;
  const double K = in.K;
  const double lam = admissible_lambda(in.n, p, K, in.lambda);

  const double prefactor = nm1 * (p - 1) * (p - 1) / p;
  const double Kp = pow_nonneg(K, p);
  const double ratio = (p - 1) / p;
  const double linear =
      -(p / nm1) * pow_nonneg(p - 1, p - 1) * lam + pow_nonneg(nm1, p - 1) * Kp * pow_nonneg(ratio, p - 2);

  const double quad = std::pow(p, 3) * pow_nonneg(p - 1, 2 * (p - 1)) / (nm1 * nm1 * (p - 2));
  const double lin = 2.0 * Kp * pow_nonneg(p - 1, 2 * p - 3) * pow_nonneg(nm1, p - 2) / pow_nonneg(p, p - 3);
  const double constant = Kp * Kp * pow_nonneg(nm1, 2 * (p - 1)) * pow_nonneg(ratio, 2 * (p - 2));
  const double sqrt_arg = quad * lam * lam - lin * lam + constant;
  return finish(prefactor, linear, sqrt_arg, constant);
}

BoundBreakdown grad_bound_subcritical(const SpectralInput& in) {
  require_common(in.n, in.p, in.K);
  require(in.p < 2.0, "grad_bound_subcritical requires 1 < p < 2 " + describe(in));
  const double p = in.p;
  const double nm1 = in.n - 1.0;
  const double K = in.K;
  const double lam = admissible_lambda(in.n, p, K, in.lambda);

  const double prefactor = nm1 / p;
  const double Kp = pow_nonneg(K, p);
  const double pm1_pm1 = pow_nonneg(p - 1, p - 1);
  const double linear = -(p / nm1) * pm1_pm1 * lam + pow_nonneg(nm1, p - 1) * pow_nonneg(p, 2 - p) * pm1_pm1 * Kp;

  const double pm1_2 = pow_nonneg(p - 1, 2 * (p - 1));
  const double lin = 2.0 * pm1_2 * pow_nonneg(p, 3 - p) * Kp / pow_nonneg(nm1, 2 - p);
  const double constant = 2.0 * pow_nonneg(nm1, 2 * (p - 1)) * pm1_2 * pow_nonneg(p, 3 - 2 * p) * Kp * Kp;
  const double sqrt_arg = -lin * lam + constant;
  return finish(prefactor, linear, sqrt_arg, constant);
}

BoundBreakdown grad_bound(const SpectralInput& in) {
  if (in.p > 2.0) return grad_bound_supercritical(in);
  if (in.p < 2.0) return grad_bound_subcritical(in);
  throw DomainError("gradient estimates are stated for p != 2; p = 2 is only a limit");
}

double p_harmonic_bound(int n, double p, double K) {
  require_common(n, p, K);
  const double nm1 = n - 1.0;
  if (p == 2.0) return nm1 * nm1 * K * K;
  if (p > 2.0) return 2.0 / pow_nonneg(p, p - 1) * pow_nonneg(nm1 * (p - 1) * K, p);
  return (1.0 + std::sqrt(2.0 / p)) * pow_nonneg((p - 1) / p, p - 1) * pow_nonneg(nm1 * K, p);
}

}  // namespace plap
