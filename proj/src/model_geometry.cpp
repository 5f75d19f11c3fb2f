#include "plap/model_geometry.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "plap/numeric.hpp"

namespace plap {

ModelSpace::ModelSpace(int n, double K) : n_(n), K_(K) {
  require(n >= 2, "ModelSpace: dimension must be >= 2 (got " + std::to_string(n) + ")");
  require(K >= 0.0 && std::isfinite(K), "ModelSpace: curvature scale K must be finite and >= 0");
}

ModelSpace::ModelSpace(DegenerateTag) : n_(1), K_(0.0) {}

ModelSpace ModelSpace::hyperbolic(int n, double K) {
  require(K > 0.0, "ModelSpace::hyperbolic: K must be > 0");
  return ModelSpace(n, K);
}

ModelSpace ModelSpace::interval() { return ModelSpace(DegenerateTag{}); }

std::string ModelSpace::describe() const {
  std::ostringstream os;
  if (degenerate()) {
    os << "interval (n=1)";
  } else if (kind() == SpaceKind::flat) {
    os << "flat R^" << n_;
  } else {
    os << "hyperbolic H^" << n_ << "(K=" << K_ << ")";
  }
  return os.str();
}

namespace {

void require_radius(double r, const char* who) {
  if (!(r >= 0.0)) throw DomainError(std::string(who) + ": radius must be >= 0");
}

}  // namespace

double warping(const ModelSpace& ms, double r) {
  require_radius(r, "warping");
  const double K = ms.curvature_scale();
  if (K == 0.0) return r;
  const double kr = K * r;
  if (kr > kAsymptoticKr) return std::exp(log_warping(ms, r));
  return std::sinh(kr) / K;
}

double log_warping(const ModelSpace& ms, double r) {
  require_radius(r, "log_warping");
  if (r == 0.0) return -std::numeric_limits<double>::infinity();
  const double K = ms.curvature_scale();
  if (K == 0.0) return std::log(r);
  const double kr = K * r;
  // sinh(x) = e^x (1 - e^{-2x}) / 2; the correction is below 1e-26 here.
  if (kr > kAsymptoticKr) return kr - std::log(2.0 * K);
  return std::log(std::sinh(kr) / K);
}

double warping_derivative(const ModelSpace& ms, double r) {
  require_radius(r, "warping_derivative");
  const double K = ms.curvature_scale();
  if (K == 0.0) return 1.0;
  return std::cosh(K * r);
}

double distance_laplacian(const ModelSpace& ms, double r) {
  if (!(r > 0.0)) throw DomainError("distance_laplacian: r must be > 0 (singular at the center)");
  const int n = ms.dimension();
  if (n == 1) return 0.0;
  const double K = ms.curvature_scale();
  if (K == 0.0) return (n - 1) / r;
  const double kr = K * r;
  if (kr > kAsymptoticKr) return (n - 1) * K;
  return (n - 1) * K / std::tanh(kr);
}

double volume_weight(const ModelSpace& ms, double r) {
  require_radius(r, "volume_weight");
  const int n = ms.dimension();
  if (n == 1) return 1.0;
  if (r == 0.0) return 0.0;
  return std::exp((n - 1) * log_warping(ms, r));
}

double log_volume_weight(const ModelSpace& ms, double r) {
  require_radius(r, "log_volume_weight");
  const int n = ms.dimension();
  if (n == 1) return 0.0;
  return (n - 1) * log_warping(ms, r);
}

}  // namespace plap
