#include "plap/numeric.hpp"

#include <algorithm>
#include <limits>

namespace plap {

double pow_nonneg(double x, double q) {
  if (x < 0.0) throw DomainError("pow_nonneg: negative base " + std::to_string(x));
  if (q == 0.0) return 1.0;
  if (x == 0.0) {
    if (q > 0.0) return 0.0;
    return std::numeric_limits<double>::infinity();
  }
  if (q == 1.0) return x;
  return std::exp(q * std::log(x));
}

double signed_pow(double x, double q) {
  if (x == 0.0) return 0.0;
  const double magnitude = pow_nonneg(std::abs(x), q);
  return x < 0.0 ? -magnitude : magnitude;
}

double relative_difference(double a, double b, double floor) {
  const double scale = std::max({std::abs(a), std::abs(b), floor});
  return std::abs(a - b) / scale;
}

void require(bool condition, const std::string& message) {
  if (!condition) throw DomainError(message);
}

}  // namespace plap
