#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace plap {

/// x^q for x >= 0 via exp(q log x); exactly 0 at x == 0 when q > 0 and 1 when q == 0.
double pow_nonneg(double x, double q);

/// Signed power sign(x)|x|^q. With q = p - 1 this is the p-duality map |x|^{p-2}x.
double signed_pow(double x, double q);

/// Relative difference |a - b| / max(|a|, |b|, floor).
double relative_difference(double a, double b, double floor = 1e-300);

/// Thrown when a formula is evaluated outside the admissible parameter region.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

void require(bool condition, const std::string& message);

}  // namespace plap
