#pragma once

#include <string>

namespace plap {

enum class SpaceKind { flat, hyperbolic };

/// Constant-curvature comparison space with sectional curvature -K^2 (K = 0 is flat R^n).
///
/// Dimension 1 exists only as the degenerate half-interval used by the 1-D
/// eigenvalue oracle: weight w = 1, no mean-curvature term.
class ModelSpace {
 public:
  /// Hyperbolic when K > 0, flat when K == 0. Requires n >= 2 and K >= 0.
  ModelSpace(int n, double K);

  static ModelSpace flat(int n) { return ModelSpace(n, 0.0); }
  static ModelSpace hyperbolic(int n, double K);
  static ModelSpace interval();

  int dimension() const { return n_; }
  double curvature_scale() const { return K_; }
  SpaceKind kind() const { return K_ > 0.0 ? SpaceKind::hyperbolic : SpaceKind::flat; }
  bool degenerate() const { return n_ == 1; }

  std::string describe() const;

  friend bool operator==(const ModelSpace&, const ModelSpace&) = default;

 private:
  struct DegenerateTag {};
  explicit ModelSpace(DegenerateTag);

  int n_;
  double K_;
};

/// Above this value of K r, coth(K r) is 1 in double precision and sinh is
/// evaluated through its dominant exponential.
inline constexpr double kAsymptoticKr = 30.0;

/// sn_K(r): sinh(K r)/K for K > 0, r for K = 0.
double warping(const ModelSpace& ms, double r);

/// log sn_K(r); finite for every r > 0 even where sn_K overflows.
double log_warping(const ModelSpace& ms, double r);

/// sn_K'(r) = cosh(K r).
double warping_derivative(const ModelSpace& ms, double r);

/// Laplacian of the distance function, (n-1) sn_K'(r) / sn_K(r).
double distance_laplacian(const ModelSpace& ms, double r);

/// w(r) = sn_K(r)^{n-1}.
double volume_weight(const ModelSpace& ms, double r);

/// log w(r); -inf at r = 0 for n >= 2.
double log_volume_weight(const ModelSpace& ms, double r);

}  // namespace plap
