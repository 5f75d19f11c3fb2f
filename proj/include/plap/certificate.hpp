#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace plap {

/// Pre-limit parameters of the localized maximum-principle bound on B(R).
/// R may be +infinity, in which case every 1/R term vanishes.
struct FiniteRContext {
  double R = std::numeric_limits<double>::infinity();
  double eps1 = 1e-10;
  double eps2 = 1e-10;
  double eps3 = 1.0;
  double sigma = 1.0;  ///< sup_{B(R/2)} G / sup_{B(R)} G, in (0, 1]
  double phi = 1.0;    ///< cutoff value at the maximum point, in [sigma, 1]
};

struct CutoffOptions {
  /// Use (1 + 2KR) from the Hessian comparison bound instead of the (1 + KR)
  /// written in the cutoff constant.
  bool doubled_kr_term = false;
};

/// Reported when the quadratic certificate has no real root, i.e. lambda is
/// not admissible for the chosen (R, eps) parameters.
class CertificateFailure : public std::runtime_error {
 public:
  explicit CertificateFailure(const std::string& what) : std::runtime_error(what) {}
};

/// Cutoff constant D for p > 2.
double cutoff_D(int n, double p, double K, const FiniteRContext& ctx, CutoffOptions opts = {});

/// Coefficient -n p^2 + 2(2n-1) p - n of the |grad phi|^2/phi term in Dbar.
double dbar_gradient_coefficient(int n, double p);

/// Cutoff constant Dbar for 1 < p < 2.
double cutoff_Dbar(int n, double p, double K, const FiniteRContext& ctx, CutoffOptions opts = {});

/// Quadratic-in-lambda resolution for p > 2:
///   (A^2 - 4C) lambda^2 - 2AB lambda + B^2 >= 0,  lambda_cap = B / (A + 2 sqrt C).
struct CertificateSuper {
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;
  double eps3 = 0.0;
  double lambda_cap = 0.0;
};

/// Same for 1 < p < 2, where At^2 = 4 Ct and the inequality becomes linear:
///   lambda_cap = (Bt^2 + 4 Dt) / (2 At Bt).
struct CertificateSub {
  double At = 0.0;
  double Bt = 0.0;
  double Ct = 0.0;
  double Dt = 0.0;
  double eps3 = 0.0;
  double lambda_cap = 0.0;
};

/// Supremum p^2 / ((n-1)(p-2)) of the admissible eps3 interval for p > 2.
double eps3_upper_limit_supercritical(int n, double p);

CertificateSuper abc_supercritical(int n, double p, double K, double eps3);

/// Minimizer p^3 / ((n-1)(p-1)^2) of lambda_cap over eps3.
double eps3_star_supercritical(int n, double p);

CertificateSub abcd_subcritical(int n, double p, double K, double eps3);

/// Minimizer of the subcritical lambda_cap; satisfies (4p/(n-1)) eps3^{2(p-1)/(2-p)} = Bt^2.
double eps3_star_subcritical(int n, double p, double K);

/// Left side of the R -> infinity discriminant condition for p > 2.
double limit_discriminant_supercritical(int n, double p, double K, double eps3, double lambda);

/// Admissibility p sigma/(n-1) - eps2 - (p-2) eps3/p > 0 together with the eps3 range.
bool admissible_supercritical(int n, double p, const FiniteRContext& ctx);

/// Coefficients of the quadratic a x^2 + b x + c <= 0 satisfied by the localized G at its maximum.
struct QuadraticCoefficients {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double discriminant() const { return b * b - 4.0 * a * c; }
};

QuadraticCoefficients finite_r_quadratic_supercritical(int n, double p, double K, double lambda,
                                                      const FiniteRContext& ctx, CutoffOptions opts = {});
QuadraticCoefficients finite_r_quadratic_subcritical(int n, double p, double K, double lambda,
                                                    const FiniteRContext& ctx, CutoffOptions opts = {});

/// Upper root of the finite-R quadratic: the pre-limit bound on |grad h|^p over B(R/2).
double finite_R_bound_supercritical(int n, double p, double K, double lambda, const FiniteRContext& ctx,
                                    CutoffOptions opts = {});
double finite_R_bound_subcritical(int n, double p, double K, double lambda, const FiniteRContext& ctx,
                                  CutoffOptions opts = {});

/// (-b + sqrt(b^2 - 4ac)) / (2a) for a > 0 and a nonnegative discriminant,
/// evaluated without cancellation.
double quadratic_upper_root(double a, double b, double c);

}  // namespace plap
