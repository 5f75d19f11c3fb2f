#include "plap/certificate.hpp"

#include <cmath>
#include <sstream>

#include "plap/lemma_oracle.hpp"
#include "plap/numeric.hpp"

namespace plap {

namespace {

void require_params(int n, double p, double K) {
  require(n >= 2, "certificate: n must be >= 2");
  require(p > 1.0 && std::isfinite(p), "certificate: p must be > 1");
  require(K >= 0.0 && std::isfinite(K), "certificate: K must be >= 0");
}

void require_context(const FiniteRContext& ctx) {
  require(ctx.R > 0.0, "certificate: R must be > 0");
  require(ctx.eps1 > 0.0 && ctx.eps2 > 0.0 && ctx.eps3 > 0.0, "certificate: eps1, eps2, eps3 must be > 0");
  require(ctx.sigma > 0.0 && ctx.sigma <= 1.0, "certificate: sigma must lie in (0, 1]");
  require(ctx.phi >= ctx.sigma && ctx.phi <= 1.0, "certificate: phi must lie in [sigma, 1]");
}

// Pieces shared by D and Dbar: 1/R^2 and the Hessian-comparison term (1 + KR)/R^2.
struct RadiusTerms {
  double inv_r2;
  double kr_term;
};

RadiusTerms radius_terms(double K, double R, CutoffOptions opts) {
  const double inv_r = std::isinf(R) ? 0.0 : 1.0 / R;
  const double kr_factor = opts.doubled_kr_term ? 2.0 : 1.0;
  return {inv_r * inv_r, inv_r * inv_r + kr_factor * K * inv_r};
}

}  // namespace

double cutoff_D(int n, double p, double K, const FiniteRContext& ctx, CutoffOptions opts) {
  require_params(n, p, K);
  require(p > 2.0, "cutoff_D requires p > 2");
  require_context(ctx);
  const double nm1 = n - 1.0;
  const double phi = ctx.phi;
  const auto [inv_r2, kr_term] = radius_terms(K, ctx.R, opts);
  const double a = alpha(n, p);

  const double mixed = ((n + 1) * p - 2 * n) / nm1;
  const double drift = std::abs(2 * (p - 1) / nm1 - p) + (p - 2);

  double D = p * nm1 * K * K * phi;
  D += (2 * p * p - (a + 4)) / p * 10.0 * inv_r2;
  D += 80.0 * (n + p - 2) * kr_term;
  D += 40.0 * (p - 1) * inv_r2;
  D += 5.0 * pow_nonneg(p - 1, 2 * (p - 1)) * mixed * mixed * phi / (2.0 * ctx.eps1) * inv_r2;
  D += drift * drift * 5.0 * phi / (2.0 * ctx.eps2) * inv_r2;
  return D;
}

double dbar_gradient_coefficient(int n, double p) { return -n * p * p + 2.0 * (2 * n - 1) * p - n; }

double cutoff_Dbar(int n, double p, double K, const FiniteRContext& ctx, CutoffOptions opts) {
  require_params(n, p, K);
  require(p < 2.0, "cutoff_Dbar requires 1 < p < 2");
  require_context(ctx);
  const double coefficient = dbar_gradient_coefficient(n, p);
  if (!(coefficient > 0.0)) {
    std::ostringstream os;
    os << "cutoff_Dbar: -np^2+2(2n-1)p-n = " << coefficient << " is not positive at n=" << n << ", p=" << p;
    throw DomainError(os.str());
  }
  const double nm1 = n - 1.0;
  const double phi = ctx.phi;
  const auto [inv_r2, kr_term] = radius_terms(K, ctx.R, opts);
  const double mixed = ((2 - p) * n + 3 * p - 4) / nm1;
  const double drift = 2.0 * (n - p) / nm1;

  double D = p * nm1 * K * K * phi;
  D += coefficient / (p * nm1) * 10.0 * inv_r2;
  D += 80.0 * (n + p - 2) * kr_term;
  D += 40.0 * inv_r2;
  D += 5.0 * pow_nonneg(p - 1, 2 * (p - 1)) * mixed * mixed * phi / (2.0 * ctx.eps1) * inv_r2;
  D += drift * drift * 5.0 * phi / (2.0 * ctx.eps2) * inv_r2;
  return D;
}

double eps3_upper_limit_supercritical(int n, double p) {
  require(n >= 2 && p > 2.0, "eps3 range is defined for p > 2");
  return p * p / ((n - 1) * (p - 2));
}

CertificateSuper abc_supercritical(int n, double p, double K, double eps3) {
  require_params(n, p, K);
  require(p > 2.0, "abc_supercritical requires p > 2");
  const double upper = eps3_upper_limit_supercritical(n, p);
  if (!(eps3 > 0.0 && eps3 < upper)) {
    std::ostringstream os;
    os << "abc_supercritical: eps3=" << eps3 << " outside the admissible interval (0, " << upper << ")";
    throw DomainError(os.str());
  }
  const double nm1 = n - 1.0;
  CertificateSuper cert;
  cert.eps3 = eps3;
  cert.A = 2.0 * p * pow_nonneg(p - 1, p - 1) / nm1;
  cert.B = 2.0 / p * pow_nonneg(p * nm1, p / 2) * pow_nonneg(K, p) / pow_nonneg(eps3, (p - 2) / 2);
  cert.C = (p / nm1 - (p - 2) * eps3 / p) * p * pow_nonneg(p - 1, 2 * (p - 1)) / nm1;
  cert.lambda_cap = cert.B / (cert.A + 2.0 * std::sqrt(cert.C));
  return cert;
}

double eps3_star_supercritical(int n, double p) {
  require(n >= 2 && p > 2.0, "eps3_star_supercritical requires p > 2");
  return p * p * p / ((n - 1) * (p - 1) * (p - 1));
}

CertificateSub abcd_subcritical(int n, double p, double K, double eps3) {
  require_params(n, p, K);
  require(p < 2.0, "abcd_subcritical requires 1 < p < 2");
  require(eps3 > 0.0, "abcd_subcritical: eps3 must be > 0");
  const double nm1 = n - 1.0;
  CertificateSub cert;
  cert.eps3 = eps3;
  cert.At = 2.0 * p * pow_nonneg(p - 1, p - 1) / nm1;
  cert.Bt = 2.0 * (p - 1) / p * pow_nonneg(p * nm1 * K * K, p / (2 * (p - 1))) / eps3;
  cert.Ct = p * p * pow_nonneg(p - 1, 2 * (p - 1)) / (nm1 * nm1);
  cert.Dt = (2 - p) / nm1 * pow_nonneg(eps3, 2 * (p - 1) / (2 - p));
  // Bt = 0 only when K = 0, where the inequality gives no finite cap.
  cert.lambda_cap = cert.Bt > 0.0 ? (cert.Bt * cert.Bt + 4.0 * cert.Dt) / (2.0 * cert.At * cert.Bt)
                                  : std::numeric_limits<double>::infinity();
  return cert;
}

double eps3_star_subcritical(int n, double p, double K) {
  require_params(n, p, K);
  require(p < 2.0, "eps3_star_subcritical requires 1 < p < 2");
  require(K > 0.0, "eps3_star_subcritical: K = 0 makes Bt vanish");
  const double nm1 = n - 1.0;
  return pow_nonneg(nm1 * (p - 1) * (p - 1) / (p * p * p), (2 - p) / 2) *
         pow_nonneg(p * nm1 * K * K, p * (2 - p) / (2 * (p - 1)));
}

double limit_discriminant_supercritical(int n, double p, double K, double eps3, double lambda) {
  const CertificateSuper c = abc_supercritical(n, p, K, eps3);
  return (c.A * c.A - 4.0 * c.C) * lambda * lambda - 2.0 * c.A * c.B * lambda + c.B * c.B;
}

bool admissible_supercritical(int n, double p, const FiniteRContext& ctx) {
  if (!(p > 2.0) || n < 2) return false;
  if (!(ctx.eps3 > 0.0 && ctx.eps3 < eps3_upper_limit_supercritical(n, p))) return false;
  return p * ctx.sigma / (n - 1) - ctx.eps2 - (p - 2) * ctx.eps3 / p > 0.0;
}

QuadraticCoefficients finite_r_quadratic_supercritical(int n, double p, double K, double lambda,
                                                      const FiniteRContext& ctx, CutoffOptions opts) {
  require_params(n, p, K);
  require(p > 2.0, "finite_R_bound_supercritical requires p > 2");
  require(lambda >= 0.0, "finite_R_bound_supercritical: lambda must be >= 0");
  require_context(ctx);
  if (!admissible_supercritical(n, p, ctx)) {
    throw DomainError("finite_R_bound_supercritical: p sigma/(n-1) - eps2 - (p-2) eps3/p must be > 0 "
                      "with eps3 in (0, p^2/((n-1)(p-2)))");
  }
  const double nm1 = n - 1.0;
  const double s = ctx.sigma;
  const double D = cutoff_D(n, p, K, ctx, opts);
  QuadraticCoefficients q;
  q.a = p * s / nm1 - ctx.eps2 - (p - 2) * ctx.eps3 / p;
  q.b = 2.0 * p / nm1 * pow_nonneg(p - 1, p - 1) * lambda * s * s -
        2.0 / p * pow_nonneg(D, p / 2) / pow_nonneg(ctx.eps3, (p - 2) / 2);
  q.c = (p * pow_nonneg(p - 1, 2 * (p - 1)) * s * s * s / nm1 - ctx.eps1) * lambda * lambda;
  return q;
}

QuadraticCoefficients finite_r_quadratic_subcritical(int n, double p, double K, double lambda,
                                                    const FiniteRContext& ctx, CutoffOptions opts) {
  require_params(n, p, K);
  require(p < 2.0, "finite_R_bound_subcritical requires 1 < p < 2");
  require(lambda >= 0.0, "finite_R_bound_subcritical: lambda must be >= 0");
  require_context(ctx);
  const double nm1 = n - 1.0;
  const double s = ctx.sigma;
  if (!(p * s / nm1 - ctx.eps2 > 0.0)) {
    throw DomainError("finite_R_bound_subcritical: p sigma/(n-1) - eps2 must be > 0");
  }
  const double Dbar = cutoff_Dbar(n, p, K, ctx, opts);
  QuadraticCoefficients q;
  q.a = p * s / nm1 - ctx.eps2;
  q.b = 2.0 * p / nm1 * pow_nonneg(p - 1, p - 1) * lambda * s * s -
        2.0 * (p - 1) / p * pow_nonneg(Dbar, p / (2 * (p - 1))) / ctx.eps3;
  q.c = (p * pow_nonneg(p - 1, 2 * (p - 1)) * s * s * s / nm1 - ctx.eps1) * lambda * lambda -
        (2 - p) / p * pow_nonneg(ctx.eps3, 2 * (p - 1) / (2 - p));
  return q;
}

namespace {

double resolve(const QuadraticCoefficients& q, const char* who, double lambda, double R) {
  if (q.discriminant() < 0.0) {
    std::ostringstream os;
    os << who << ": negative discriminant " << q.discriminant() << " at lambda=" << lambda << ", R=" << R
       << "; lambda is not admissible for these parameters";
    throw CertificateFailure(os.str());
  }
  const double root = quadratic_upper_root(q.a, q.b, q.c);
  if (root < 0.0) {
    std::ostringstream os;
    os << who << ": both roots negative (b=" << q.b << ", c=" << q.c << ") at lambda=" << lambda << ", R=" << R
       << "; lambda is not admissible for these parameters";
    throw CertificateFailure(os.str());
  }
  return root;
}

}  // namespace

double finite_R_bound_supercritical(int n, double p, double K, double lambda, const FiniteRContext& ctx,
                                    CutoffOptions opts) {
  return resolve(finite_r_quadratic_supercritical(n, p, K, lambda, ctx, opts), "finite_R_bound_supercritical",
                 lambda, ctx.R);
}

double finite_R_bound_subcritical(int n, double p, double K, double lambda, const FiniteRContext& ctx,
                                  CutoffOptions opts) {
  return resolve(finite_r_quadratic_subcritical(n, p, K, lambda, ctx, opts), "finite_R_bound_subcritical",
                 lambda, ctx.R);
}

double quadratic_upper_root(double a, double b, double c) {
  require(a > 0.0, "quadratic_upper_root: leading coefficient must be > 0");
  const double disc = b * b - 4.0 * a * c;
  require(disc >= 0.0, "quadratic_upper_root: negative discriminant");
  const double root = std::sqrt(disc);
  if (b <= 0.0) return (-b + root) / (2.0 * a);
  return 2.0 * c / (-b - root);
}

}  // namespace plap
