#include "plap/lemma_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "plap/model_geometry.hpp"
#include "plap/numeric.hpp"

namespace plap {

double alpha(int n, double p) {
  require(n >= 2, "alpha: n must be >= 2");
  require(p > 1.0, "alpha: p must be > 1");
  const double nd = static_cast<double>(n);
  return std::min(2.0 * (p - 1.0), nd * (p - 1.0) * (p - 1.0) / (nd - 1.0));
}

RadialRange default_region(const RadialProfile& prof, double delta) {
  require(prof.size() >= 3, "default_region: profile too short");
  require(delta > 0.0 && delta < 1.0, "default_region: delta must lie in (0, 1)");
  const double lo = std::max(0.05 * prof.R, 10.0 * prof.step());
  double hi = 0.5 * prof.R;
  const double floor = delta * prof.u.front();
  for (std::size_t i = 0; i < prof.size(); ++i) {
    if (prof.u[i] < floor) {
      hi = std::min(hi, prof.r[i]);
      break;
    }
  }
  require(hi > lo, "default_region: empty region");
  return RadialRange{lo, hi};
}

namespace {

struct Stencil {
  std::size_t first = 0;
  std::size_t last = 0;  // inclusive
};

Stencil interior_indices(const RadialProfile& prof, RadialRange region) {
  require(prof.space.dimension() >= 2, "lemma oracle: needs a model space with n >= 2");
  require(region.lo > 0.0 && region.hi > region.lo, "lemma oracle: invalid region");
  Stencil s{prof.size(), 0};
  for (std::size_t i = 1; i + 1 < prof.size(); ++i) {
    if (prof.r[i] < region.lo || prof.r[i] > region.hi) continue;
    s.first = std::min(s.first, i);
    s.last = i;
  }
  require(s.first <= s.last && s.first < prof.size(), "lemma oracle: no interior grid points in region");
  return s;
}

double h_prime(const RadialProfile& prof, std::size_t i) {
  const double u = prof.u[i];
  if (!(u > 0.0)) {
    std::ostringstream os;
    os << "lemma oracle: u <= 0 at r = " << prof.r[i];
    throw DomainError(os.str());
  }
  return (prof.p - 1.0) * prof.du(i) / u;
}

double gradient_power(const RadialProfile& prof, std::size_t i) {
  return pow_nonneg(std::abs(h_prime(prof, i)), prof.p);
}

}  // namespace

RadialSeries discrete_L_of_G(const RadialProfile& prof, RadialRange region) {
  const Stencil s = interior_indices(prof, region);
  const double p = prof.p;
  const double dr = prof.step();
  RadialSeries out;
  for (std::size_t i = s.first; i <= s.last; ++i) {
    const double lw = log_volume_weight(prof.space, prof.r[i]);
    auto flux = [&](std::size_t a, std::size_t b) {
      const double mid = 0.5 * (prof.r[a] + prof.r[b]);
      const double w = std::exp(log_volume_weight(prof.space, mid) - lw);
      const double dh = 0.5 * (h_prime(prof, a) + h_prime(prof, b));
      if (dh == 0.0) throw DomainError("discrete_L_of_G: h' vanishes inside the region");
      return w * (p - 1.0) * pow_nonneg(std::abs(dh), p - 2.0) * (gradient_power(prof, b) - gradient_power(prof, a)) / dr;
    };
    out.r.push_back(prof.r[i]);
    out.value.push_back((flux(i, i + 1) - flux(i - 1, i)) / dr);
  }
  return out;
}

RadialSeries in5_rhs(const RadialProfile& prof, double lambda, RadialRange region) {
  require(lambda >= 0.0, "in5_rhs: lambda must be >= 0");
  const Stencil s = interior_indices(prof, region);
  const int n = prof.space.dimension();
  const double nd = static_cast<double>(n);
  const double p = prof.p;
  const double K = prof.space.curvature_scale();
  const double a = alpha(n, p);
  const double dr = prof.step();
  const double c1 = pow_nonneg(p - 1.0, p - 1.0);
  const double c2 = pow_nonneg(p - 1.0, 2.0 * (p - 1.0));

  RadialSeries out;
  for (std::size_t i = s.first; i <= s.last; ++i) {
    const double dh = h_prime(prof, i);
    const double G = gradient_power(prof, i);
    if (!(G > 0.0)) throw DomainError("in5_rhs: G vanishes inside the region");
    const double dG = (gradient_power(prof, i + 1) - gradient_power(prof, i - 1)) / (2.0 * dr);
    double rhs = p / (nd - 1.0) * G * G;
    rhs += 2.0 * p / (nd - 1.0) * c1 * lambda * G;
    rhs += p * c2 * lambda * lambda / (nd - 1.0);
    rhs -= p * (nd - 1.0) * K * K * pow_nonneg(G, 2.0 * (p - 1.0) / p);
    rhs += a / p * dG * dG / pow_nonneg(G, 2.0 / p);
    rhs += (2.0 * (p - 1.0) / (nd - 1.0) * (1.0 + lambda * c1 / G) - p) * signed_pow(dh, p - 1.0) * dG;
    out.r.push_back(prof.r[i]);
    out.value.push_back(rhs);
  }
  return out;
}

LemmaReport check_in5(const RadialProfile& prof, double lambda, RadialRange region, double tol) {
  require(tol > 0.0, "check_in5: tol must be > 0");
  LemmaReport report;
  report.r_min = region.lo;
  report.r_max = region.hi;
  report.residual = relative_equation_residual(prof, region);
  if (!(report.residual <= kLemmaResidualGate)) {
    std::ostringstream os;
    os << "check_in5: equation residual " << report.residual << " exceeds the gate " << kLemmaResidualGate
       << " on [" << region.lo << ", " << region.hi << "]";
    throw PreconditionError(os.str());
  }
  const RadialSeries lhs = discrete_L_of_G(prof, region);
  const RadialSeries rhs = in5_rhs(prof, lambda, region);
  const GradientProfile g = h_and_G(prof, region);
  report.min_slack = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < lhs.r.size(); ++k) {
    // g covers the same grid points as lhs, possibly with the endpoints.
    const auto it = std::lower_bound(g.r.begin(), g.r.end(), lhs.r[k]);
    const double G = g.G[static_cast<std::size_t>(it - g.r.begin())];
    const double slack = (lhs.value[k] - rhs.value[k]) / std::max(G * G, 1e-30);
    if (slack < report.min_slack) {
      report.min_slack = slack;
      report.min_slack_at = lhs.r[k];
    }
    if (slack < -tol) ++report.violations;
  }
  report.points = lhs.r.size();
  return report;
}

}  // namespace plap
