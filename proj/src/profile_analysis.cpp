#include "plap/profile_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "plap/model_geometry.hpp"
#include "plap/numeric.hpp"

namespace plap {

namespace {

void append_point(const RadialProfile& prof, std::size_t i, GradientProfile& out) {
  const double u = prof.u[i];
  if (!(u > 0.0)) {
    std::ostringstream os;
    os << "h_and_G: u = " << u << " <= 0 at r = " << prof.r[i] << "; h = (p-1) log u is undefined";
    throw DomainError(os.str());
  }
  const double dh = (prof.p - 1.0) * prof.du(i) / u;
  out.r.push_back(prof.r[i]);
  out.h.push_back((prof.p - 1.0) * std::log(u));
  out.dh.push_back(dh);
  out.G.push_back(pow_nonneg(std::abs(dh), prof.p));
}

}  // namespace

GradientProfile h_and_G(const RadialProfile& prof) {
  GradientProfile out;
  for (std::size_t i = 0; i < prof.size(); ++i) append_point(prof, i, out);
  return out;
}

GradientProfile h_and_G(const RadialProfile& prof, RadialRange range) {
  GradientProfile out;
  for (std::size_t i = 0; i < prof.size(); ++i) {
    if (prof.r[i] < range.lo || prof.r[i] > range.hi) continue;
    append_point(prof, i, out);
  }
  return out;
}

double equation_residual(const RadialProfile& prof, RadialRange range) {
  require(range.lo > 0.0, "equation_residual: subrange must exclude r = 0");
  require(range.hi > range.lo, "equation_residual: empty subrange");
  require(prof.size() >= 3, "equation_residual: profile too short");
  const double p = prof.p;
  const double dr = prof.step();
  const double source = pow_nonneg(p - 1.0, p - 1.0) * prof.lambda;

  auto dh_at = [&](std::size_t i) {
    const double u = prof.u[i];
    if (!(u > 0.0)) throw DomainError("equation_residual: u <= 0 inside the checked subrange");
    return (p - 1.0) * prof.du(i) / u;
  };

  double worst = 0.0;
  std::size_t checked = 0;
  for (std::size_t i = 1; i + 1 < prof.size(); ++i) {
    if (prof.r[i] < range.lo || prof.r[i] > range.hi) continue;
    const double lw = log_volume_weight(prof.space, prof.r[i]);
    const double w_minus = std::exp(log_volume_weight(prof.space, prof.r[i - 1]) - lw);
    const double w_plus = std::exp(log_volume_weight(prof.space, prof.r[i + 1]) - lw);
    const double q_minus = signed_pow(dh_at(i - 1), p - 1.0);
    const double q_plus = signed_pow(dh_at(i + 1), p - 1.0);
    const double dh = dh_at(i);
    const double lap_p = (w_plus * q_plus - w_minus * q_minus) / (2.0 * dr);
    const double residual = std::abs(lap_p + pow_nonneg(std::abs(dh), p) + source);
    worst = std::max(worst, residual);
    ++checked;
  }
  require(checked > 0, "equation_residual: no interior grid points in the subrange");
  return worst;
}

double relative_equation_residual(const RadialProfile& prof, RadialRange range) {
  const double absolute = equation_residual(prof, range);
  double scale = pow_nonneg(prof.p - 1.0, prof.p - 1.0) * prof.lambda;
  if (scale == 0.0) {
    const GradientProfile g = h_and_G(prof, range);
    for (double x : g.G) scale = std::max(scale, x);
  }
  if (scale == 0.0) return absolute;
  return absolute / scale;
}

double sigma_ratio(const RadialProfile& prof, double R) {
  require(R > 0.0, "sigma_ratio: R must be > 0");
  double inner = 0.0;
  double outer = 0.0;
  const GradientProfile g = h_and_G(prof, RadialRange{0.0, R});
  for (std::size_t i = 0; i < g.r.size(); ++i) {
    outer = std::max(outer, g.G[i]);
    if (g.r[i] <= 0.5 * R) inner = std::max(inner, g.G[i]);
  }
  if (outer == 0.0) return 1.0;
  return inner / outer;
}

double sup_gradient(const RadialProfile& prof, double fraction) {
  require(fraction > 0.0 && fraction <= 1.0, "sup_gradient: fraction must lie in (0, 1]");
  const GradientProfile g = h_and_G(prof, RadialRange{0.0, fraction * prof.R});
  double sup = 0.0;
  for (double x : g.G) sup = std::max(sup, x);
  return sup;
}

}  // namespace plap
