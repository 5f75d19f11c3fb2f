#include "plap/shooting.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>
#include <vector>

#include <boost/math/tools/toms748_solve.hpp>
#include <boost/numeric/odeint.hpp>

#include "plap/closed_form_bounds.hpp"
#include "plap/numeric.hpp"
#include "plap/profile_analysis.hpp"

namespace plap {

namespace odeint = boost::numeric::odeint;

namespace {

using State = std::array<double, 2>;

// State (u, v) with v = |u'|^{p-2} u'. The v equation carries no derivative
// through the degenerate |u'|^{p-2} factor.
struct RadialSystem {
  const ModelSpace& space;
  double p;
  double lambda;

  void operator()(const State& x, State& dxdt, double r) const {
    dxdt[0] = signed_pow(x[1], 1.0 / (p - 1.0));
    dxdt[1] = -distance_laplacian(space, r) * x[1] - lambda * signed_pow(x[0], p - 1.0);
  }
};

bool finite(const State& x) { return std::isfinite(x[0]) && std::isfinite(x[1]); }

[[noreturn]] void integration_failure(const std::string& why, double r, const State& x, double lambda) {
  std::ostringstream os;
  os << "shoot: " << why << " at r=" << r << " (u=" << x[0] << ", v=" << x[1] << ", lambda=" << lambda << ")";
  throw SolverError(os.str());
}

// Startup from the regular series at the center: u(r0) = 1 and
// v(r0) = -lambda (int_0^r0 w) / w(r0) ~ -lambda r0 / n.
State startup_state(const ModelSpace& ms, double lambda, double r0) {
  return State{1.0, -lambda * r0 / static_cast<double>(ms.dimension())};
}

}  // namespace

ShootResult shoot(const ModelSpace& ms, double p, double lambda, double R, const ShootOptions& opts) {
  require(p > 1.0 && std::isfinite(p), "shoot: p must be > 1");
  require(lambda >= 0.0 && std::isfinite(lambda), "shoot: lambda must be >= 0");
  require(R > 0.0 && std::isfinite(R), "shoot: R must be > 0");
  require(opts.startup_fraction > 0.0 && opts.startup_fraction < 0.5, "shoot: startup fraction out of range");

  const RadialSystem system{ms, p, lambda};
  const double r0 = opts.startup_fraction * R;
  const double max_dt = R / 64.0;
  const double min_dt = 1e-14 * R;

  ShootResult result(RadialProfile(ms, p, lambda, R));

  // Phase 1: adaptive stepping with dense output until the first sign change
  // of u or until R is passed.
  auto dense = odeint::make_dense_output(opts.abs_tol, opts.rel_tol, max_dt, odeint::runge_kutta_dopri5<State>());
  dense.initialize(startup_state(ms, lambda, r0), r0, r0);
  try {
    while (true) {
      const auto [t_old, t_new] = dense.do_step(system);
      ++result.steps;
      const State& x = dense.current_state();
      if (!finite(x)) integration_failure("non-finite state", t_new, x, lambda);
      if (t_new - t_old < min_dt && t_new < R) integration_failure("step size underflow", t_new, x, lambda);
      if (x[0] <= 0.0) {
        State probe{};
        auto u_at = [&](double t) {
          dense.calc_state(t, probe);
          return probe[0];
        };
        double zero = t_new;
        if (x[0] < 0.0) {
          boost::uintmax_t max_iter = 200;
          const auto bracket = boost::math::tools::toms748_solve(
              u_at, t_old, t_new, boost::math::tools::eps_tolerance<double>(52), max_iter);
          zero = 0.5 * (bracket.first + bracket.second);
        }
        if (zero <= R) result.first_zero = zero;
        break;
      }
      if (t_new >= R) break;
    }
  } catch (const SolverError&) {
    throw;
  } catch (const std::exception& e) {
    throw SolverError(std::string("shoot: integrator failure: ") + e.what());
  }

  if (opts.grid_points == 0) return result;

  // Phase 2: step exactly onto a uniform grid on [r0, end] so finite
  // differences of the profile see only the smooth global error.
  const double end = result.first_zero.value_or(R);
  RadialProfile& prof = result.profile;
  prof.r = uniform_grid(r0, end, std::max<std::size_t>(opts.grid_points, 3));
  prof.u.reserve(prof.r.size());
  prof.v.reserve(prof.r.size());
  State x = startup_state(ms, lambda, r0);
  auto record = [&](const State& s, double t) {
    if (!finite(s)) integration_failure("non-finite state", t, s, lambda);
    prof.u.push_back(s[0]);
    prof.v.push_back(s[1]);
  };
  try {
    auto controlled = odeint::make_controlled(opts.abs_tol, opts.rel_tol, odeint::runge_kutta_dopri5<State>());
    odeint::integrate_times(controlled, system, x, prof.r.begin(), prof.r.end(), r0, record);
  } catch (const SolverError&) {
    throw;
  } catch (const std::exception& e) {
    throw SolverError(std::string("shoot: integrator failure while recording profile: ") + e.what());
  }
  return result;
}

namespace {

struct ZeroSample {
  double lambda;
  double zero;
};

bool strictly_decreasing_zeros(std::vector<ZeroSample> samples) {
  std::sort(samples.begin(), samples.end(), [](const ZeroSample& a, const ZeroSample& b) { return a.lambda < b.lambda; });
  for (std::size_t i = 1; i < samples.size(); ++i) {
    if (!(samples[i].zero < samples[i - 1].zero)) return false;
  }
  return true;
}

double bracket_start(const ModelSpace& ms, double p, double R) {
  const double floor = std::pow(R, -p);
  if (ms.degenerate()) return floor;
  return std::max(eigen_upper_bound(ms.dimension(), p, ms.curvature_scale()), floor);
}

}  // namespace

EigenResult dirichlet_eigenvalue(const ModelSpace& ms, double p, double R, const DirichletOptions& opts) {
  require(p > 1.0 && std::isfinite(p), "dirichlet_eigenvalue: p must be > 1");
  require(R > 0.0 && std::isfinite(R), "dirichlet_eigenvalue: R must be > 0");
  require(opts.tol > 0.0, "dirichlet_eigenvalue: tol must be > 0");

  ShootOptions probe = opts.shoot;
  probe.grid_points = 0;

  std::vector<ZeroSample> zeros;
  double lo = 0.0;
  double hi = bracket_start(ms, p, R);
  std::optional<double> hi_zero;
  int iterations = 0;
  for (int k = 0; k <= opts.max_doublings; ++k) {
    const ShootResult s = shoot(ms, p, hi, R, probe);
    ++iterations;
    if (s.first_zero) {
      hi_zero = s.first_zero;
      zeros.push_back({hi, *s.first_zero});
      break;
    }
    lo = hi;
    hi *= 2.0;
  }
  if (!hi_zero) {
    std::ostringstream os;
    os << "dirichlet_eigenvalue: no zero before R=" << R << " up to lambda=" << lo << " (" << opts.max_doublings
       << " doublings); bracketing failed";
    throw SolverError(os.str());
  }

  for (int k = 0; k < opts.max_bisections && hi - lo > opts.tol * hi; ++k) {
    const double mid = 0.5 * (lo + hi);
    const ShootResult s = shoot(ms, p, mid, R, probe);
    ++iterations;
    if (s.first_zero) {
      hi = mid;
      hi_zero = s.first_zero;
      zeros.push_back({mid, *s.first_zero});
    } else {
      lo = mid;
    }
  }
  if (hi - lo > opts.tol * hi) throw SolverError("dirichlet_eigenvalue: bisection did not reach the tolerance");

  // Ground state: the positive solution at lambda_lo, recorded on the full grid.
  ShootResult ground = shoot(ms, p, lo, R, opts.shoot);
  EigenResult result(std::move(ground.profile));
  result.lambda = 0.5 * (lo + hi);
  result.lambda_lo = lo;
  result.lambda_hi = hi;
  result.iterations = iterations;
  result.method = EigenMethod::shoot;
  result.boundary_zero = hi_zero;
  result.zero_monotone = strictly_decreasing_zeros(zeros);
  if (result.profile.size() >= 3 && lo > 0.0) {
    result.residual = relative_equation_residual(result.profile, RadialRange{0.1 * R, 0.9 * R});
  }
  return result;
}

EigenResult interval_eigenvalue_1d(double p, double L, const DirichletOptions& opts) {
  require(L > 0.0 && std::isfinite(L), "interval_eigenvalue_1d: L must be > 0");
  return dirichlet_eigenvalue(ModelSpace::interval(), p, 0.5 * L, opts);
}

double pi_p(double p) {
  require(p > 1.0, "pi_p: p must be > 1");
  return 2.0 * std::numbers::pi / (p * std::sin(std::numbers::pi / p));
}

}  // namespace plap
