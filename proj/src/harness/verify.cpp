#include "plap/harness/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include <boost/math/tools/minima.hpp>

#include "plap/certificate.hpp"
#include "plap/closed_form_bounds.hpp"
#include "plap/harness/csv.hpp"
#include "plap/lemma_oracle.hpp"
#include "plap/model_geometry.hpp"
#include "plap/numeric.hpp"
#include "plap/profile_analysis.hpp"
#include "plap/rayleigh.hpp"
#include "plap/shooting.hpp"

namespace plap::harness {

namespace {

const std::vector<int> kGridN{2, 3, 5};
const std::vector<double> kGridK{0.5, 1.0, 2.0};
const std::vector<double> kGridP{1.2, 1.5, 1.8, 2.5, 3.0, 4.0};
const std::vector<double> kGridPSuper{2.5, 3.0, 4.0};
const std::vector<double> kGridPSub{1.2, 1.5, 1.8};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

class Recorder {
 public:
  explicit Recorder(std::string suite) : suite_(std::move(suite)) {}

  void add(const std::string& name, bool pass, const std::string& detail) {
    checks_.push_back({suite_, name, pass, detail});
  }

  /// Runs body, turning any exception into a failed check.
  template <class F>
  void guarded(const std::string& name, F body) {
    try {
      body();
    } catch (const std::exception& e) {
      add(name, false, std::string("exception: ") + e.what());
    }
  }

  std::vector<Check> take() { return std::move(checks_); }

 private:
  std::string suite_;
  std::vector<Check> checks_;
};

struct Worst {
  double value = 0.0;
  std::string where;
  void update(double v, const std::string& at) {
    if (where.empty() || v > value) {
      value = v;
      where = at;
    }
  }
};

std::string cell(int n, double p, double K) {
  std::ostringstream os;
  os << "(n=" << n << ", p=" << p << ", K=" << K << ")";
  return os.str();
}

// Minimizes f over log(x) in [lo, hi].
std::pair<double, double> minimize_log(const std::function<double(double)>& f, double lo, double hi) {
  auto g = [&](double t) { return f(std::exp(t)); };
  boost::uintmax_t iters = 500;
  const auto [t, v] = boost::math::tools::brent_find_minima(g, std::log(lo), std::log(hi), 52, iters);
  return {std::exp(t), v};
}

// ------------------------------------------------------------------ bounds

std::vector<Check> suite_bounds() {
  Recorder rec("bounds");

  rec.guarded("lambda=0 reduction of both gradient formulas to the p-harmonic bound", [&] {
    Worst w;
    for (int n : kGridN)
      for (double p : kGridP)
        for (double K : kGridK) {
          const double total = grad_bound(SpectralInput{n, p, K, 0.0}).total;
          w.update(relative_difference(total, p_harmonic_bound(n, p, K)), cell(n, p, K));
        }
    rec.add("lambda=0 reduction of both gradient formulas to the p-harmonic bound", w.value <= 1e-12,
            "max rel dev " + sci(w.value) + " at " + w.where + " (tol 1e-12)");
  });

  rec.guarded("p->2 limit of the eigenvalue bound is Cheng's bound", [&] {
    Worst w;
    for (int n : kGridN)
      for (double K : kGridK)
        for (double p : {2.0 - 1e-6, 2.0 + 1e-6}) {
          w.update(relative_difference(eigen_upper_bound(n, p, K), cheng_bound(n, K)), cell(n, p, K));
        }
    rec.add("p->2 limit of the eigenvalue bound is Cheng's bound", w.value <= 1e-5,
            "max rel dev " + sci(w.value) + " at " + w.where + " (tol 1e-5)");
  });

  rec.guarded("p->2 limit of the p-harmonic bound: |grad h| -> (n-1)K", [&] {
    Worst w;
    for (int n : kGridN)
      for (double K : kGridK)
        for (double p : {2.0 - 1e-6, 2.0 + 1e-6}) {
          const double level = std::pow(p_harmonic_bound(n, p, K), 1.0 / p);
          w.update(relative_difference(level, (n - 1) * K), cell(n, p, K));
        }
    rec.add("p->2 limit of the p-harmonic bound: |grad h| -> (n-1)K", w.value <= 1e-5,
            "max rel dev " + sci(w.value) + " at " + w.where + " (tol 1e-5)");
  });

  rec.guarded("subcritical sqrt argument vanishes at the eigenvalue bound", [&] {
    Worst w;
    for (int n : kGridN)
      for (double p : kGridPSub)
        for (double K : kGridK) {
          const double bound = eigen_upper_bound(n, p, K);
          const double at0 = grad_bound_subcritical(SpectralInput{n, p, K, 0.0}).sqrt_argument;
          const double at_bound = grad_bound_subcritical(SpectralInput{n, p, K, bound}).sqrt_argument;
          w.update(std::abs(at_bound) / at0, cell(n, p, K));
        }
    rec.add("subcritical sqrt argument vanishes at the eigenvalue bound", w.value <= 1e-12,
            "max |arg|/arg(0) " + sci(w.value) + " at " + w.where + " (tol 1e-12)");
  });

  rec.guarded("supercritical sqrt argument is nonnegative on [0, bound]", [&] {
    std::mt19937_64 rng(20240611);
    double worst = std::numeric_limits<double>::infinity();
    std::string where;
    for (int n : kGridN)
      for (double p : kGridPSuper)
        for (double K : kGridK) {
          const double bound = eigen_upper_bound(n, p, K);
          std::uniform_real_distribution<double> dist(0.0, bound);
          for (int k = 0; k < 200; ++k) {
            const double arg = grad_bound_supercritical(SpectralInput{n, p, K, dist(rng)}).sqrt_argument;
            if (arg < worst) {
              worst = arg;
              where = cell(n, p, K);
            }
          }
        }
    rec.add("supercritical sqrt argument is nonnegative on [0, bound]", worst >= 0.0,
            "min argument " + sci(worst) + " at " + where + " over 200 random lambda per cell");
  });

  rec.guarded("eigenvalue bound strictly increasing in K and n", [&] {
    bool ok = true;
    for (double p : kGridP) {
      for (int n : kGridN)
        for (std::size_t k = 1; k < kGridK.size(); ++k)
          ok = ok && eigen_upper_bound(n, p, kGridK[k]) > eigen_upper_bound(n, p, kGridK[k - 1]);
      for (double K : kGridK)
        for (std::size_t k = 1; k < kGridN.size(); ++k)
          ok = ok && eigen_upper_bound(kGridN[k], p, K) > eigen_upper_bound(kGridN[k - 1], p, K);
    }
    rec.add("eigenvalue bound strictly increasing in K and n", ok, "grid n x p x K");
  });

  return rec.take();
}

// ------------------------------------------------------------- certificate

std::vector<Check> suite_certificate() {
  Recorder rec("certificate");

  rec.guarded("eps3 optimality (p > 2): numerical minimum of lambda_cap", [&] {
    Worst arg, val;
    for (int n : kGridN)
      for (double p : kGridPSuper)
        for (double K : kGridK) {
          const double upper = eps3_upper_limit_supercritical(n, p);
          const auto [x, v] = minimize_log([&](double e) { return abc_supercritical(n, p, K, e).lambda_cap; },
                                           1e-6 * upper, upper * (1.0 - 1e-9));
          arg.update(relative_difference(x, eps3_star_supercritical(n, p)), cell(n, p, K));
          val.update(relative_difference(v, eigen_upper_bound(n, p, K)), cell(n, p, K));
        }
    rec.add("eps3 optimality (p > 2): numerical minimum of lambda_cap", arg.value <= 1e-6 && val.value <= 1e-10,
            "argmin rel dev " + sci(arg.value) + " (tol 1e-6), min rel dev " + sci(val.value) + " (tol 1e-10)");
  });

  rec.guarded("eps3 optimality (1 < p < 2): numerical minimum of lambda_cap", [&] {
    Worst arg, val, rel;
    for (int n : kGridN)
      for (double p : kGridPSub)
        for (double K : kGridK) {
          const auto [x, v] =
              minimize_log([&](double e) { return abcd_subcritical(n, p, K, e).lambda_cap; }, 1e-8, 1e8);
          const double star = eps3_star_subcritical(n, p, K);
          arg.update(relative_difference(x, star), cell(n, p, K));
          val.update(relative_difference(v, eigen_upper_bound(n, p, K)), cell(n, p, K));
          const CertificateSub c = abcd_subcritical(n, p, K, star);
          const double lhs = 4.0 * p / (n - 1) * std::pow(star, 2 * (p - 1) / (2 - p));
          rel.update(relative_difference(lhs, c.Bt * c.Bt), cell(n, p, K));
        }
    rec.add("eps3 optimality (1 < p < 2): numerical minimum of lambda_cap",
            arg.value <= 1e-6 && val.value <= 1e-10 && rel.value <= 1e-10,
            "argmin rel dev " + sci(arg.value) + " (tol 1e-6), min rel dev " + sci(val.value) +
                " (tol 1e-10), relationship residual " + sci(rel.value) + " (tol 1e-10)");
  });

  rec.guarded("identities A^2-4C = 4(p-1)^{2(p-1)}(p-2)eps3/(n-1) and At^2-4Ct = 0", [&] {
    Worst sup, sub;
    for (int n : kGridN)
      for (double K : kGridK) {
        for (double p : kGridPSuper) {
          const double upper = eps3_upper_limit_supercritical(n, p);
          for (double f : {0.1, 0.5, 0.9}) {
            const CertificateSuper c = abc_supercritical(n, p, K, f * upper);
            const double expected = 4.0 * std::pow(p - 1, 2 * (p - 1)) * (p - 2) * c.eps3 / (n - 1);
            sup.update(relative_difference(c.A * c.A - 4.0 * c.C, expected), cell(n, p, K));
          }
        }
        for (double p : kGridPSub) {
          const CertificateSub c = abcd_subcritical(n, p, K, 1.0);
          sub.update(std::abs(c.At * c.At - 4.0 * c.Ct) / (c.At * c.At), cell(n, p, K));
        }
      }
    rec.add("identities A^2-4C = 4(p-1)^{2(p-1)}(p-2)eps3/(n-1) and At^2-4Ct = 0",
            sup.value <= 1e-12 && sub.value <= 1e-12,
            "supercritical rel dev " + sci(sup.value) + ", subcritical " + sci(sub.value) + " (tol 1e-12)");
  });

  rec.guarded("discriminant condition holds on [0, cap] and fails at 1.01 cap", [&] {
    bool ok = true;
    std::string where;
    for (int n : kGridN)
      for (double p : kGridPSuper)
        for (double K : kGridK) {
          const double upper = eps3_upper_limit_supercritical(n, p);
          for (double f : {0.3, 0.75}) {
            const CertificateSuper c = abc_supercritical(n, p, K, f * upper);
            const double floor = -1e-12 * c.B * c.B;
            for (int k = 0; k <= 50; ++k) {
              const double lambda = c.lambda_cap * k / 50.0;
              if (limit_discriminant_supercritical(n, p, K, c.eps3, lambda) < floor && ok) {
                ok = false;
                where = cell(n, p, K) + " below cap";
              }
            }
            if (!(limit_discriminant_supercritical(n, p, K, c.eps3, 1.01 * c.lambda_cap) < 0.0) && ok) {
              ok = false;
              where = cell(n, p, K) + " at 1.01 cap";
            }
          }
        }
    rec.add("discriminant condition holds on [0, cap] and fails at 1.01 cap", ok,
            ok ? "grid n x p x K, eps3 in {0.3, 0.75} of its range" : "first failure " + where);
  });

  const std::vector<double> radii{10.0, 1e2, 1e3, 1e6};
  struct Cell {
    int n;
    double p, K, lambda;
  };
  for (Cell c : {Cell{3, 3.0, 1.0, 0.1}, Cell{3, 1.5, 1.0, 0.1}}) {
    const bool super = c.p > 2.0;
    auto finite = [&](double R) {
      FiniteRContext ctx;
      ctx.R = R;
      ctx.eps3 = super ? eps3_star_supercritical(c.n, c.p) : eps3_star_subcritical(c.n, c.p, c.K);
      return super ? finite_R_bound_supercritical(c.n, c.p, c.K, c.lambda, ctx)
                   : finite_R_bound_subcritical(c.n, c.p, c.K, c.lambda, ctx);
    };
    const std::string where = cell(c.n, c.p, c.K) + " lambda=" + format_human(c.lambda);

    const std::string mono = "finite-R bound decreasing in R " + where;
    rec.guarded(mono, [&] {
      bool ok = true;
      std::string values;
      double prev = std::numeric_limits<double>::infinity();
      for (double R : radii) {
        const double v = finite(R);
        ok = ok && v < prev;
        prev = v;
        values += (values.empty() ? "" : ", ") + format_human(v);
      }
      rec.add(mono, ok, "R in {10,1e2,1e3,1e6}: " + values);
    });

    const std::string conv = "finite-R bound converges to its R=inf value " + where;
    rec.guarded(conv, [&] {
      const double dev = relative_difference(finite(1e12), finite(std::numeric_limits<double>::infinity()));
      rec.add(conv, dev <= 1e-6, "rel dev at R=1e12 " + sci(dev) + " (tol 1e-6)");
    });

    const std::string theorem = "R=inf certificate equals the closed-form gradient estimate " + where;
    rec.guarded(theorem, [&] {
      const double limit = finite(std::numeric_limits<double>::infinity());
      const double closed = grad_bound(SpectralInput{c.n, c.p, c.K, c.lambda}).total;
      const double dev = relative_difference(limit, closed);
      rec.add(theorem, dev <= 1e-6,
              "certificate " + format_exact(limit) + ", closed form " + format_exact(closed) + ", rel dev " +
                  sci(dev) + " (tol 1e-6)");
    });
  }

  return rec.take();
}

// ------------------------------------------------------------------ solver

std::vector<Check> suite_solver() {
  Recorder rec("solver");
  auto tolerance_check = [&](const std::string& name, double got, double expected, double tol) {
    const double dev = relative_difference(got, expected);
    rec.add(name, dev <= tol,
            "got " + format_exact(got) + ", expected " + format_exact(expected) + ", rel dev " + sci(dev) +
                " (tol " + sci(tol) + ")");
  };

  for (double p : {2.0, 3.0, 1.5}) {
    const std::string name = "1-D interval at L = pi_p, p=" + format_human(p);
    rec.guarded(name, [&] { tolerance_check(name, interval_eigenvalue_1d(p, pi_p(p)).lambda, p - 1.0, 1e-6); });
  }

  const double j01 = 2.404825557695773;
  rec.guarded("flat disk p=2 (shooting) equals j01^2", [&] {
    tolerance_check("flat disk p=2 (shooting) equals j01^2", dirichlet_eigenvalue(ModelSpace::flat(2), 2.0, 1.0).lambda,
                    j01 * j01, 1e-6);
  });
  rec.guarded("flat disk p=2 (Rayleigh, mesh 4000) equals j01^2", [&] {
    tolerance_check("flat disk p=2 (Rayleigh, mesh 4000) equals j01^2",
                    rayleigh_minimize(ModelSpace::flat(2), 2.0, 1.0).lambda, j01 * j01, 1e-3);
  });

  rec.guarded("hyperbolic n=3, p=2: lambda = 1 + pi^2/R^2", [&] {
    const double R = 10.0;
    tolerance_check("hyperbolic n=3, p=2: lambda = 1 + pi^2/R^2",
                    dirichlet_eigenvalue(ModelSpace::hyperbolic(3, 1.0), 2.0, R).lambda,
                    1.0 + std::numbers::pi * std::numbers::pi / (R * R), 1e-8);
  });

  rec.guarded("flat scaling lambda(B_2R) = lambda(B_R)/2^p", [&] {
    const double p = 2.5;
    const double a = dirichlet_eigenvalue(ModelSpace::flat(3), p, 1.0).lambda;
    const double b = dirichlet_eigenvalue(ModelSpace::flat(3), p, 2.0).lambda;
    tolerance_check("flat scaling lambda(B_2R) = lambda(B_R)/2^p", b, a * std::pow(2.0, -p), 1e-6);
  });

  rec.guarded("startup radius halving moves lambda by < 1e-8", [&] {
    DirichletOptions half;
    half.shoot.startup_fraction = 0.5e-6;
    const ModelSpace ms = ModelSpace::hyperbolic(2, 1.0);
    const double a = dirichlet_eigenvalue(ms, 1.5, 10.0).lambda;
    const double b = dirichlet_eigenvalue(ms, 1.5, 10.0, half).lambda;
    tolerance_check("startup radius halving moves lambda by < 1e-8", b, a, 1e-8);
  });

  rec.guarded("shooting and Rayleigh agree (n=3, p=2.5, K=1, R=10)", [&] {
    const ModelSpace ms = ModelSpace::hyperbolic(3, 1.0);
    tolerance_check("shooting and Rayleigh agree (n=3, p=2.5, K=1, R=10)", rayleigh_minimize(ms, 2.5, 10.0).lambda,
                    dirichlet_eigenvalue(ms, 2.5, 10.0).lambda, 1e-3);
  });

  rec.guarded("hyperbolic n=2, p=2: decreasing in R, above 1/4, monotone first zeros", [&] {
    const ModelSpace ms = ModelSpace::hyperbolic(2, 1.0);
    bool ok = true;
    double prev = std::numeric_limits<double>::infinity();
    std::string values;
    for (double R : {2.0, 5.0, 10.0, 20.0, 40.0}) {
      const EigenResult e = dirichlet_eigenvalue(ms, 2.0, R);
      ok = ok && e.lambda < prev && e.lambda > 0.25 && e.zero_monotone;
      prev = e.lambda;
      values += (values.empty() ? "" : ", ") + format_human(e.lambda);
    }
    rec.add("hyperbolic n=2, p=2: decreasing in R, above 1/4, monotone first zeros", ok,
            "R in {2,5,10,20,40}: " + values);
  });

  rec.guarded("equation residual of the ground state (n=2, p=2, K=1, R=10)", [&] {
    const EigenResult e = dirichlet_eigenvalue(ModelSpace::hyperbolic(2, 1.0), 2.0, 10.0);
    rec.add("equation residual of the ground state (n=2, p=2, K=1, R=10)", e.residual <= 1e-4,
            "relative residual on [0.1R, 0.9R] " + sci(e.residual) + " (tol 1e-4)");
  });

  return rec.take();
}

// ------------------------------------------------------------------- lemma

std::vector<Check> suite_lemma() {
  Recorder rec("lemma");

  rec.guarded("alpha branch selection", [&] {
    const bool ok = alpha(3, 3.0) == 4.0 && std::abs(alpha(3, 1.5) - 0.375) < 1e-15 && alpha(2, 2.0) == 2.0;
    rec.add("alpha branch selection", ok, "alpha(3,3)=4, alpha(3,1.5)=0.375, alpha(2,2)=2");
  });

  rec.guarded("discrete L(G) is second-order accurate", [&] {
    // Smooth synthetic profile u = exp(-(r + r^2/10)) on flat R^3.
    const ModelSpace ms = ModelSpace::flat(3);
    auto u = [](double r) { return std::exp(-(r + r * r / 10.0)); };
    auto du = [&](double r) { return -(1.0 + r / 5.0) * u(r); };
    std::vector<double> values;
    for (std::size_t pts : {201u, 401u, 801u}) {
      const std::vector<double> grid = uniform_grid(1.0, 3.0, pts);
      const RadialProfile prof = make_profile(ms, 2.5, 0.0, 3.0, grid, u, du);
      const RadialSeries L = discrete_L_of_G(prof, RadialRange{1.9, 2.1});
      const auto it = std::min_element(L.r.begin(), L.r.end(),
                                       [](double a, double b) { return std::abs(a - 2.0) < std::abs(b - 2.0); });
      values.push_back(L.value[static_cast<std::size_t>(it - L.r.begin())]);
    }
    const double order = std::log2(std::abs(values[0] - values[1]) / std::abs(values[1] - values[2]));
    rec.add("discrete L(G) is second-order accurate", order >= 1.8, "observed order " + format_human(order) + " (min 1.8)");
  });

  for (int n : {2, 3})
    for (double p : {1.5, 2.5, 3.0})
      for (double f : {0.5, 0.9}) {
        std::ostringstream name;
        name << "no In5 violations n=" << n << " p=" << p << " lambda=" << f << "*bound R=40";
        rec.guarded(name.str(), [&] {
          const ModelSpace ms = ModelSpace::hyperbolic(n, 1.0);
          const double lambda = f * eigen_upper_bound(n, p, 1.0);
          const ShootResult s = shoot(ms, p, lambda, 40.0);
          if (s.first_zero) throw SolverError("positive solution has a zero");
          const LemmaReport r = check_in5(s.profile, lambda, default_region(s.profile));
          rec.add(name.str(), r.violations == 0,
                  "region [" + format_human(r.r_min) + ", " + format_human(r.r_max) + "], min slack " +
                      sci(r.min_slack) + ", violations " + std::to_string(r.violations) + "/" +
                      std::to_string(r.points));
        });
      }

  return rec.take();
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"bounds", "certificate", "solver", "lemma", "all"};
  return names;
}

std::vector<Check> run_suite(const std::string& suite) {
  if (suite == "bounds") return suite_bounds();
  if (suite == "certificate") return suite_certificate();
  if (suite == "solver") return suite_solver();
  if (suite == "lemma") return suite_lemma();
  if (suite == "all") {
    std::vector<Check> all;
    for (const char* s : {"bounds", "certificate", "solver", "lemma"}) {
      std::vector<Check> part = run_suite(s);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  throw UnknownSuite(suite);
}

std::vector<Check> limit_checks(int n, double p, double K, double lambda) {
  Recorder rec("limit");
  rec.guarded("p->2 eigenvalue limit", [&] {
    const double dev = std::max(relative_difference(eigen_upper_bound(n, 2.0 - 1e-6, K), cheng_bound(n, K)),
                                relative_difference(eigen_upper_bound(n, 2.0 + 1e-6, K), cheng_bound(n, K)));
    rec.add("p->2 eigenvalue limit", dev <= 1e-5, "rel dev " + sci(dev) + " (tol 1e-5)");
  });
  if (p == 2.0) return rec.take();

  const bool super = p > 2.0;
  const double closed = grad_bound(SpectralInput{n, p, K, lambda}).total;
  auto finite = [&](double R) {
    FiniteRContext ctx;
    ctx.R = R;
    ctx.eps3 = super ? eps3_star_supercritical(n, p) : eps3_star_subcritical(n, p, K);
    return super ? finite_R_bound_supercritical(n, p, K, lambda, ctx) : finite_R_bound_subcritical(n, p, K, lambda, ctx);
  };
  for (double R : {1e6, 1e8, 1e10, 1e12, std::numeric_limits<double>::infinity()}) {
    const std::string name = "finite-R bound at R=" + format_human(R) + " matches the closed form";
    rec.guarded(name, [&] {
      const double v = finite(R);
      const double dev = relative_difference(v, closed);
      rec.add(name, dev <= 1e-6,
              "finite-R " + format_exact(v) + ", closed form " + format_exact(closed) + ", rel dev " + sci(dev) +
                  " (tol 1e-6)");
    });
  }
  return rec.take();
}

int print_report(std::ostream& out, const std::vector<Check>& checks) {
  int failures = 0;
  for (const Check& c : checks) {
    if (!c.pass) ++failures;
    out << (c.pass ? "PASS" : "FAIL") << " [" << c.suite << "] " << c.name << ": " << c.detail << '\n';
  }
  out << checks.size() - static_cast<std::size_t>(failures) << "/" << checks.size() << " checks passed\n";
  return failures;
}

}  // namespace plap::harness
