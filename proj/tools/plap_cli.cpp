#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "plap/closed_form_bounds.hpp"
#include "plap/harness/config.hpp"
#include "plap/harness/csv.hpp"
#include "plap/harness/sweep.hpp"
#include "plap/harness/verify.hpp"
#include "plap/numeric.hpp"
#include "plap/rayleigh.hpp"
#include "plap/shooting.hpp"

namespace {

using namespace plap;
using namespace plap::harness;

constexpr int kExitOk = 0;
constexpr int kExitCheck = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void line(const std::string& label, double value) {
  std::cout << "  " << label;
  for (std::size_t i = label.size(); i < 24; ++i) std::cout << ' ';
  std::cout << format_human(value) << '\n';
}

// ------------------------------------------------------------------ bounds

struct BoundsArgs {
  int n = 2;
  double p = 2.0;
  double K = 1.0;
  std::optional<double> lambda;
};

int cmd_bounds(const BoundsArgs& a) {
  std::cout << "n=" << a.n << " p=" << format_human(a.p) << " K=" << format_human(a.K) << '\n';
  if (a.p == 2.0) {
    line("eigen bound (Cheng)", cheng_bound(a.n, a.K));
    line("p-harmonic limit", p_harmonic_bound(a.n, a.p, a.K));
    if (a.lambda) std::cout << "  gradient estimate is undefined at p = 2 (limit only)\n";
    return kExitOk;
  }
  line("eigen bound", eigen_upper_bound(a.n, a.p, a.K));
  line("p-harmonic bound", p_harmonic_bound(a.n, a.p, a.K));
  if (a.lambda) {
    const BoundBreakdown b = grad_bound(SpectralInput{a.n, a.p, a.K, *a.lambda});
    std::cout << "gradient estimate at lambda=" << format_human(*a.lambda) << '\n';
    line("prefactor", b.prefactor);
    line("linear term", b.linear_term);
    line("sqrt argument", b.sqrt_argument);
    line("sqrt value", b.sqrt_value);
    line("total", b.total);
  }
  return kExitOk;
}

// ------------------------------------------------------------------- eigen

struct EigenArgs {
  int n = 2;
  double p = 2.0;
  double K = 1.0;
  double R = 10.0;
  bool flat = false;
  bool interval = false;
  double L = 0.0;
  std::string method = "shoot";
  std::size_t mesh = 4000;
  double tol = 1e-10;
  std::string out;
  std::string plot_dir;
};

int cmd_eigen_interval(const EigenArgs& a) {
  if (!(a.L > 0.0)) throw UsageError("--interval requires --L > 0");
  EigenResult e = [&] {
    if (parse_method(a.method) == SolveMethod::rayleigh) {
      RayleighOptions opts;
      opts.mesh_size = a.mesh;
      opts.tol = a.tol;
      return rayleigh_interval_1d(a.p, a.L, opts);
    }
    DirichletOptions opts;
    opts.tol = a.tol;
    return interval_eigenvalue_1d(a.p, a.L, opts);
  }();
  const double closed = (a.p - 1.0) * std::pow(pi_p(a.p) / a.L, a.p);
  std::cout << "interval (0, " << format_human(a.L) << ") p=" << format_human(a.p) << " method=" << a.method << '\n';
  line("lambda_solver", e.lambda);
  line("closed form", closed);
  line("relative error", relative_difference(e.lambda, closed));
  line("iterations", e.iterations);
  if (!a.out.empty()) {
    std::ofstream f(a.out);
    if (!f) throw std::runtime_error("cannot write " + a.out);
    f << "p,L,lambda_solver,closed_form\n"
      << format_exact(a.p) << ',' << format_exact(a.L) << ',' << format_exact(e.lambda) << ','
      << format_exact(closed) << '\n';
  }
  if (!a.plot_dir.empty()) {
    CellOutcome cell;
    cell.eigen = std::move(e);
    write_cell_plots(cell, a.plot_dir);
  }
  return kExitOk;
}

int cmd_eigen(const EigenArgs& a) {
  if (a.interval) return cmd_eigen_interval(a);
  SweepSpec spec;
  spec.method = parse_method(a.method);
  spec.mesh = a.mesh;
  spec.tol = a.tol;
  const double K = a.flat ? 0.0 : a.K;
  const CellOutcome c = evaluate_cell(a.n, a.p, K, a.R, spec, !a.plot_dir.empty());
  const SweepRow& r = c.row;
  std::cout << "n=" << r.n << " p=" << format_human(r.p) << " K=" << format_human(r.K) << " R=" << format_human(r.R)
            << " method=" << a.method << '\n';
  auto opt = [](const char* label, const std::optional<double>& v) {
    if (v) line(label, *v);
  };
  opt("lambda_solver", r.lambda_solver);
  opt("bound_paper", r.bound_paper);
  opt("ratio", r.ratio);
  opt("grad_sup", r.grad_sup);
  opt("grad_bound", r.grad_bound);
  opt("sigma", r.sigma);
  opt("residual", r.residual);
  if (!a.out.empty()) {
    std::ofstream f(a.out);
    if (!f) throw std::runtime_error("cannot write " + a.out);
    write_csv(f, {r});
  }
  if (!a.plot_dir.empty()) write_cell_plots(c, a.plot_dir);
  if (!r.error.empty()) {
    std::cerr << "error: " << r.error << '\n';
    return kExitCheck;
  }
  return kExitOk;
}

// ------------------------------------------------------------------- sweep

struct SweepArgs {
  std::string config;
  std::vector<int> n;
  std::vector<double> p, K, R;
  std::optional<double> tol;
  std::optional<std::string> method;
  std::optional<std::size_t> mesh;
  std::optional<std::string> out;
  std::optional<std::string> plot_dir;
  bool check = false;
};

int cmd_sweep(const SweepArgs& a, const CLI::App& sub) {
  SweepSpec spec = a.config.empty() ? SweepSpec{} : load_sweep_config(a.config);
  if (sub.count("--n")) spec.n = a.n;
  if (sub.count("--p")) spec.p = a.p;
  if (sub.count("--K")) spec.K = a.K;
  if (sub.count("--R")) spec.R = a.R;
  if (a.tol) spec.tol = *a.tol;
  if (a.method) spec.method = parse_method(*a.method);
  if (a.mesh) spec.mesh = *a.mesh;
  if (a.out) spec.out = *a.out;
  if (a.plot_dir) spec.plot_dir = *a.plot_dir;
  if (a.check) spec.check = true;

  const std::vector<SweepRow> rows = run_sweep(spec, std::cerr);
  if (spec.out.empty()) {
    write_csv(std::cout, rows);
  } else {
    std::ofstream f(spec.out);
    if (!f) throw std::runtime_error("cannot write " + spec.out);
    write_csv(f, rows);
  }
  if (!spec.plot_dir.empty()) write_sweep_plots(rows, spec.plot_dir);
  if (spec.check && count_check_failures(rows, std::cerr) > 0) return kExitCheck;
  return kExitOk;
}

// ------------------------------------------------------------ verify/limit

int cmd_verify(const std::string& suite) {
  const std::vector<Check> checks = run_suite(suite);
  return print_report(std::cout, checks) == 0 ? kExitOk : kExitCheck;
}

struct LimitArgs {
  std::optional<int> n;
  std::optional<double> p, K, lambda;
};

int cmd_limit(const LimitArgs& a) {
  std::vector<Check> checks;
  if (a.n || a.p || a.K || a.lambda) {
    checks = limit_checks(a.n.value_or(3), a.p.value_or(3.0), a.K.value_or(1.0), a.lambda.value_or(0.1));
  } else {
    checks = limit_checks(3, 3.0, 1.0, 0.1);
    std::vector<Check> sub = limit_checks(3, 1.5, 1.0, 0.1);
    checks.insert(checks.end(), sub.begin(), sub.end());
  }
  return print_report(std::cout, checks) == 0 ? kExitOk : kExitCheck;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p-Laplacian eigenvalue bounds on model spaces"};
  app.require_subcommand(1);

  BoundsArgs bounds;
  auto* b = app.add_subcommand("bounds", "closed-form eigenvalue and gradient bounds");
  b->add_option("--n", bounds.n, "dimension")->required();
  b->add_option("--p", bounds.p, "exponent p > 1")->required();
  b->add_option("--K", bounds.K, "curvature scale K >= 0")->required();
  b->add_option("--lambda", bounds.lambda, "eigenvalue candidate for the gradient estimate");

  EigenArgs eigen;
  auto* e = app.add_subcommand("eigen", "first Dirichlet eigenvalue of a geodesic ball");
  e->add_option("--n", eigen.n, "dimension");
  e->add_option("--p", eigen.p, "exponent p > 1");
  e->add_option("--K", eigen.K, "curvature scale");
  e->add_option("--R", eigen.R, "ball radius");
  e->add_flag("--flat", eigen.flat, "flat space (K = 0)");
  e->add_flag("--interval", eigen.interval, "1-D interval (0, L) with weight 1");
  e->add_option("--L", eigen.L, "interval length");
  e->add_option("--method", eigen.method, "shoot or rayleigh")->check(CLI::IsMember({"shoot", "rayleigh"}));
  e->add_option("--mesh", eigen.mesh, "Rayleigh mesh intervals");
  e->add_option("--tol", eigen.tol, "relative tolerance");
  e->add_option("--out", eigen.out, "CSV output path");
  e->add_option("--plot-dir", eigen.plot_dir, "directory for profile plot data");

  SweepArgs sweep;
  auto* s = app.add_subcommand("sweep", "parameter sweep to CSV");
  s->add_option("--config", sweep.config, "config file (schema plap-sweep/1)");
  s->add_option("--n", sweep.n, "dimensions")->delimiter(',');
  s->add_option("--p", sweep.p, "exponents")->delimiter(',');
  s->add_option("--K", sweep.K, "curvature scales")->delimiter(',');
  s->add_option("--R", sweep.R, "radii")->delimiter(',');
  s->add_option("--tol", sweep.tol, "relative tolerance");
  s->add_option("--method", sweep.method, "shoot or rayleigh")->check(CLI::IsMember({"shoot", "rayleigh"}));
  s->add_option("--mesh", sweep.mesh, "Rayleigh mesh intervals");
  s->add_option("--out", sweep.out, "CSV output path (default stdout)");
  s->add_option("--plot-dir", sweep.plot_dir, "directory for lambda/ratio vs R curves");
  s->add_flag("--check", sweep.check, "exit 1 if ratio <= 1 or grad_sup > grad_bound on a hyperbolic cell");

  std::string suite;
  auto* v = app.add_subcommand("verify", "property suites");
  v->add_option("--suite", suite, "bounds, certificate, solver, lemma or all")->required();

  LimitArgs limit;
  auto* l = app.add_subcommand("limit-check", "finite-R and p->2 limits against the closed forms");
  l->add_option("--n", limit.n, "dimension");
  l->add_option("--p", limit.p, "exponent");
  l->add_option("--K", limit.K, "curvature scale");
  l->add_option("--lambda", limit.lambda, "eigenvalue candidate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*b) return cmd_bounds(bounds);
    if (*e) return cmd_eigen(eigen);
    if (*s) return cmd_sweep(sweep, *s);
    if (*v) return cmd_verify(suite);
    if (*l) return cmd_limit(limit);
  } catch (const UnknownSuite& err) {
    std::cerr << "usage error: " << err.what() << '\n';
    return kExitUsage;
  } catch (const ConfigError& err) {
    std::cerr << "config error: " << err.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& err) {
    std::cerr << "usage error: " << err.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& err) {
    std::cerr << "precondition violated: " << err.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitCheck;
  }
  return kExitUsage;
}
