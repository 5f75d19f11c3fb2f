#include "plap/harness/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <tuple>

#include "plap/closed_form_bounds.hpp"
#include "plap/model_geometry.hpp"
#include "plap/numeric.hpp"
#include "plap/profile_analysis.hpp"
#include "plap/rayleigh.hpp"
#include "plap/shooting.hpp"

namespace plap::harness {

namespace {

EigenResult solve(const ModelSpace& ms, double p, double R, const SweepSpec& spec) {
  if (spec.method == SolveMethod::rayleigh) {
    RayleighOptions opts;
    opts.mesh_size = spec.mesh;
    opts.tol = spec.tol;
    return rayleigh_minimize(ms, p, R, opts);
  }
  DirichletOptions opts;
  opts.tol = spec.tol;
  return dirichlet_eigenvalue(ms, p, R, opts);
}

double bound_for(int n, double p, double K) { return p == 2.0 ? cheng_bound(n, K) : eigen_upper_bound(n, p, K); }

}  // namespace

CellOutcome evaluate_cell(int n, double p, double K, double R, const SweepSpec& spec, bool keep_profiles) {
  CellOutcome out;
  SweepRow& row = out.row;
  row.n = n;
  row.p = p;
  row.K = K;
  row.R = R;
  try {
    require(n >= 2, "n must be >= 2");
    require(p > 1.0 && std::isfinite(p), "p must be > 1");
    require(K >= 0.0 && std::isfinite(K), "K must be >= 0");
    require(R > 0.0 && std::isfinite(R), "R must be > 0");
    const ModelSpace ms(n, K);
    const double bound = bound_for(n, p, K);
    row.bound_paper = bound;

    EigenResult eig = solve(ms, p, R, spec);
    row.lambda_solver = eig.lambda;
    row.residual = eig.residual;
    if (bound > 0.0) row.ratio = eig.lambda / bound;
    if (keep_profiles) out.eigen = std::move(eig);

    if (K > 0.0) {
      const double lambda = spec.grad_lambda_fraction * bound;
      ShootResult pos = shoot(ms, p, lambda, R);
      if (pos.first_zero) {
        throw SolverError("positive solution at " + format_human(lambda) + " has a zero at r=" +
                          format_human(*pos.first_zero));
      }
      row.grad_sup = sup_gradient(pos.profile, 0.5);
      row.sigma = sigma_ratio(pos.profile, R);
      if (p != 2.0) row.grad_bound = grad_bound(SpectralInput{n, p, K, lambda}).total;
      if (keep_profiles) out.positive = std::move(pos.profile);
    }
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return out;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, std::ostream& log) {
  struct Cell {
    int n;
    double p, K, R;
  };
  std::vector<Cell> cells;
  for (int n : spec.n)
    for (double p : spec.p)
      for (double K : spec.K)
        for (double R : spec.R) cells.push_back({n, p, K, R});

  std::vector<SweepRow> rows(cells.size());
  const auto count = static_cast<long long>(cells.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < count; ++i) {
    const Cell& c = cells[static_cast<std::size_t>(i)];
    rows[static_cast<std::size_t>(i)] = evaluate_cell(c.n, c.p, c.K, c.R, spec).row;
  }

  std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
    return std::tie(a.n, a.p, a.K, a.R) < std::tie(b.n, b.p, b.K, b.R);
  });
  for (const SweepRow& r : rows) {
    if (!r.error.empty()) {
      log << "cell n=" << r.n << " p=" << format_human(r.p) << " K=" << format_human(r.K)
          << " R=" << format_human(r.R) << ": " << r.error << '\n';
    }
  }
  return rows;
}

int count_check_failures(const std::vector<SweepRow>& rows, std::ostream& log) {
  int failures = 0;
  for (const SweepRow& r : rows) {
    auto report = [&](const std::string& what) {
      ++failures;
      log << "CHECK FAIL n=" << r.n << " p=" << format_human(r.p) << " K=" << format_human(r.K)
          << " R=" << format_human(r.R) << ": " << what << '\n';
    };
    if (!r.error.empty()) {
      report("cell error");
      continue;
    }
    if (r.K > 0.0 && r.ratio && !(*r.ratio > 1.0)) report("ratio " + format_exact(*r.ratio) + " <= 1");
    if (r.grad_sup && r.grad_bound && !(*r.grad_sup <= *r.grad_bound)) {
      report("grad_sup " + format_exact(*r.grad_sup) + " > grad_bound " + format_exact(*r.grad_bound));
    }
  }
  return failures;
}

namespace {

std::string tag(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

std::string write_curve(const std::filesystem::path& dir, const std::string& name, const std::vector<double>& x,
                        const std::vector<double>& y) {
  const std::filesystem::path path = dir / name;
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write plot file " + path.string());
  write_plot_data(f, x, y);
  return path.string();
}

}  // namespace

std::vector<std::string> write_sweep_plots(const std::vector<SweepRow>& rows, const std::string& dir) {
  std::filesystem::create_directories(dir);
  std::map<std::tuple<int, double, double>, std::vector<const SweepRow*>> groups;
  for (const SweepRow& r : rows) {
    if (r.error.empty() && r.lambda_solver) groups[{r.n, r.p, r.K}].push_back(&r);
  }
  std::vector<std::string> written;
  for (const auto& [key, members] : groups) {
    const auto& [n, p, K] = key;
    const std::string suffix = "_n" + std::to_string(n) + "_p" + tag(p) + "_K" + tag(K) + ".dat";
    std::vector<double> R, lambda, ratio_R, ratio;
    for (const SweepRow* r : members) {
      R.push_back(r->R);
      lambda.push_back(*r->lambda_solver);
      if (r->ratio) {
        ratio_R.push_back(r->R);
        ratio.push_back(*r->ratio);
      }
    }
    written.push_back(write_curve(dir, "lambda_vs_R" + suffix, R, lambda));
    if (!ratio.empty()) written.push_back(write_curve(dir, "ratio_vs_R" + suffix, ratio_R, ratio));
  }
  return written;
}

std::vector<std::string> write_cell_plots(const CellOutcome& cell, const std::string& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::string> written;
  if (cell.eigen) {
    written.push_back(write_curve(dir, "eigen_u.dat", cell.eigen->profile.r, cell.eigen->profile.u));
  }
  if (cell.positive) {
    written.push_back(write_curve(dir, "positive_u.dat", cell.positive->r, cell.positive->u));
    const GradientProfile g = h_and_G(*cell.positive);
    written.push_back(write_curve(dir, "positive_G.dat", g.r, g.G));
  }
  return written;
}

}  // namespace plap::harness
