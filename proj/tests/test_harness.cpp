#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "plap/harness/config.hpp"
#include "plap/harness/csv.hpp"
#include "plap/harness/sweep.hpp"
#include "plap/harness/verify.hpp"
#include "plap/numeric.hpp"

using namespace plap::harness;

namespace {

SweepSpec parse(const std::string& text) {
  std::istringstream in(text);
  return parse_sweep_config(in);
}

std::string to_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  write_csv(os, rows);
  return os.str();
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("plap_test_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST(Config, ParsesAllKeys) {
  const SweepSpec s = parse(
      "# comment\n"
      "schema = plap-sweep/1\n"
      "n = 2, 3\n"
      "p = 1.5, 2   # trailing comment\n"
      "K = 1\n"
      "R = 5, 10, 20\n"
      "tol = 1e-8\n"
      "method = rayleigh\n"
      "mesh = 500\n"
      "grad_lambda_fraction = 0.8\n"
      "out = a.csv\n"
      "plot_dir = plots\n"
      "check = true\n");
  EXPECT_EQ(s.n, (std::vector<int>{2, 3}));
  EXPECT_EQ(s.p, (std::vector<double>{1.5, 2.0}));
  EXPECT_EQ(s.K, (std::vector<double>{1.0}));
  EXPECT_EQ(s.R, (std::vector<double>{5.0, 10.0, 20.0}));
  EXPECT_EQ(s.tol, 1e-8);
  EXPECT_EQ(s.method, SolveMethod::rayleigh);
  EXPECT_EQ(s.mesh, 500u);
  EXPECT_EQ(s.grad_lambda_fraction, 0.8);
  EXPECT_EQ(s.out, "a.csv");
  EXPECT_EQ(s.plot_dir, "plots");
  EXPECT_TRUE(s.check);
}

TEST(Config, EmptyListsAllowed) {
  const SweepSpec s = parse("schema = plap-sweep/1\nR =\n");
  EXPECT_TRUE(s.R.empty());
  EXPECT_TRUE(s.n.empty());
}

TEST(Config, Errors) {
  EXPECT_THROW(parse("n = 2\n"), ConfigError);
  EXPECT_THROW(parse("schema = plap-sweep/2\n"), ConfigError);
  EXPECT_THROW(parse("schema = plap-sweep/1\nbogus = 1\n"), ConfigError);
  EXPECT_THROW(parse("schema = plap-sweep/1\nn = 2\nn = 3\n"), ConfigError);
  EXPECT_THROW(parse("schema = plap-sweep/1\nn = two\n"), ConfigError);
  EXPECT_THROW(parse("schema = plap-sweep/1\np = 1.5x\n"), ConfigError);
  EXPECT_THROW(parse("schema = plap-sweep/1\nno equals sign\n"), ConfigError);
  EXPECT_THROW(parse("schema = plap-sweep/1\nmethod = newton\n"), ConfigError);
  EXPECT_THROW(parse("schema = plap-sweep/1\ntol = 0\n"), ConfigError);
  EXPECT_THROW(parse("schema = plap-sweep/1\ngrad_lambda_fraction = 1\n"), ConfigError);
  EXPECT_THROW(load_sweep_config("/nonexistent/plap.cfg"), ConfigError);
}

TEST(Config, ErrorNamesLine) {
  try {
    parse("schema = plap-sweep/1\n\nbogus = 1\n");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find(":3"), std::string::npos) << e.what();
  }
}

TEST(Config, MethodNames) {
  EXPECT_EQ(parse_method("shoot"), SolveMethod::shoot);
  EXPECT_STREQ(method_name(SolveMethod::rayleigh), "rayleigh");
  EXPECT_THROW(parse_method("Shoot"), ConfigError);
}

TEST(Csv, Formatting) {
  EXPECT_EQ(format_exact(0.1), "0.10000000000000001");
  EXPECT_EQ(format_human(0.1), "0.1");
  EXPECT_EQ(std::stod(format_exact(1.0 / 3.0)), 1.0 / 3.0);
  EXPECT_EQ(csv_escape("plain"), "plain");
  EXPECT_EQ(csv_escape("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_escape("say \"x\""), "\"say \"\"x\"\"\"");
}

TEST(Csv, RowLayout) {
  SweepRow r;
  r.n = 2;
  r.p = 2.0;
  r.K = 1.0;
  r.R = 10.0;
  r.lambda_solver = 0.5;
  r.error = "bad, worse";
  EXPECT_EQ(to_csv({r}), std::string(kCsvHeader) + "\n2,2,1,10,0.5,,,,,,,\"bad, worse\"\n");
}

TEST(Csv, PlotData) {
  std::ostringstream os;
  write_plot_data(os, {1.0, 2.0}, {0.5, 0.25});
  EXPECT_EQ(os.str(), "1 0.5\n2 0.25\n");
  EXPECT_THROW(write_plot_data(os, {1.0}, {}), plap::DomainError);
}

TEST(Sweep, EmptyGivesHeaderOnly) {
  SweepSpec spec;
  std::ostringstream log;
  const auto rows = run_sweep(spec, log);
  EXPECT_TRUE(rows.empty());
  EXPECT_EQ(to_csv(rows), std::string(kCsvHeader) + "\n");
}

TEST(Sweep, SortedDeterministicAndComplete) {
  SweepSpec spec;
  spec.n = {3, 2};
  spec.p = {2.0, 1.5};
  spec.K = {1.0};
  spec.R = {10.0, 5.0};
  std::ostringstream log;
  const auto rows = run_sweep(spec, log);
  ASSERT_EQ(rows.size(), 8u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_LT(std::tie(rows[i - 1].n, rows[i - 1].p, rows[i - 1].R), std::tie(rows[i].n, rows[i].p, rows[i].R));
  }
  for (const SweepRow& r : rows) {
    EXPECT_TRUE(r.error.empty()) << r.error;
    ASSERT_TRUE(r.lambda_solver && r.bound_paper && r.ratio && r.grad_sup && r.sigma && r.residual);
    EXPECT_GT(*r.ratio, 1.0);
    EXPECT_EQ(r.grad_bound.has_value(), r.p != 2.0);
  }
  EXPECT_TRUE(log.str().empty());
  EXPECT_EQ(count_check_failures(rows, log), 0);
  EXPECT_EQ(to_csv(rows), to_csv(run_sweep(spec, log)));
}

TEST(Sweep, FlatCellsHaveNoGradientColumns) {
  SweepSpec spec;
  const CellOutcome c = evaluate_cell(2, 2.0, 0.0, 1.0, spec, true);
  EXPECT_TRUE(c.row.error.empty());
  EXPECT_TRUE(c.row.lambda_solver);
  EXPECT_FALSE(c.row.ratio);
  EXPECT_FALSE(c.row.grad_sup);
  EXPECT_TRUE(c.eigen);
  EXPECT_FALSE(c.positive);
}

TEST(Sweep, InvalidCellRecordsError) {
  SweepSpec spec;
  spec.n = {1};
  spec.p = {2.0};
  spec.K = {1.0};
  spec.R = {5.0};
  std::ostringstream log;
  const auto rows = run_sweep(spec, log);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_FALSE(rows[0].error.empty());
  EXPECT_FALSE(rows[0].lambda_solver);
  EXPECT_NE(log.str().find("n=1"), std::string::npos);
  EXPECT_EQ(count_check_failures(rows, log), 1);
}

TEST(Sweep, CheckFailures) {
  SweepRow ok;
  ok.n = 2;
  ok.p = 1.5;
  ok.K = 1.0;
  ok.R = 5.0;
  ok.ratio = 1.2;
  ok.grad_sup = 0.1;
  ok.grad_bound = 0.2;
  SweepRow low_ratio = ok;
  low_ratio.ratio = 0.99;
  SweepRow big_grad = ok;
  big_grad.grad_sup = 0.3;
  SweepRow flat = ok;
  flat.K = 0.0;
  flat.ratio = 0.5;
  std::ostringstream log;
  EXPECT_EQ(count_check_failures({ok, flat}, log), 0);
  EXPECT_EQ(count_check_failures({ok, low_ratio, big_grad}, log), 2);
  EXPECT_NE(log.str().find("CHECK FAIL"), std::string::npos);
}

TEST(Sweep, PlotFiles) {
  const auto dir = scratch("plots");
  SweepSpec spec;
  spec.n = {2};
  spec.p = {2.0};
  spec.K = {1.0};
  spec.R = {5.0, 10.0};
  std::ostringstream log;
  const auto files = write_sweep_plots(run_sweep(spec, log), dir.string());
  ASSERT_EQ(files.size(), 2u);
  EXPECT_TRUE(std::filesystem::exists(dir / "lambda_vs_R_n2_p2_K1.dat"));
  EXPECT_TRUE(std::filesystem::exists(dir / "ratio_vs_R_n2_p2_K1.dat"));
  std::ifstream f(dir / "lambda_vs_R_n2_p2_K1.dat");
  std::string line;
  int lines = 0;
  while (std::getline(f, line)) ++lines;
  EXPECT_EQ(lines, 2);

  const auto cell = evaluate_cell(2, 2.0, 1.0, 5.0, spec, true);
  EXPECT_EQ(write_cell_plots(cell, dir.string()).size(), 3u);
  EXPECT_TRUE(std::filesystem::exists(dir / "positive_G.dat"));
  std::filesystem::remove_all(dir);
}

TEST(Verify, BoundsSuitePasses) {
  const auto checks = run_suite("bounds");
  ASSERT_FALSE(checks.empty());
  std::ostringstream os;
  EXPECT_EQ(print_report(os, checks), 0) << os.str();
  EXPECT_NE(os.str().find("PASS"), std::string::npos);
}

TEST(Verify, UnknownSuite) { EXPECT_THROW(run_suite("nope"), UnknownSuite); }

TEST(Verify, PTwoLimitChecks) {
  const auto checks = limit_checks(2, 2.0, 1.0, 0.2);
  ASSERT_FALSE(checks.empty());
  std::ostringstream os;
  EXPECT_EQ(print_report(os, checks), 0) << os.str();
}
