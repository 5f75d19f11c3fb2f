#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace plap::harness {

/// One sweep cell. Columns that do not apply to the cell stay empty.
struct SweepRow {
  int n = 0;
  double p = 0.0;
  double K = 0.0;
  double R = 0.0;
  std::optional<double> lambda_solver;
  std::optional<double> bound_paper;
  std::optional<double> ratio;
  std::optional<double> grad_sup;
  std::optional<double> grad_bound;
  std::optional<double> sigma;
  std::optional<double> residual;
  std::string error;
};

inline constexpr const char* kCsvHeader =
    "n,p,K,R,lambda_solver,bound_paper,ratio,grad_sup,grad_bound,sigma,residual,error";

/// %.17g, round-trip safe.
std::string format_exact(double x);
/// 6 significant digits for human-readable tables.
std::string format_human(double x);

/// Quotes a field when it contains a comma, quote or newline.
std::string csv_escape(const std::string& field);

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);

/// Two-column "x y" plot data, one point per line.
void write_plot_data(std::ostream& out, const std::vector<double>& x, const std::vector<double>& y);

}  // namespace plap::harness
