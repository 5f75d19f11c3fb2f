#include "plap/harness/csv.hpp"

#include <cstdio>

#include "plap/numeric.hpp"

namespace plap::harness {

namespace {

std::string format(const char* fmt, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, x);
  return buf;
}

std::string cell(const std::optional<double>& x) { return x ? format_exact(*x) : std::string(); }

}  // namespace

std::string format_exact(double x) { return format("%.17g", x); }

std::string format_human(double x) { return format("%.6g", x); }

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kCsvHeader << '\n';
  for (const SweepRow& r : rows) {
    out << r.n << ',' << format_exact(r.p) << ',' << format_exact(r.K) << ',' << format_exact(r.R) << ','
        << cell(r.lambda_solver) << ',' << cell(r.bound_paper) << ',' << cell(r.ratio) << ',' << cell(r.grad_sup)
        << ',' << cell(r.grad_bound) << ',' << cell(r.sigma) << ',' << cell(r.residual) << ','
        << csv_escape(r.error) << '\n';
  }
}

void write_plot_data(std::ostream& out, const std::vector<double>& x, const std::vector<double>& y) {
  require(x.size() == y.size(), "write_plot_data: x and y differ in length");
  for (std::size_t i = 0; i < x.size(); ++i) out << format_exact(x[i]) << ' ' << format_exact(y[i]) << '\n';
}

}  // namespace plap::harness
