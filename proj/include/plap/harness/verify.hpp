#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace plap::harness {

struct Check {
  std::string suite;
  std::string name;
  bool pass = false;
  std::string detail;
};

class UnknownSuite : public std::invalid_argument {
 public:
  explicit UnknownSuite(const std::string& name) : std::invalid_argument("unknown suite '" + name + "'") {}
};

/// bounds, certificate, solver, lemma, all.
const std::vector<std::string>& suite_names();

/// Runs one property suite (or all of them) and returns every check.
std::vector<Check> run_suite(const std::string& suite);

/// Finite-R and p -> 2 limit checks for one (n, p, K, lambda) cell.
/// p == 2 runs only the p -> 2 limits.
std::vector<Check> limit_checks(int n, double p, double K, double lambda);

/// Prints one PASS/FAIL line per check and returns the number of failures.
int print_report(std::ostream& out, const std::vector<Check>& checks);

}  // namespace plap::harness
