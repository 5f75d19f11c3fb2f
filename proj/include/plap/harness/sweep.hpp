#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "plap/eigen_result.hpp"
#include "plap/harness/config.hpp"
#include "plap/harness/csv.hpp"
#include "plap/radial_profile.hpp"

namespace plap::harness {

struct CellOutcome {
  SweepRow row;
  std::optional<EigenResult> eigen;       ///< ground state of B(R)
  std::optional<RadialProfile> positive;  ///< positive solution feeding the gradient columns
};

/// Solves one (n, p, K, R) cell. Failures never throw; they land in row.error.
/// keep_profiles retains the eigen and positive-solution profiles for plotting.
CellOutcome evaluate_cell(int n, double p, double K, double R, const SweepSpec& spec, bool keep_profiles = false);

/// All cells of the cartesian product, solved on an OpenMP work pool and
/// returned sorted by (n, p, K, R). Skipped or failed cells are logged to `log`.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, std::ostream& log);

/// Number of check failures among the rows (see SweepSpec::check).
int count_check_failures(const std::vector<SweepRow>& rows, std::ostream& log);

/// Writes lambda_solver and ratio against R for each (n, p, K) group into dir.
/// Returns the written file paths.
std::vector<std::string> write_sweep_plots(const std::vector<SweepRow>& rows, const std::string& dir);

/// Writes u(r) and G(r) of the outcome's profiles into dir.
std::vector<std::string> write_cell_plots(const CellOutcome& cell, const std::string& dir);

}  // namespace plap::harness
