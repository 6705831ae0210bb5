#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "ukpb/model.hpp"
#include "ukpb/solver.hpp"

namespace ukpb {

/// JSON document for `ukpb solve --report`; large numbers as decimal strings.
std::string write_report(const Instance& inst, const SolveReport& report);

struct CompareRow {
  std::string instance;
  BigInt solver_objective = 0;
  BigInt oracle_objective = 0;
  bool match = false;
  double solver_seconds = 0;
  double oracle_seconds = 0;
};

using SolverFn = std::function<Solution(const Instance&)>;

/// Runs `solver` and oracle_dp on every *.json file of `dir` (sorted by file
/// name) with up to `jobs` workers. Rows come back in file-name order.
std::vector<CompareRow> compare_directory(const std::filesystem::path& dir,
                                          const SolverFn& solver, unsigned jobs = 1);

void write_compare_csv(std::ostream& out, const std::vector<CompareRow>& rows);

struct ScalingRow {
  std::int64_t bound = 0;
  BigInt capacity = 0;
  double seconds = 0;
  std::uint64_t dp_updates = 0;
  std::uint64_t dp1_updates = 0;
  std::size_t peak_cells = 0;
  BigInt objective = 0;
};

/// Solves the same type set at every capacity. Wall time is the minimum over
/// `repeats` runs.
std::vector<ScalingRow> scaling_rows(const Instance& base, const std::vector<BigInt>& capacities,
                                     int repeats = 1);

void write_scaling_csv(std::ostream& out, const std::vector<ScalingRow>& rows);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace ukpb
