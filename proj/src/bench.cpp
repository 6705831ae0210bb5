#include "ukpb/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <thread>

#include "json.hpp"
#include "ukpb/instance_io.hpp"
#include "ukpb/oracle.hpp"
#include "ukpb/solver.hpp"

namespace ukpb {

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
auto timed(F&& f, double& seconds) {
  const auto start = Clock::now();
  auto result = f();
  seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return result;
}

}  // namespace

std::string write_report(const Instance& inst, const SolveReport& report) {
  using Json = nlohmann::ordered_json;
  const Solution& sol = report.solution;
  Json doc;
  doc["R"] = inst.coefficient_bound;
  doc["capacity"] = to_decimal(inst.capacity);
  doc["objective"] = to_decimal(sol.objective);
  doc["total_weight"] = to_decimal(sol.total_weight);
  Json counts = Json::array();
  for (const BigInt& x : sol.counts) counts.push_back(to_decimal(x));
  doc["counts"] = std::move(counts);

  const BoundReport& b = report.bounds;
  doc["bounds"] = {{"greedy_lower", to_decimal(b.greedy_lower)},
                   {"dantzig_upper", to_decimal(b.dantzig_upper)},
                   {"per_type_i_bound", b.per_type_i_bound},
                   {"n2_weight_cap", b.n2_weight_cap},
                   {"selection_bound", b.selection_bound},
                   {"classical_count_cap", b.classical_count_cap}};
  const SolveCounters& c = report.counters;
  doc["counters"] = {{"dp1_window", c.dp1_window},     {"dp1_cells", c.dp1_cells},
                     {"dp2_cells", c.dp2_cells},       {"dp1_updates", c.dp1_updates},
                     {"dp2_updates", c.dp2_updates},   {"combine_steps", c.combine_steps},
                     {"argmax_t", c.argmax_t}};
  const SolveTimings& t = report.timings;
  doc["timings"] = {{"preprocess", t.preprocess}, {"dp1", t.dp1},
                    {"dp2", t.dp2},               {"combine", t.combine},
                    {"reconstruct", t.reconstruct}, {"total", t.total()}};
  return doc.dump(2) + "\n";
}

std::vector<CompareRow> compare_directory(const std::filesystem::path& dir,
                                          const SolverFn& solver, unsigned jobs) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end(),
            [](const auto& a, const auto& b) { return a.filename() < b.filename(); });

  std::vector<CompareRow> rows(files.size());
  std::vector<std::exception_ptr> errors(files.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      try {
        const Instance inst = load_instance(files[i]);
        CompareRow& row = rows[i];
        row.instance = files[i].filename().string();
        row.solver_objective = timed([&] { return solver(inst); }, row.solver_seconds).objective;
        row.oracle_objective = timed([&] { return oracle_dp(inst); }, row.oracle_seconds).objective;
        row.match = row.solver_objective == row.oracle_objective;
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(files.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

void write_compare_csv(std::ostream& out, const std::vector<CompareRow>& rows) {
  out << "instance,solver_objective,oracle_objective,match,solver_seconds,oracle_seconds\n";
  for (const CompareRow& r : rows)
    out << r.instance << ',' << to_decimal(r.solver_objective) << ','
        << to_decimal(r.oracle_objective) << ',' << (r.match ? "true" : "false") << ','
        << r.solver_seconds << ',' << r.oracle_seconds << '\n';
}

std::vector<ScalingRow> scaling_rows(const Instance& base, const std::vector<BigInt>& capacities,
                                     int repeats) {
  std::vector<ScalingRow> rows;
  for (const BigInt& c : capacities) {
    Instance inst = base;
    inst.capacity = c;
    ScalingRow row;
    row.bound = inst.coefficient_bound;
    row.capacity = c;
    row.seconds = std::numeric_limits<double>::infinity();
    for (int i = 0; i < std::max(repeats, 1); ++i) {
      double secs = 0;
      const SolveReport rep = timed([&] { return solve_with_report(inst); }, secs);
      row.seconds = std::min(row.seconds, secs);
      row.dp_updates = rep.counters.dp_updates();
      row.dp1_updates = rep.counters.dp1_updates;
      row.peak_cells = rep.counters.peak_cells();
      row.objective = rep.solution.objective;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_scaling_csv(std::ostream& out, const std::vector<ScalingRow>& rows) {
  out << "R,capacity,seconds,dp_updates,dp1_updates,peak_cells,objective\n";
  for (const ScalingRow& r : rows)
    out << r.bound << ',' << to_decimal(r.capacity) << ',' << r.seconds << ',' << r.dp_updates
        << ',' << r.dp1_updates << ',' << r.peak_cells << ',' << to_decimal(r.objective) << '\n';
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = std::min(x.size(), y.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double dn = static_cast<double>(n);
  return (dn * sxy - sx * sy) / (dn * sxx - sx * sx);
}

}  // namespace ukpb
