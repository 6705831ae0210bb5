// ukpb: generate, solve, compare and benchmark bounded-coefficient unbounded
// knapsack instances.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "ukpb/bench.hpp"
#include "ukpb/generator.hpp"
#include "ukpb/instance_io.hpp"
#include "ukpb/solver.hpp"

namespace fs = std::filesystem;
using namespace ukpb;

namespace {

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

// Writes to `path`, or stdout when it is empty.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

int run_generate(const std::string& family, std::int64_t bound, std::int64_t count,
                 std::int64_t types, const std::string& capacity, std::uint64_t seed,
                 const std::string& out_dir) {
  GeneratorConfig cfg;
  cfg.family = parse_family(family);
  cfg.bound = bound;
  cfg.type_count = types > 0 ? types : bound;
  cfg.capacity = parse_capacity_spec(capacity);
  cfg.seed = seed;
  const auto instances = generate(cfg, count);
  fs::create_directories(out_dir);
  for (std::size_t i = 0; i < instances.size(); ++i) {
    std::ostringstream name;
    name << family_name(cfg.family) << "_R" << bound << "_s" << seed << "_" << std::setw(5)
         << std::setfill('0') << i << ".json";
    save_instance(instances[i], fs::path(out_dir) / name.str());
  }
  std::cerr << "wrote " << instances.size() << " instances to " << out_dir << "\n";
  return 0;
}

int run_solve(const std::string& file, const std::string& report_path) {
  const Instance inst = load_instance(file);
  const SolveReport rep = solve_with_report(inst);
  std::cout << "objective " << to_decimal(rep.solution.objective) << "\n";
  std::cout << "weight " << to_decimal(rep.solution.total_weight) << "\n";
  std::cout << "counts";
  for (const BigInt& x : rep.solution.counts) std::cout << ' ' << to_decimal(x);
  std::cout << "\n";
  if (!report_path.empty()) emit(report_path, write_report(inst, rep));
  return 0;
}

int run_compare(const std::string& dir, unsigned jobs, const std::string& out) {
  const auto rows = compare_directory(dir, [](const Instance& i) { return solve(i); }, jobs);
  std::ostringstream csv;
  write_compare_csv(csv, rows);
  emit(out, csv.str());
  std::size_t mismatches = 0;
  for (const auto& r : rows) mismatches += r.match ? 0 : 1;
  if (mismatches != 0) std::cerr << mismatches << " mismatch(es)\n";
  return mismatches == 0 ? 0 : 1;
}

int run_scaling(const std::string& bounds, const std::string& capacities,
                const std::string& instance_file, const std::string& family,
                std::int64_t types, std::uint64_t seed, int repeats, const std::string& out) {
  std::vector<BigInt> caps;
  for (const auto& c : split_list(capacities)) caps.push_back(parse_capacity_spec(c));
  std::vector<ScalingRow> rows;
  if (!instance_file.empty()) {
    rows = scaling_rows(load_instance(instance_file), caps, repeats);
  } else {
    for (const auto& r : split_list(bounds)) {
      GeneratorConfig cfg;
      cfg.family = parse_family(family);
      cfg.bound = std::stoll(r);
      cfg.type_count = types > 0 ? types : cfg.bound;
      cfg.seed = seed;
      const auto part = scaling_rows(generate(cfg, 1).front(), caps, repeats);
      rows.insert(rows.end(), part.begin(), part.end());
    }
  }
  std::ostringstream csv;
  write_scaling_csv(csv, rows);
  emit(out, csv.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver for unbounded knapsack instances with bounded coefficients"};
  app.require_subcommand(1);

  std::string family = "uncorrelated", capacity = "10^6", out, file, dir, report, instance_file;
  std::string bounds = "20";
  std::int64_t bound = 10, count = 1, types = 0;
  std::uint64_t seed = 1;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  int repeats = 3;

  auto* gen = app.add_subcommand("generate", "Write random instance files");
  gen->add_option("--family", family, "uncorrelated | weakly-correlated | strongly-correlated | subset-sum");
  gen->add_option("--R", bound, "Coefficient bound")->required();
  gen->add_option("--count", count, "Number of instances");
  gen->add_option("--types", types, "Item types per instance (default R)");
  gen->add_option("--capacity", capacity, "Decimal capacity or 10^k");
  gen->add_option("--seed", seed, "RNG seed");
  gen->add_option("--out", out, "Output directory")->required();

  auto* sol = app.add_subcommand("solve", "Solve one instance file");
  sol->add_option("instance", file, "Instance file")->required();
  sol->add_option("--report,--out", report, "Write a JSON report here");

  auto* cmp = app.add_subcommand("compare", "Check the solver against the DP oracle");
  cmp->add_option("dir", dir, "Directory of instance files")->required();
  cmp->add_option("--jobs", jobs, "Worker threads");
  cmp->add_option("--out", out, "CSV output (default stdout)");

  auto* scl = app.add_subcommand("scaling", "Time one type set across capacities");
  scl->add_option("--R", bounds, "Comma-separated coefficient bounds");
  scl->add_option("--capacity", capacity, "Comma-separated capacities (decimal or 10^k)");
  scl->add_option("--instance", instance_file, "Take the type set from this file instead");
  scl->add_option("--family", family, "Generator family for the type set");
  scl->add_option("--types", types, "Item types (default R)");
  scl->add_option("--seed", seed, "RNG seed");
  scl->add_option("--repeats", repeats, "Runs per capacity; the fastest is reported");
  scl->add_option("--out", out, "CSV output (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) return run_generate(family, bound, count, types, capacity, seed, out);
    if (*sol) return run_solve(file, report);
    if (*cmp) return run_compare(dir, jobs, out);
    if (*scl)
      return run_scaling(bounds, capacity, instance_file, family, types, seed, repeats, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
