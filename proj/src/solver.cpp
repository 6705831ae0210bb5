#include "ukpb/solver.hpp"

#include <chrono>
#include <limits>
#include <stdexcept>

#include "ukpb/frobenius.hpp"
#include "ukpb/preprocess.hpp"
#include "ukpb/unbounded_dp.hpp"

namespace ukpb {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<ItemType> select(const std::vector<ItemType>& types,
                             const std::vector<std::size_t>& indices) {
  std::vector<ItemType> out;
  out.reserve(indices.size());
  for (std::size_t j : indices) out.push_back(types[j]);
  return out;
}

struct Best {
  std::int64_t t = 0;
  std::int64_t score = 0;
};

}  // namespace

SolveReport solve_with_report(const Instance& inst) {
  validate_instance(inst);
  SolveReport rep;
  auto start = Clock::now();

  const NormalizedInstance norm = normalize(inst);
  const Instance& ni = norm.instance;
  const Partition part = partition(ni);
  rep.bounds = bound_report(ni, part);
  const std::int64_t bound = ni.coefficient_bound;
  const BigInt& capacity = ni.capacity;
  const std::vector<ItemType> n1_types = select(ni.types, part.n1_indices);
  const std::vector<ItemType> n2_types = select(ni.types, part.n2_indices);
  rep.timings.preprocess = seconds_since(start);

  // Some optimal solution puts at most R^3 weight on N2.
  start = Clock::now();
  const std::int64_t cap = n2_weight_cap(bound);
  const std::int64_t window = capacity < cap ? static_cast<std::int64_t>(capacity) : cap;
  const DpTable dp1 = build_table(n2_types, window);
  rep.timings.dp1 = seconds_since(start);

  start = Clock::now();
  const N1Plan plan = build_n1_plan(n1_types, part.gcd_w1, *part.t_prime, bound);
  rep.timings.dp2 = seconds_since(start);

  // Scan every split t of the capacity between N2 (weight <= t) and N1
  // (weight <= C - t). Ties go to the smallest t.
  start = Clock::now();
  Best best{0, std::numeric_limits<std::int64_t>::min()};
  BigInt common = 0;  // added to every score on the large-capacity path
  const std::int64_t t_prime = plan.t_prime;
  if (capacity <= window + plan.dp2.window) {
    const auto c = static_cast<std::int64_t>(capacity);
    for (std::int64_t t = 0; t <= window; ++t) {
      const std::int64_t score = dp1.profit[static_cast<std::size_t>(t)] + best_n1_profit(plan, c - t);
      if (score > best.score) best = {t, score};
    }
  } else {
    // Every budget C - t exceeds the DP2 window, so it is served by
    // X'' + (q - 1) X'. With C = Q t' + M and M - t = k t' + m (0 <= m < t'),
    // q = Q + k and t'' = t' + m; only k and m vary with t.
    BigInt quotient;
    BigInt remainder;
    boost::multiprecision::divide_qr(capacity, BigInt(t_prime), quotient, remainder);
    const auto rem = static_cast<std::int64_t>(remainder);
    for (std::int64_t t = 0; t <= window; ++t) {
      const std::int64_t k = floor_div(rem - t, t_prime);
      const std::int64_t m = rem - t - k * t_prime;
      const std::int64_t score = dp1.profit[static_cast<std::size_t>(t)] +
                                 plan.dp2.profit[static_cast<std::size_t>(t_prime + m)] +
                                 k * plan.x_prime_profit;
      if (score > best.score) best = {t, score};
    }
    common = (quotient - 1) * plan.x_prime_profit;
  }
  rep.timings.combine = seconds_since(start);

  start = Clock::now();
  const std::vector<std::int64_t> n2_counts = traceback(dp1, best.t);
  const N1Fill n1_fill = best_n1_for_budget(plan, capacity - best.t);
  std::vector<BigInt> counts(inst.types.size(), BigInt(0));
  for (std::size_t i = 0; i < part.n2_indices.size(); ++i)
    counts[norm.origin[part.n2_indices[i]]] = n2_counts[i];
  for (std::size_t i = 0; i < part.n1_indices.size(); ++i)
    counts[norm.origin[part.n1_indices[i]]] = n1_fill.counts[i];
  rep.solution = evaluate(inst, counts);
  if (rep.solution.objective != common + best.score)
    throw std::logic_error("solve: reconstructed objective " + to_decimal(rep.solution.objective) +
                           " differs from table value " + to_decimal(common + best.score));
  rep.timings.reconstruct = seconds_since(start);

  rep.counters.dp1_window = window;
  rep.counters.dp1_cells = dp1.cells();
  rep.counters.dp2_cells = plan.dp2.cells();
  rep.counters.dp1_updates = dp1.updates;
  rep.counters.dp2_updates = plan.dp2.updates;
  rep.counters.combine_steps = static_cast<std::uint64_t>(window + 1);
  rep.counters.argmax_t = best.t;
  return rep;
}

Solution solve(const Instance& inst) { return solve_with_report(inst).solution; }

}  // namespace ukpb
