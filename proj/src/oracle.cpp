#include "ukpb/oracle.hpp"

#include <algorithm>

#include "ukpb/unbounded_dp.hpp"

namespace ukpb {

namespace {

// Depth-first walk over count vectors of `types` with total weight <= limit.
template <typename Visit>
void walk(std::span<const ItemType> types, std::span<const std::int64_t> caps,
          std::int64_t limit, std::vector<std::int64_t>& counts, std::size_t depth,
          std::int64_t weight, std::int64_t profit, Visit& visit) {
  if (depth == types.size()) {
    visit(counts, weight, profit);
    return;
  }
  const ItemType& t = types[depth];
  std::int64_t most = (limit - weight) / t.weight;
  if (!caps.empty()) most = std::min(most, caps[depth]);
  for (std::int64_t x = 0; x <= most; ++x) {
    counts[depth] = x;
    walk(types, caps, limit, counts, depth + 1, weight + x * t.weight, profit + x * t.profit,
         visit);
  }
  counts[depth] = 0;
}

// Position of the smallest-weight type; it is filled greedily, never enumerated.
std::size_t lightest(std::span<const ItemType> types) {
  return static_cast<std::size_t>(
      std::min_element(types.begin(), types.end(),
                       [](const ItemType& a, const ItemType& b) { return a.weight < b.weight; }) -
      types.begin());
}

}  // namespace

Solution oracle_enumerate(const Instance& inst) {
  validate_instance(inst);
  const auto c_opt = to_int64(inst.capacity);
  if (!c_opt || *c_opt > kOracleDpLimit)
    throw TooLargeError("oracle_enumerate: capacity too large");
  const std::int64_t c = *c_opt;
  const std::size_t last = lightest(inst.types);

  std::vector<ItemType> rest;
  std::vector<std::size_t> rest_index;
  double volume = 1;
  for (std::size_t j = 0; j < inst.types.size(); ++j) {
    if (j == last) continue;
    rest.push_back(inst.types[j]);
    rest_index.push_back(j);
    volume *= static_cast<double>(c / inst.types[j].weight + 1);
  }
  if (volume > static_cast<double>(kEnumerateLimit))
    throw TooLargeError("oracle_enumerate: instance too large to enumerate");

  const ItemType& fill = inst.types[last];
  std::int64_t best_profit = -1;
  std::vector<std::int64_t> best(inst.types.size(), 0);
  std::vector<std::int64_t> counts(rest.size(), 0);
  auto visit = [&](const std::vector<std::int64_t>& xs, std::int64_t weight, std::int64_t profit) {
    const std::int64_t extra = (c - weight) / fill.weight;
    const std::int64_t total = profit + extra * fill.profit;
    if (total > best_profit) {
      best_profit = total;
      std::fill(best.begin(), best.end(), 0);
      for (std::size_t i = 0; i < xs.size(); ++i) best[rest_index[i]] = xs[i];
      best[last] = extra;
    }
  };
  walk(std::span<const ItemType>(rest), {}, c, counts, 0, 0, 0, visit);
  return evaluate(inst, std::span<const std::int64_t>(best));
}

Solution oracle_dp(const Instance& inst) {
  validate_instance(inst);
  const auto c = to_int64(inst.capacity);
  if (!c || *c > kOracleDpLimit) throw TooLargeError("oracle_dp: capacity too large");
  const DpTable table = build_table(inst.types, *c);
  return evaluate(inst, std::span<const std::int64_t>(traceback(table, *c)));
}

std::vector<std::int64_t> enumerate_exact_weights(std::span<const ItemType> types,
                                                  std::int64_t max_weight,
                                                  std::span<const std::int64_t> caps) {
  std::vector<std::int64_t> best(static_cast<std::size_t>(max_weight) + 1, -1);
  std::vector<std::int64_t> counts(types.size(), 0);
  auto visit = [&](const std::vector<std::int64_t>&, std::int64_t weight, std::int64_t profit) {
    auto& slot = best[static_cast<std::size_t>(weight)];
    slot = std::max(slot, profit);
  };
  walk(types, caps, max_weight, counts, 0, 0, 0, visit);
  return best;
}

std::vector<std::int64_t> enumerate_capacity_sweep(std::span<const ItemType> types,
                                                   std::int64_t max_capacity) {
  const auto n = static_cast<std::size_t>(max_capacity) + 1;
  std::vector<std::int64_t> best(n, 0);
  if (types.empty()) return best;
  const std::size_t last = lightest(types);
  std::vector<ItemType> rest;
  for (std::size_t j = 0; j < types.size(); ++j)
    if (j != last) rest.push_back(types[j]);
  const std::vector<std::int64_t> exact = enumerate_exact_weights(rest, max_capacity);
  const ItemType& fill = types[last];
  for (std::size_t w = 0; w < n; ++w) {
    if (exact[w] < 0) continue;
    for (std::size_t c = w; c < n; ++c) {
      const auto extra = static_cast<std::int64_t>(c - w) / fill.weight;
      best[c] = std::max(best[c], exact[w] + extra * fill.profit);
    }
  }
  return best;
}

}  // namespace ukpb
