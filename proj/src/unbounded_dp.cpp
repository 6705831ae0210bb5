#include "ukpb/unbounded_dp.hpp"

#include <stdexcept>
#include <string>

namespace ukpb {

DpTable build_table(std::span<const ItemType> types, std::int64_t window) {
  if (window < 0) throw std::invalid_argument("build_table: negative window");
  if (window > kMaxDpWindow)
    throw std::length_error("build_table: window " + std::to_string(window) + " too large");

  DpTable table;
  table.window = window;
  table.types.assign(types.begin(), types.end());
  table.profit.assign(static_cast<std::size_t>(window) + 1, 0);
  table.trace.assign(static_cast<std::size_t>(window) + 1, 0);

  std::int64_t* dp = table.profit.data();
  std::int32_t* tr = table.trace.data();
  for (std::size_t j = 0; j < types.size(); ++j) {
    const std::int64_t w = types[j].weight;
    const std::int64_t p = types[j].profit;
    const auto mark = static_cast<std::int32_t>(j + 1);
    for (std::int64_t k = w; k <= window; ++k) {
      const std::int64_t cand = dp[k - w] + p;
      if (cand > dp[k]) {
        dp[k] = cand;
        tr[k] = mark;
      }
    }
    if (w <= window) table.updates += static_cast<std::uint64_t>(window - w + 1);
  }
  return table;
}

std::vector<std::int64_t> traceback(const DpTable& table, std::int64_t k) {
  if (k < 0 || k > table.window) throw std::out_of_range("traceback: index outside window");
  std::vector<std::int64_t> counts(table.types.size(), 0);
  std::int64_t t = k;
  while (table.trace[static_cast<std::size_t>(t)] != 0) {
    const std::size_t j = static_cast<std::size_t>(table.trace[static_cast<std::size_t>(t)] - 1);
    ++counts[j];
    t -= table.types[j].weight;
    if (t < 0) throw std::logic_error("traceback: corrupt table");
  }
  return counts;
}

}  // namespace ukpb
