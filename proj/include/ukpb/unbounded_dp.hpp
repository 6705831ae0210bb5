#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ukpb/model.hpp"

namespace ukpb {

/// Unbounded knapsack table over capacities 0..window.
///
/// profit[k] is the best profit of a multiset with weight <= k. trace[k] is
/// 1 + the index of the type last added to reach profit[k], or 0 when no
/// type was recorded there (profit[k] then equals profit[k-1] or is 0).
struct DpTable {
  std::int64_t window = 0;
  std::vector<ItemType> types;
  std::vector<std::int64_t> profit;
  std::vector<std::int32_t> trace;
  /// Inner-loop relaxations performed while filling the table.
  std::uint64_t updates = 0;

  std::size_t cells() const { return profit.size(); }
};

/// Largest window build_table accepts.
inline constexpr std::int64_t kMaxDpWindow = std::int64_t{1} << 32;

/// Fills the table type by type; a candidate replaces the incumbent only on a
/// strict improvement. Throws std::length_error above kMaxDpWindow.
DpTable build_table(std::span<const ItemType> types, std::int64_t window);

/// Per-type counts reaching table.profit[k], with weight <= k.
std::vector<std::int64_t> traceback(const DpTable& table, std::int64_t k);

}  // namespace ukpb
