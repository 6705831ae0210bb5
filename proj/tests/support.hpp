#pragma once

// Reference routines for tests. Deliberately naive and independent of the
// library's table code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "ukpb/model.hpp"

namespace ukpb::testing {

/// Layered recursion over types with an explicit copy count:
/// best(j, k) = max_x best(j-1, k - x w_j) + x p_j. Returns best(n, k) for
/// every k in 0..cap.
inline std::vector<std::int64_t> layered_optimum(const std::vector<ItemType>& types,
                                                 std::int64_t cap) {
  std::vector<std::int64_t> prev(static_cast<std::size_t>(cap) + 1, 0), cur;
  for (const ItemType& t : types) {
    cur = prev;
    for (std::int64_t k = 0; k <= cap; ++k)
      for (std::int64_t x = 1; x * t.weight <= k; ++x)
        cur[k] = std::max(cur[k], prev[k - x * t.weight] + x * t.profit);
    prev.swap(cur);
  }
  return prev;
}

/// Textbook full-capacity unbounded recursion best[k] = max(best[k-1],
/// best[k - w_j] + p_j); linear in the capacity.
inline std::vector<std::int64_t> full_capacity_optimum(const std::vector<ItemType>& types,
                                                       std::int64_t cap) {
  std::vector<std::int64_t> best(static_cast<std::size_t>(cap) + 1, 0);
  for (std::int64_t k = 1; k <= cap; ++k) {
    best[k] = best[k - 1];
    for (const ItemType& t : types)
      if (t.weight <= k) best[k] = std::max(best[k], best[k - t.weight] + t.profit);
  }
  return best;
}

/// Brute-force recursion over count vectors; optimum for one capacity.
inline std::int64_t brute_force(const std::vector<ItemType>& types, std::int64_t cap,
                                std::size_t j = 0) {
  if (j == types.size()) return 0;
  std::int64_t best = 0;
  for (std::int64_t x = 0; x * types[j].weight <= cap; ++x)
    best = std::max(best, x * types[j].profit + brute_force(types, cap - x * types[j].weight, j + 1));
  return best;
}

/// Calls f on every type set with pairwise distinct weights drawn from
/// [1, R] and profits from [1, R] (every dominance-reduced set).
inline void for_each_reduced_set(std::int64_t bound,
                                 const std::function<void(const std::vector<ItemType>&)>& f) {
  std::vector<ItemType> cur;
  std::function<void(std::int64_t)> rec = [&](std::int64_t w) {
    if (w > bound) {
      if (!cur.empty()) f(cur);
      return;
    }
    rec(w + 1);
    for (std::int64_t p = 1; p <= bound; ++p) {
      cur.push_back({p, w});
      rec(w + 1);
      cur.pop_back();
    }
  };
  rec(1);
}

inline std::vector<ItemType> random_types(std::mt19937_64& rng, std::int64_t bound,
                                          std::int64_t count) {
  std::uniform_int_distribution<std::int64_t> coef(1, bound);
  std::vector<ItemType> out;
  for (std::int64_t i = 0; i < count; ++i) out.push_back({coef(rng), coef(rng)});
  return out;
}

}  // namespace ukpb::testing
