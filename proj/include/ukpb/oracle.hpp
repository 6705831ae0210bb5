#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ukpb/model.hpp"

namespace ukpb {

/// Enumeration budget of oracle_enumerate, in count vectors visited.
inline constexpr std::int64_t kEnumerateLimit = 10'000'000;

/// Capacity limit of oracle_dp.
inline constexpr std::int64_t kOracleDpLimit = 100'000'000;

/// Exhaustive search over count vectors. Every type but the one with the
/// smallest weight is enumerated; that last type is filled to the brim, which
/// is optimal for fixed other counts. Throws TooLargeError when the product of
/// (floor(C / w_j) + 1) over the enumerated types exceeds kEnumerateLimit.
Solution oracle_enumerate(const Instance& inst);

/// Full-capacity table over all types (no preprocessing) plus traceback.
/// Throws TooLargeError for C > kOracleDpLimit.
Solution oracle_dp(const Instance& inst);

/// best[W] = best profit of a multiset with weight exactly W (or -1 if none),
/// for W in 0..max_weight, found by enumerating every count vector.
/// `caps`, when nonempty, bounds each count.
std::vector<std::int64_t> enumerate_exact_weights(std::span<const ItemType> types,
                                                  std::int64_t max_weight,
                                                  std::span<const std::int64_t> caps = {});

/// Optimum for every capacity 0..max_capacity by the same enumeration as
/// oracle_enumerate, shared across capacities.
std::vector<std::int64_t> enumerate_capacity_sweep(std::span<const ItemType> types,
                                                   std::int64_t max_capacity);

}  // namespace ukpb
