#pragma once

#include <cstdint>
#include <vector>

#include "ukpb/model.hpp"
#include "ukpb/preprocess.hpp"

namespace ukpb {

struct BoundReport {
  BigInt greedy_lower = 0;
  BigInt dantzig_upper = 0;
  /// For each N2 type (in partition order): the smallest i >= 1 at which the
  /// determinant test fails. The test holds for every smaller i.
  std::vector<std::int64_t> per_type_i_bound;
  std::int64_t n2_weight_cap = 0;  // R^3
  std::int64_t selection_bound = 0;  // R^2
  /// Classical aggregate cap on non-break selections, w_b - 1. Diagnostic only.
  std::int64_t classical_count_cap = 0;
};

/// floor(C / w_1) copies of the break type, then the residual filled greedily
/// over the remaining types in density order.
BigInt greedy_lower_bound(const Instance& normalized, const Partition& part);

/// U = floor(C / w_1) p_1 + floor(r p_2 / w_2); the second term is dropped
/// for single-type instances.
BigInt dantzig_upper_bound(const Instance& normalized, const Partition& part);

/// Exact form of det[[p_j, w_j - r/i], [p_b, w_b]] > 0 with the i cleared:
/// i (p_j w_b - p_b w_j) + p_b r > 0.
bool determinant_test(const ItemType& type, const ItemType& break_type,
                      std::int64_t residual, std::int64_t i);

/// Smallest i >= 1 for which determinant_test is false. `type` must be
/// strictly less dense than `break_type`.
std::int64_t first_failing_i(const ItemType& type, const ItemType& break_type,
                             std::int64_t residual);

constexpr std::int64_t selection_bound(std::int64_t bound) { return bound * bound; }

constexpr std::int64_t n2_weight_cap(std::int64_t bound) { return bound * bound * bound; }

BoundReport bound_report(const Instance& normalized, const Partition& part);

}  // namespace ukpb
