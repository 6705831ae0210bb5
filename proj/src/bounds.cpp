#include "ukpb/bounds.hpp"

#include <cassert>

namespace ukpb {

BigInt greedy_lower_bound(const Instance& normalized, const Partition& part) {
  const auto& types = normalized.types;
  const ItemType& b = types[part.break_index];
  BigInt value = (normalized.capacity / b.weight) * b.profit;
  std::int64_t left = part.residual;
  for (std::size_t j = 0; j < types.size(); ++j) {
    if (j == part.break_index) continue;
    const std::int64_t copies = left / types[j].weight;
    value += copies * types[j].profit;
    left -= copies * types[j].weight;
  }
  return value;
}

BigInt dantzig_upper_bound(const Instance& normalized, const Partition& part) {
  const auto& types = normalized.types;
  const ItemType& b = types[part.break_index];
  BigInt value = (normalized.capacity / b.weight) * b.profit;
  if (types.size() >= 2) {
    const ItemType& second = types[part.break_index == 0 ? 1 : 0];
    value += part.residual * second.profit / second.weight;
  }
  return value;
}

bool determinant_test(const ItemType& type, const ItemType& break_type, std::int64_t residual,
                      std::int64_t i) {
  return i * (type.profit * break_type.weight - break_type.profit * type.weight) +
             break_type.profit * residual >
         0;
}

std::int64_t first_failing_i(const ItemType& type, const ItemType& break_type,
                             std::int64_t residual) {
  const std::int64_t gap = break_type.profit * type.weight - type.profit * break_type.weight;
  assert(gap >= 1);
  // Fails once i * gap >= p_b r.
  const std::int64_t need = break_type.profit * residual;
  const std::int64_t i = (need + gap - 1) / gap;
  return i < 1 ? 1 : i;
}

BoundReport bound_report(const Instance& normalized, const Partition& part) {
  BoundReport rep;
  rep.greedy_lower = greedy_lower_bound(normalized, part);
  rep.dantzig_upper = dantzig_upper_bound(normalized, part);
  const ItemType& b = normalized.types[part.break_index];
  for (std::size_t j : part.n2_indices)
    rep.per_type_i_bound.push_back(first_failing_i(normalized.types[j], b, part.residual));
  rep.n2_weight_cap = n2_weight_cap(normalized.coefficient_bound);
  rep.selection_bound = selection_bound(normalized.coefficient_bound);
  rep.classical_count_cap = b.weight - 1;
  return rep;
}

}  // namespace ukpb
