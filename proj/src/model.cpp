#include "ukpb/model.hpp"

#include <string>

namespace ukpb {

const Instance& validate_instance(const Instance& inst) {
  if (inst.coefficient_bound < 1 || inst.coefficient_bound > kMaxCoefficientBound)
    throw ValidationError("coefficient bound R=" + std::to_string(inst.coefficient_bound) +
                          " outside [1, " + std::to_string(kMaxCoefficientBound) + "]");
  if (inst.types.empty()) throw ValidationError("instance has no item types");
  const std::int64_t r = inst.coefficient_bound;
  for (std::size_t j = 0; j < inst.types.size(); ++j) {
    const ItemType& t = inst.types[j];
    if (t.profit < 1 || t.profit > r || t.weight < 1 || t.weight > r)
      throw ValidationError("coefficient out of range: type " + std::to_string(j) + " (profit " +
                            std::to_string(t.profit) + ", weight " + std::to_string(t.weight) +
                            ") violates 1 <= p, w <= " + std::to_string(r));
  }
  if (inst.capacity < 0) throw ValidationError("negative capacity");
  return inst;
}

Instance make_instance(std::int64_t bound, std::vector<ItemType> types,
                       std::string_view capacity) {
  auto c = parse_decimal(capacity);
  if (!c) throw ValidationError("malformed capacity \"" + std::string(capacity) + "\"");
  Instance inst{bound, std::move(types), std::move(*c)};
  validate_instance(inst);
  return inst;
}

namespace {

template <typename Count>
Solution evaluate_impl(const Instance& inst, std::span<const Count> counts) {
  if (counts.size() != inst.types.size())
    throw std::invalid_argument("evaluate: " + std::to_string(counts.size()) +
                                " counts for " + std::to_string(inst.types.size()) + " types");
  Solution sol;
  sol.counts.reserve(counts.size());
  for (std::size_t j = 0; j < counts.size(); ++j) {
    BigInt x(counts[j]);
    if (x < 0) throw std::invalid_argument("evaluate: negative count");
    sol.total_weight += x * inst.types[j].weight;
    sol.objective += x * inst.types[j].profit;
    sol.counts.push_back(std::move(x));
  }
  if (sol.total_weight > inst.capacity)
    throw InfeasibleError("infeasible: weight " + to_decimal(sol.total_weight) +
                          " exceeds capacity " + to_decimal(inst.capacity));
  return sol;
}

}  // namespace

Solution evaluate(const Instance& inst, std::span<const BigInt> counts) {
  return evaluate_impl(inst, counts);
}

Solution evaluate(const Instance& inst, std::span<const std::int64_t> counts) {
  return evaluate_impl(inst, counts);
}

}  // namespace ukpb
