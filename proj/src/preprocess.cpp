#include "ukpb/preprocess.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>

namespace ukpb {

namespace {

// Indices of the first maximum-profit type of each weight, in input order.
std::vector<std::size_t> dominance_survivors(std::span<const ItemType> types) {
  std::unordered_map<std::int64_t, std::size_t> best;  // weight -> keeper
  for (std::size_t j = 0; j < types.size(); ++j) {
    auto [it, inserted] = best.try_emplace(types[j].weight, j);
    if (!inserted && types[j].profit > types[it->second].profit) it->second = j;
  }
  std::vector<std::size_t> out;
  out.reserve(best.size());
  for (std::size_t j = 0; j < types.size(); ++j)
    if (best.at(types[j].weight) == j) out.push_back(j);
  return out;
}

}  // namespace

std::vector<ItemType> dominance_reduce(std::span<const ItemType> types) {
  std::vector<ItemType> out;
  for (std::size_t j : dominance_survivors(types)) out.push_back(types[j]);
  return out;
}

namespace {

bool density_order(const ItemType& a, const ItemType& b) {
  if (!same_density(a, b)) return denser(a, b);
  if (a.weight != b.weight) return a.weight < b.weight;
  return a.profit < b.profit;
}

}  // namespace

std::vector<ItemType> sort_by_density(std::span<const ItemType> types) {
  std::vector<ItemType> out(types.begin(), types.end());
  std::stable_sort(out.begin(), out.end(), density_order);
  return out;
}

NormalizedInstance normalize(const Instance& inst) {
  const auto& src = inst.types;
  std::vector<std::size_t> idx = dominance_survivors(src);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return density_order(src[a], src[b]); });

  NormalizedInstance out;
  out.instance.coefficient_bound = inst.coefficient_bound;
  out.instance.capacity = inst.capacity;
  out.instance.types.reserve(idx.size());
  for (std::size_t j : idx) out.instance.types.push_back(src[j]);
  out.origin = std::move(idx);
  return out;
}

std::int64_t gcd_of(std::span<const std::int64_t> values) {
  assert(!values.empty());
  std::int64_t g = 0;
  for (std::int64_t v : values) {
    std::int64_t a = g, b = v;
    while (b != 0) {
      a %= b;
      std::swap(a, b);
    }
    g = a;
  }
  return g;
}

std::int64_t find_t_prime(std::int64_t g, std::int64_t bound) {
  assert(g >= 1 && g <= bound);
  const std::int64_t sq = bound * bound;
  const std::int64_t t = (sq / g + 1) * g;
  assert(t > sq && t <= sq + bound);
  return t;
}

Partition partition(const Instance& normalized) {
  const auto& types = normalized.types;
  assert(!types.empty());
  Partition part;
  part.break_index = 0;
  const ItemType& b = types[0];
  std::vector<std::int64_t> n1_weights;
  for (std::size_t j = 0; j < types.size(); ++j) {
    if (same_density(types[j], b)) {
      part.n1_indices.push_back(j);
      n1_weights.push_back(types[j].weight);
    } else {
      assert(denser(b, types[j]));
      part.n2_indices.push_back(j);
    }
  }
  part.residual = static_cast<std::int64_t>(normalized.capacity % b.weight);
  part.gcd_w1 = gcd_of(n1_weights);
  part.t_prime = find_t_prime(part.gcd_w1, normalized.coefficient_bound);
  return part;
}

}  // namespace ukpb
