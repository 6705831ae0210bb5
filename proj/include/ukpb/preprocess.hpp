#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ukpb/model.hpp"

namespace ukpb {

/// Keeps, for each distinct weight, the first type with the largest profit.
/// Survivors keep their input order.
std::vector<ItemType> dominance_reduce(std::span<const ItemType> types);

/// Stable sort by nonincreasing density; equal densities put the smaller
/// weight first, then the smaller profit.
std::vector<ItemType> sort_by_density(std::span<const ItemType> types);

/// Instance after dominance reduction and density sorting. `origin[i]` is the
/// index in the source instance of normalized type i.
struct NormalizedInstance {
  Instance instance;
  std::vector<std::size_t> origin;
};

NormalizedInstance normalize(const Instance& inst);

/// gcd of a nonempty list of positive integers, folded pairwise with Euclid.
std::int64_t gcd_of(std::span<const std::int64_t> values);

/// Smallest multiple of g in (R^2, R^2 + R]. Requires 1 <= g <= R.
std::int64_t find_t_prime(std::int64_t g, std::int64_t bound);

struct Partition {
  std::size_t break_index = 0;           // b, always the densest type
  std::vector<std::size_t> n1_indices;   // density equal to b
  std::vector<std::size_t> n2_indices;   // density strictly below b
  std::int64_t residual = 0;             // C mod w_b
  std::int64_t gcd_w1 = 1;
  std::optional<std::int64_t> t_prime;
};

/// Splits a normalized instance into the equal-density and lower-density
/// groups around its break type.
Partition partition(const Instance& normalized);

}  // namespace ukpb
