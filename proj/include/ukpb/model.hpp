#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ukpb/bigint.hpp"

namespace ukpb {

/// Largest coefficient bound accepted. Keeps every DP profit entry inside a
/// window of R^3 cells below R^4 <= 2^60.
inline constexpr std::int64_t kMaxCoefficientBound = std::int64_t{1} << 15;

struct ItemType {
  std::int64_t profit = 0;
  std::int64_t weight = 0;

  friend bool operator==(const ItemType&, const ItemType&) = default;
};

struct Instance {
  std::int64_t coefficient_bound = 0;  // R
  std::vector<ItemType> types;
  BigInt capacity = 0;  // C
};

struct Solution {
  std::vector<BigInt> counts;  // one entry per instance type
  BigInt total_weight = 0;
  BigInt objective = 0;
};

/// Instance rejected by validate_instance or by the file parser.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A count vector whose weight exceeds the capacity.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An oracle refused an instance above its size guard.
class TooLargeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Checks 1 <= R <= kMaxCoefficientBound, a nonempty type list and
/// 1 <= p_j, w_j <= R for every type. Throws ValidationError naming the
/// offending type.
const Instance& validate_instance(const Instance& inst);

/// Builds and validates an instance from a decimal capacity string.
Instance make_instance(std::int64_t bound, std::vector<ItemType> types,
                       std::string_view capacity);

/// Recomputes weight and objective of `counts` exactly. Throws
/// InfeasibleError if the weight exceeds the capacity.
Solution evaluate(const Instance& inst, std::span<const BigInt> counts);

/// Convenience overload for machine-sized counts.
Solution evaluate(const Instance& inst, std::span<const std::int64_t> counts);

/// a is strictly denser than b: p_a * w_b > p_b * w_a.
constexpr bool denser(const ItemType& a, const ItemType& b) {
  return a.profit * b.weight > b.profit * a.weight;
}

constexpr bool same_density(const ItemType& a, const ItemType& b) {
  return a.profit * b.weight == b.profit * a.weight;
}

}  // namespace ukpb
