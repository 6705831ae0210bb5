#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ukpb/model.hpp"
#include "ukpb/unbounded_dp.hpp"

namespace ukpb {

/// Everything needed to fill any budget, however large, with equal-density
/// types: a table over 0..2R^2+2R and a witness of weight exactly t'.
struct N1Plan {
  std::int64_t bound = 0;        // R
  std::int64_t gcd = 1;          // gcd of the N1 weights
  std::int64_t t_prime = 0;
  std::vector<std::int64_t> x_prime;  // counts of weight exactly t_prime
  std::int64_t x_prime_profit = 0;
  DpTable dp2;

  static constexpr std::int64_t window_for(std::int64_t bound) {
    return 2 * bound * bound + 2 * bound;
  }
};

/// Sufficient representability test: g | target and
/// target >= (min - 1)(max - 1).
bool frobenius_guaranteed(std::int64_t target, std::span<const std::int64_t> weights,
                          std::int64_t gcd);

/// Builds the table over N1 and extracts X'. Throws std::logic_error if the
/// traceback at t' does not weigh exactly t'.
N1Plan build_n1_plan(std::span<const ItemType> n1_types, std::int64_t gcd,
                     std::int64_t t_prime, std::int64_t bound);

struct N1Fill {
  BigInt profit = 0;
  std::vector<BigInt> counts;  // one per N1 type
};

/// Best equal-density fill of weight <= budget. Budgets inside the table are
/// looked up directly; larger ones use X'' at t'' = t' + (budget mod t') plus
/// (floor(budget / t') - 1) copies of X'.
N1Fill best_n1_for_budget(const N1Plan& plan, const BigInt& budget);

/// Profit-only version for machine budgets, no tracebacks.
std::int64_t best_n1_profit(const N1Plan& plan, std::int64_t budget);

}  // namespace ukpb
