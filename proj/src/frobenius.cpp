#include "ukpb/frobenius.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>

namespace ukpb {

bool frobenius_guaranteed(std::int64_t target, std::span<const std::int64_t> weights,
                          std::int64_t gcd) {
  if (weights.empty() || target < 0 || target % gcd != 0) return false;
  const auto [lo, hi] = std::minmax_element(weights.begin(), weights.end());
  return target >= (*lo - 1) * (*hi - 1);
}

N1Plan build_n1_plan(std::span<const ItemType> n1_types, std::int64_t gcd, std::int64_t t_prime,
                     std::int64_t bound) {
  assert(!n1_types.empty());
  N1Plan plan;
  plan.bound = bound;
  plan.gcd = gcd;
  plan.t_prime = t_prime;
  plan.dp2 = build_table(n1_types, N1Plan::window_for(bound));
  plan.x_prime = traceback(plan.dp2, t_prime);

  std::int64_t weight = 0;
  for (std::size_t j = 0; j < n1_types.size(); ++j) {
    weight += plan.x_prime[j] * n1_types[j].weight;
    plan.x_prime_profit += plan.x_prime[j] * n1_types[j].profit;
  }
  if (weight != t_prime)
    throw std::logic_error("build_n1_plan: witness weighs " + std::to_string(weight) +
                           ", expected t' = " + std::to_string(t_prime));
  return plan;
}

N1Fill best_n1_for_budget(const N1Plan& plan, const BigInt& budget) {
  if (budget < 0) throw std::invalid_argument("best_n1_for_budget: negative budget");
  const std::int64_t window = plan.dp2.window;
  N1Fill fill;
  if (budget <= window) {
    const auto b = static_cast<std::int64_t>(budget);
    fill.profit = plan.dp2.profit[static_cast<std::size_t>(b)];
    for (std::int64_t x : traceback(plan.dp2, b)) fill.counts.emplace_back(x);
    return fill;
  }
  BigInt q;
  BigInt m;
  boost::multiprecision::divide_qr(budget, BigInt(plan.t_prime), q, m);
  const std::int64_t t2 = plan.t_prime + static_cast<std::int64_t>(m);
  const BigInt repeats = q - 1;
  fill.profit = plan.dp2.profit[static_cast<std::size_t>(t2)] + repeats * plan.x_prime_profit;
  const auto x2 = traceback(plan.dp2, t2);
  for (std::size_t j = 0; j < x2.size(); ++j)
    fill.counts.push_back(x2[j] + repeats * plan.x_prime[j]);
  return fill;
}

std::int64_t best_n1_profit(const N1Plan& plan, std::int64_t budget) {
  assert(budget >= 0);
  if (budget <= plan.dp2.window) return plan.dp2.profit[static_cast<std::size_t>(budget)];
  const std::int64_t q = budget / plan.t_prime;
  const std::int64_t t2 = plan.t_prime + budget % plan.t_prime;
  return plan.dp2.profit[static_cast<std::size_t>(t2)] + (q - 1) * plan.x_prime_profit;
}

}  // namespace ukpb
