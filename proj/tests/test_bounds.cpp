#include <random>

#include "doctest.h"
#include "support.hpp"
#include "ukpb/bounds.hpp"
#include "ukpb/oracle.hpp"

using namespace ukpb;

namespace {

struct Prepared {
  Instance normalized;
  Partition part;
};

Prepared prepare(std::int64_t r, std::vector<ItemType> types, BigInt cap) {
  Prepared p;
  p.normalized = normalize(Instance{r, std::move(types), std::move(cap)}).instance;
  p.part = partition(p.normalized);
  return p;
}

}  // namespace

TEST_CASE("greedy lower bound examples") {
  const auto a = prepare(5, {{5, 3}, {3, 2}}, 100);
  CHECK(greedy_lower_bound(a.normalized, a.part) == 165);
  const auto b = prepare(3, {{3, 2}}, 7);
  CHECK(greedy_lower_bound(b.normalized, b.part) == 9);
  // Residual 4 after 2 copies of (7,5): greedy takes one (5,4).
  const auto c = prepare(7, {{7, 5}, {5, 4}, {1, 1}}, 14);
  CHECK(greedy_lower_bound(c.normalized, c.part) == 19);
}

TEST_CASE("Dantzig upper bound examples") {
  const auto a = prepare(5, {{5, 3}, {3, 2}}, 100);
  CHECK(dantzig_upper_bound(a.normalized, a.part) == 166);
  const auto b = prepare(3, {{3, 2}}, 7);
  CHECK(dantzig_upper_bound(b.normalized, b.part) == 9);
}

TEST_CASE("bounds sandwich the exhaustive optimum") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::int64_t> r_dist(1, 6), cap(0, 200);
  for (int trial = 0; trial < 3000; ++trial) {
    const std::int64_t r = r_dist(rng);
    std::uniform_int_distribution<std::int64_t> n_dist(1, r);
    auto types = ukpb::testing::random_types(rng, r, n_dist(rng));
    const std::int64_t c = cap(rng);
    const std::int64_t opt = ukpb::testing::layered_optimum(types, c)[c];
    const auto p = prepare(r, types, c);
    CHECK(greedy_lower_bound(p.normalized, p.part) <= opt);
    CHECK(dantzig_upper_bound(p.normalized, p.part) >= opt);
  }
}

TEST_CASE("determinant test examples") {
  const ItemType j{3, 2}, b{5, 3};
  CHECK(determinant_test(j, b, 1, 4));
  CHECK_FALSE(determinant_test(j, b, 1, 5));
  for (std::int64_t i = 1; i <= 50; ++i) CHECK_FALSE(determinant_test(j, b, 0, i));
  CHECK(first_failing_i(j, b, 1) == 5);
  CHECK(first_failing_i(j, b, 0) == 1);
}

TEST_CASE("determinant test is antitone in i and bounded by p_b w_b") {
  for (std::int64_t r = 1; r <= 9; ++r)
    for (std::int64_t pb = 1; pb <= r; ++pb)
      for (std::int64_t wb = 1; wb <= r; ++wb)
        for (std::int64_t pj = 1; pj <= r; ++pj)
          for (std::int64_t wj = 1; wj <= r; ++wj) {
            const ItemType b{pb, wb}, j{pj, wj};
            if (!denser(b, j)) continue;
            for (std::int64_t res = 0; res < wb; ++res) {
              const std::int64_t stop = first_failing_i(j, b, res);
              CHECK(stop <= r * r);
              for (std::int64_t i = 1; i <= r * r + 1; ++i) {
                const bool holds = determinant_test(j, b, res, i);
                CHECK(holds == (i < stop));
                if (holds) CHECK(i < pb * wb);
              }
            }
          }
}

TEST_CASE("selection and weight caps") {
  CHECK(selection_bound(5) == 25);
  CHECK(selection_bound(1) == 1);
  CHECK(n2_weight_cap(5) == 125);
  CHECK(n2_weight_cap(1) == 1);

  const auto p = prepare(5, {{5, 3}, {3, 2}, {4, 5}}, 100);
  const BoundReport rep = bound_report(p.normalized, p.part);
  CHECK(rep.greedy_lower == 165);
  CHECK(rep.dantzig_upper == 166);
  CHECK(rep.per_type_i_bound == std::vector<std::int64_t>{5, 1});
  CHECK(rep.n2_weight_cap == 125);
  CHECK(rep.selection_bound == 25);
  CHECK(rep.classical_count_cap == 2);
}

TEST_CASE("some optimum respects the N2 caps on random tiny instances") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<std::int64_t> r_dist(2, 4), cap(0, 300);
  for (int trial = 0; trial < 300; ++trial) {
    const std::int64_t r = r_dist(rng);
    const auto p = prepare(r, ukpb::testing::random_types(rng, r, r), cap(rng));
    const std::int64_t c = static_cast<std::int64_t>(p.normalized.capacity);
    std::vector<ItemType> n1, n2;
    for (std::size_t j : p.part.n1_indices) n1.push_back(p.normalized.types[j]);
    for (std::size_t j : p.part.n2_indices) n2.push_back(p.normalized.types[j]);
    const std::vector<std::int64_t> caps(n2.size(), selection_bound(r) - 1);
    const auto n2_exact = enumerate_exact_weights(n2, std::min(c, n2_weight_cap(r)), caps);
    const auto n1_best = enumerate_capacity_sweep(n1, c);
    std::int64_t capped = 0;
    for (std::size_t w = 0; w < n2_exact.size(); ++w)
      if (n2_exact[w] >= 0) capped = std::max(capped, n2_exact[w] + n1_best[c - static_cast<std::int64_t>(w)]);
    CHECK(capped == ukpb::testing::layered_optimum(p.normalized.types, c)[c]);
  }
}
