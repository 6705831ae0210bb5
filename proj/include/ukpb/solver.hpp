#pragma once

#include <cstddef>
#include <cstdint>

#include "ukpb/bounds.hpp"
#include "ukpb/model.hpp"

namespace ukpb {

/// Work and memory counters. For a fixed type set they depend on the
/// capacity only through min(R^3, C).
struct SolveCounters {
  std::int64_t dp1_window = 0;
  std::size_t dp1_cells = 0;
  std::size_t dp2_cells = 0;
  std::uint64_t dp1_updates = 0;
  std::uint64_t dp2_updates = 0;
  std::uint64_t combine_steps = 0;
  std::int64_t argmax_t = 0;

  std::uint64_t dp_updates() const { return dp1_updates + dp2_updates; }
  std::size_t peak_cells() const { return dp1_cells + dp2_cells; }
};

/// Wall-clock seconds per phase.
struct SolveTimings {
  double preprocess = 0;
  double dp1 = 0;
  double dp2 = 0;
  double combine = 0;
  double reconstruct = 0;

  double total() const { return preprocess + dp1 + dp2 + combine + reconstruct; }
};

struct SolveReport {
  Solution solution;
  BoundReport bounds;
  SolveCounters counters;
  SolveTimings timings;
};

/// Exact optimum of a validated instance. Work and memory depend on R and the
/// number of types, not on C. Counts are reported against the input type
/// order; dominated types get zero.
Solution solve(const Instance& inst);

SolveReport solve_with_report(const Instance& inst);

}  // namespace ukpb
