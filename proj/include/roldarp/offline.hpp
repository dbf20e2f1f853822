#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "roldarp/schedule.hpp"

namespace roldarp {

struct SolveOptions {
  std::size_t max_requests = 16;
};

struct SearchStats {
  std::uint64_t expanded = 0;
  std::uint64_t pruned = 0;
};

struct OptResult {
  Schedule schedule;
  Revenue value{0};
  SearchStats stats;
};

// Exact offline optimum. Depth-first search over request orderings where each
// request starts as early as possible; a state (position, served set) is
// dropped when an equal-or-earlier clock was already reached for it. Throws
// TooManyRequests above the cap (the hard limit is 64).
OptResult solve_opt(const Instance& inst, const SolveOptions& options = {});

struct DecisionResult {
  bool yes = false;
  std::optional<Schedule> witness;
  SearchStats stats;
};

// Is there a feasible schedule earning at least inst.goal (0 if absent)?
// Stops at the first witness.
DecisionResult solve_decision(const Instance& inst, const SolveOptions& options = {});

struct MaxResult {
  Schedule schedule;
  // One slot per time 0..T-2; zero where nothing was available.
  std::vector<Revenue> trace;
  Revenue value{0};
};

// Analysis-only upper bound: in every slot 0..T-2 take the highest-revenue
// released request not yet taken (lowest id on ties), ignoring positions.
// Throws NotUnitGraph.
MaxResult run_max(const Instance& inst);

// Revenue of the last request of a schedule (0 if empty).
Revenue last_revenue(const Instance& inst, const Schedule& sched);

}  // namespace roldarp
