#pragma once

#include <optional>
#include <string>
#include <vector>

#include "roldarp/offline.hpp"

namespace roldarp {

// Complete weighted graph plus a tour budget k. The graph's origin is unused.
struct TspInstance {
  Graph graph;
  Weight budget = 0;
};

void validate_tsp(const TspInstance& tsp);

struct Tour {
  Weight cost = 0;
  // Closed tour starting at node 0; the return edge is implied.
  std::vector<NodeId> order;
};

// Exhaustive enumeration of tours through node 0. Throws TooLarge for n > 9.
Tour tsp_brute(const TspInstance& tsp);

// Dynamic programming over subsets. Throws TooLarge for n > 16.
Weight tsp_held_karp(const TspInstance& tsp);

// TSP -> decision instance: G plus an origin (node n) joined to every node
// with weight 1, both orientations of each edge as alternative requests
// released at 1 with revenue 1, goal n and T = k + 1.
Instance reduce_tsp(const TspInstance& tsp);

struct EquivalenceOptions {
  // Raise the revenue of the first optimal-tour edge's requests to 2; the
  // equivalence is then expected to break.
  bool perturb_revenue = false;
  SolveOptions solve{64};
};

struct EquivalenceReport {
  Weight optimum = 0;            // from enumeration
  Weight optimum_dp = 0;         // from subset DP
  bool oracles_agree = false;
  bool yes_at_optimum = false;   // T = k* + 1
  bool witness_certified = false;
  bool witness_is_tour = false;  // every node once as source and destination
  bool no_below_optimum = false; // T = k*
  std::optional<Schedule> witness;
  // Schedule found with T = k*, when one exists.
  std::optional<Schedule> counterexample;
  std::string counterexample_text;

  bool holds() const {
    return oracles_agree && yes_at_optimum && witness_certified && no_below_optimum;
  }
};

// Runs both directions of the reduction against the exact decision solver.
// Throws TooLarge for n > 7.
EquivalenceReport check_equivalence(const TspInstance& tsp, const EquivalenceOptions& options = {});

// Complete graph on n nodes with weights drawn from [1, max_weight].
TspInstance random_tsp(std::uint64_t seed, int n, Weight max_weight);

}  // namespace roldarp
