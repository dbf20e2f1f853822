#include "roldarp/reduction.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>

namespace roldarp {

void validate_tsp(const TspInstance& tsp) {
  if (tsp.graph.node_count() < 3) {
    throw Error(ErrorCode::TooFewNodes, "TSP needs at least 3 nodes");
  }
  if (!tsp.graph.is_complete()) throw Error(ErrorCode::IncompleteGraph, "TSP graph must be complete");
}

namespace {

Weight cycle_cost(const Graph& g, const std::vector<NodeId>& order) {
  Weight cost = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    cost += g.weight(order[i], order[(i + 1) % order.size()]);
  }
  return cost;
}

}  // namespace

Tour tsp_brute(const TspInstance& tsp) {
  validate_tsp(tsp);
  const int n = tsp.graph.node_count();
  if (n > 9) throw Error(ErrorCode::TooLarge, "enumeration is limited to 9 nodes");
  std::vector<NodeId> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  Tour best{std::numeric_limits<Weight>::max(), {}};
  do {
    Weight cost = cycle_cost(tsp.graph, order);
    if (cost < best.cost) best = Tour{cost, order};
  } while (std::next_permutation(order.begin() + 1, order.end()));
  return best;
}

Weight tsp_held_karp(const TspInstance& tsp) {
  validate_tsp(tsp);
  const int n = tsp.graph.node_count();
  if (n > 16) throw Error(ErrorCode::TooLarge, "subset DP is limited to 16 nodes");
  constexpr Weight kInf = std::numeric_limits<Weight>::max() / 4;
  // best[mask][v]: cheapest path from node 0 through the nodes of mask (a
  // subset of 1..n-1) ending at v.
  const std::size_t subsets = std::size_t{1} << (n - 1);
  std::vector<std::vector<Weight>> best(subsets, std::vector<Weight>(static_cast<std::size_t>(n), kInf));
  for (int v = 1; v < n; ++v) best[std::size_t{1} << (v - 1)][v] = tsp.graph.weight(0, v);
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    for (int v = 1; v < n; ++v) {
      Weight here = best[mask][v];
      if (here >= kInf || !(mask & (std::size_t{1} << (v - 1)))) continue;
      for (int next = 1; next < n; ++next) {
        std::size_t bit = std::size_t{1} << (next - 1);
        if (mask & bit) continue;
        Weight& slot = best[mask | bit][next];
        slot = std::min(slot, here + tsp.graph.weight(v, next));
      }
    }
  }
  Weight out = kInf;
  for (int v = 1; v < n; ++v) out = std::min(out, best[subsets - 1][v] + tsp.graph.weight(v, 0));
  return out;
}

Instance reduce_tsp(const TspInstance& tsp) {
  validate_tsp(tsp);
  if (tsp.budget < 1) throw Error(ErrorCode::ConfigError, "TSP budget must be positive");
  const int n = tsp.graph.node_count();
  const NodeId origin = n;

  std::vector<Edge> edges = tsp.graph.edges();
  for (NodeId u = 0; u < n; ++u) edges.push_back({u, origin, 1});
  bool unit = std::all_of(edges.begin(), edges.end(), [](const Edge& e) { return e.w == 1; });

  Instance inst;
  inst.graph = Graph::from_edges(n + 1, origin, edges, unit);
  inst.time_limit = tsp.budget + 1;
  inst.goal = Revenue(n);

  RequestId id = 1;
  int group = 0;
  for (const Edge& e : tsp.graph.edges()) {
    inst.requests.push_back(Request{id++, e.u, e.v, 1, Revenue(1), group});
    inst.requests.push_back(Request{id++, e.v, e.u, 1, Revenue(1), group});
    ++group;
  }
  return inst;
}

namespace {

bool visits_every_node_once(const Instance& inst, const Schedule& sched, int n) {
  if (sched.entries.size() != static_cast<std::size_t>(n)) return false;
  std::vector<int> as_source(static_cast<std::size_t>(n), 0);
  std::vector<int> as_destination(static_cast<std::size_t>(n), 0);
  for (const auto& e : sched.entries) {
    const Request& r = inst.request(e.id);
    ++as_source[static_cast<std::size_t>(r.source)];
    ++as_destination[static_cast<std::size_t>(r.destination)];
  }
  auto once = [](int c) { return c == 1; };
  return std::all_of(as_source.begin(), as_source.end(), once) &&
         std::all_of(as_destination.begin(), as_destination.end(), once);
}

std::string describe(const Instance& inst, const Schedule& sched) {
  std::string out;
  for (const auto& e : sched.entries) {
    const Request& r = inst.request(e.id);
    if (!out.empty()) out += ", ";
    out += std::to_string(r.source) + "->" + std::to_string(r.destination) + "@" + std::to_string(e.start);
  }
  return out;
}

void perturb(Instance& inst, const Tour& tour) {
  NodeId a = tour.order[0];
  NodeId b = tour.order[1];
  for (Request& r : inst.requests) {
    if ((r.source == a && r.destination == b) || (r.source == b && r.destination == a)) r.revenue = Revenue(2);
  }
}

}  // namespace

EquivalenceReport check_equivalence(const TspInstance& tsp, const EquivalenceOptions& options) {
  validate_tsp(tsp);
  const int n = tsp.graph.node_count();
  if (n > 7) throw Error(ErrorCode::TooLarge, "equivalence check is limited to 7 nodes");

  EquivalenceReport report;
  Tour tour = tsp_brute(tsp);
  report.optimum = tour.cost;
  report.optimum_dp = tsp_held_karp(tsp);
  report.oracles_agree = report.optimum == report.optimum_dp;

  TspInstance at_optimum{tsp.graph, report.optimum};
  Instance yes_inst = reduce_tsp(at_optimum);
  if (options.perturb_revenue) perturb(yes_inst, tour);
  DecisionResult yes = solve_decision(yes_inst, options.solve);
  report.yes_at_optimum = yes.yes;
  if (yes.witness) {
    report.witness_certified = verify_certificate(yes_inst, *yes.witness).accepted();
    report.witness_is_tour = visits_every_node_once(yes_inst, *yes.witness, n);
    report.witness = yes.witness;
  }

  TspInstance below{tsp.graph, report.optimum - 1};
  Instance no_inst = reduce_tsp(below);
  if (options.perturb_revenue) perturb(no_inst, tour);
  DecisionResult no = solve_decision(no_inst, options.solve);
  report.no_below_optimum = !no.yes;
  if (no.yes && no.witness) {
    report.counterexample = no.witness;
    report.counterexample_text = describe(no_inst, *no.witness);
  }
  return report;
}

TspInstance random_tsp(std::uint64_t seed, int n, Weight max_weight) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Weight> weight(1, max_weight);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) edges.push_back({u, v, weight(rng)});
  }
  bool unit = max_weight == 1;
  return TspInstance{Graph::from_edges(n, 0, edges, unit), 0};
}

}  // namespace roldarp
