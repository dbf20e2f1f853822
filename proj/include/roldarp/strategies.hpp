#pragma once

#include <memory>
#include <string>
#include <vector>

#include "roldarp/online.hpp"

namespace roldarp {

// Greatest Revenue First on unit graphs. Decides on every even time when T
// is even (odd times when T is odd, idling at 0): picks the highest-revenue
// visible request, commits to it, spends one unit moving to its source (or
// waiting there) and serves it in the next unit.
class GreatestRevenueFirst final : public Strategy {
 public:
  std::string name() const override { return "grf"; }
  Action decide(const OnlineView& view) override;
};

// Weighted-graph adapter of GRF: whenever free, heads for the
// highest-revenue request that still fits before T and serves it on arrival.
// Never preempts.
class GreedyRevenue final : public Strategy {
 public:
  std::string name() const override { return "greedy"; }
  Action decide(const OnlineView& view) override;
};

// Serves whatever feasible request it can start soonest; higher revenue,
// then lower id, break ties. Never preempts.
class NearestStart final : public Strategy {
 public:
  std::string name() const override { return "nearest"; }
  Action decide(const OnlineView& view) override;
};

class AlwaysReject final : public Strategy {
 public:
  std::string name() const override { return "reject"; }
  Action decide(const OnlineView&) override { return Action::idle(); }
};

// Greedy, but when preemption is allowed it drops the running serve as soon
// as a strictly more valuable request is visible, feasible or not.
class Fickle final : public Strategy {
 public:
  std::string name() const override { return "fickle"; }
  Action decide(const OnlineView& view) override;
};

std::unique_ptr<Strategy> make_strategy(const std::string& name);

// Every strategy that ships; "grf" only runs on unit graphs.
std::vector<std::string> shipped_strategies(bool unit_graph);

// GRF over the instance; throws NotUnitGraph.
StrategyTrace run_grf(const Instance& inst);

}  // namespace roldarp
