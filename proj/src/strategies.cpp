#include "roldarp/strategies.hpp"

#include <algorithm>

namespace roldarp {

namespace {

// Higher revenue first, lowest id on ties.
bool ranks_above(const Request& a, const Request& b) {
  return a.revenue != b.revenue ? a.revenue > b.revenue : a.id < b.id;
}

const Request* best_by_revenue(const OnlineView& view, bool feasible_only) {
  const Request* best = nullptr;
  for (const Request& r : view.visible) {
    if (view.in_progress && r.id == view.in_progress->id) continue;
    if (feasible_only && !feasible_remaining(view, r)) continue;
    if (!best || ranks_above(r, *best)) best = &r;
  }
  return best;
}

Action head_for(const OnlineView& view, const Request& r) {
  return r.source == view.position ? Action::begin(r.id) : Action::move_to(r.source);
}

}  // namespace

Action GreatestRevenueFirst::decide(const OnlineView& view) {
  if (!view.graph->all_unit()) throw Error(ErrorCode::NotUnitGraph, "grf needs a unit graph");
  if (view.in_progress) return Action::idle();
  if (view.committed) return Action::begin(*view.committed);

  const Time decision_parity = view.time_limit % 2 == 0 ? 0 : 1;
  if (view.now % 2 != decision_parity || view.now + 2 > view.time_limit) return Action::idle();

  const Request* pick = best_by_revenue(view, false);
  if (!pick) return Action::idle();
  Action a = pick->source == view.position ? Action::idle() : Action::move_to(pick->source);
  a.commit = pick->id;
  return a;
}

Action GreedyRevenue::decide(const OnlineView& view) {
  if (view.in_progress) return Action::idle();
  const Request* pick = best_by_revenue(view, true);
  return pick ? head_for(view, *pick) : Action::idle();
}

Action NearestStart::decide(const OnlineView& view) {
  if (view.in_progress) return Action::idle();
  const Request* best = nullptr;
  Time best_start = 0;
  for (const Request& r : view.visible) {
    if (!feasible_remaining(view, r)) continue;
    Time start = view.now + view.graph->weight(view.position, r.source);
    if (!best || start < best_start || (start == best_start && ranks_above(r, *best))) {
      best = &r;
      best_start = start;
    }
  }
  return best ? head_for(view, *best) : Action::idle();
}

Action Fickle::decide(const OnlineView& view) {
  if (view.in_progress) {
    if (!view.preemption) return Action::idle();
    const auto current = std::find_if(view.visible.begin(), view.visible.end(),
                                      [&](const Request& r) { return r.id == view.in_progress->id; });
    const Request* better = best_by_revenue(view, false);
    if (!better || current == view.visible.end() || better->revenue <= current->revenue) {
      return Action::idle();
    }
    if (better->source == view.position && feasible_remaining(view, *better)) {
      return Action::begin(better->id);
    }
    return Action::move_to(better->source);
  }
  const Request* pick = best_by_revenue(view, true);
  return pick ? head_for(view, *pick) : Action::idle();
}

std::unique_ptr<Strategy> make_strategy(const std::string& name) {
  if (name == "grf") return std::make_unique<GreatestRevenueFirst>();
  if (name == "greedy") return std::make_unique<GreedyRevenue>();
  if (name == "nearest") return std::make_unique<NearestStart>();
  if (name == "reject") return std::make_unique<AlwaysReject>();
  if (name == "fickle") return std::make_unique<Fickle>();
  throw Error(ErrorCode::ConfigError, "unknown strategy '" + name + "'");
}

std::vector<std::string> shipped_strategies(bool unit_graph) {
  if (unit_graph) return {"grf", "greedy", "nearest", "reject", "fickle"};
  return {"greedy", "nearest", "reject", "fickle"};
}

StrategyTrace run_grf(const Instance& inst) {
  if (!inst.graph.all_unit()) throw Error(ErrorCode::NotUnitGraph, "grf needs a unit graph");
  GreatestRevenueFirst grf;
  return simulate(inst, grf);
}

}  // namespace roldarp
