#include "roldarp/online.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

namespace roldarp {

namespace {

[[noreturn]] void illegal(Time now, const std::string& what) {
  throw Error(ErrorCode::IllegalAction, "t=" + std::to_string(now) + ": " + what);
}

enum class Activity { None, Waiting, Moving, Serving };

class Engine {
 public:
  Engine(const Instance& inst, Strategy& strategy, RequestSource* source)
      : inst_(inst), strategy_(strategy), source_(source), position_(inst.graph.origin()) {
    trace_.strategy = strategy.name();
    trace_.schedule.algorithm = strategy.name();
    for (const Request& r : inst.requests) known_ids_.insert(r.id);
  }

  StrategyTrace run() {
    const Time horizon = inst_.time_limit;
    trace_.steps.resize(static_cast<std::size_t>(std::max<Time>(horizon, 0)));
    for (Time now = 0; now <= horizon; ++now) {
      finish_activity(now);
      if (now == horizon) break;
      release(now);
      auto& step = trace_.steps[static_cast<std::size_t>(now)];
      step.time = now;
      step.position = activity_ == Activity::Serving ? abandon_position(now) : position_;
      step.action = decide(now);
    }
    std::sort(trace_.realized.begin(), trace_.realized.end(), [](const Request& a, const Request& b) {
      return a.release != b.release ? a.release < b.release : a.id < b.id;
    });
    return std::move(trace_);
  }

 private:
  void finish_activity(Time now) {
    if (activity_ == Activity::None || busy_until_ != now) return;
    if (activity_ == Activity::Moving) {
      position_ = target_;
    } else if (activity_ == Activity::Serving) {
      const Request done = visible_request(serving_.id);
      position_ = done.destination;
      trace_.steps[static_cast<std::size_t>(now - 1)].revenue += done.revenue;
      trace_.total += done.revenue;
      trace_.schedule.entries.push_back({done.id, serving_.started});
      std::erase_if(visible_, [&](const Request& r) { return r.id == done.id; });
      strategy_.notify_complete(done);
    }
    activity_ = Activity::None;
  }

  void release(Time now) {
    std::vector<Request> fresh;
    for (const Request& r : inst_.requests) {
      if (r.release == now) fresh.push_back(r);
    }
    if (source_) {
      for (Request& r : source_->emit(now)) {
        if (r.release != now) {
          throw Error(ErrorCode::ConfigError, "adaptive request " + std::to_string(r.id) +
                                                  " emitted at " + std::to_string(now) +
                                                  " with release " + std::to_string(r.release));
        }
        if (!known_ids_.insert(r.id).second) {
          throw Error(ErrorCode::DuplicateRequestId, "adaptive request " + std::to_string(r.id));
        }
        if (!inst_.graph.contains(r.source) || !inst_.graph.contains(r.destination) ||
            r.source == r.destination) {
          throw Error(ErrorCode::InvalidNode, "adaptive request " + std::to_string(r.id));
        }
        fresh.push_back(std::move(r));
      }
    }
    for (const Request& r : fresh) {
      trace_.realized.push_back(r);
      visible_.push_back(r);
      strategy_.notify_release(r);
    }
  }

  OnlineView view(Time now) const {
    OnlineView v;
    v.now = now;
    v.time_limit = inst_.time_limit;
    v.graph = &inst_.graph;
    v.preemption = inst_.preemption;
    v.visible = visible_;
    v.committed = committed_;
    if (activity_ == Activity::Serving) {
      v.in_progress = serving_;
      v.position = abandon_position(now);
    } else {
      v.position = position_;
    }
    return v;
  }

  // Where the server stands if it quits the running serve at `now`: the
  // source while less than half the service time has elapsed, else the
  // destination.
  NodeId abandon_position(Time now) const {
    const Request& r = visible_request(serving_.id);
    Time elapsed = now - serving_.started;
    Time length = serving_.completes - serving_.started;
    return 2 * elapsed < length ? r.source : r.destination;
  }

  std::string decide(Time now) {
    if (activity_ == Activity::Serving) {
      if (!inst_.preemption) return "serving " + std::to_string(serving_.id);
      Action a = strategy_.decide(view(now));
      if (std::holds_alternative<Idle>(a.kind) && !a.commit) {
        return "serving " + std::to_string(serving_.id);
      }
      position_ = abandon_position(now);
      activity_ = Activity::None;
      ++trace_.abandoned;
      return "abandon " + std::to_string(serving_.id) + "; " + apply(now, a);
    }
    if (activity_ != Activity::None) return "moving";
    return apply(now, strategy_.decide(view(now)));
  }

  std::string apply(Time now, const Action& a) {
    if (a.commit) {
      if (committed_ && *committed_ != *a.commit) {
        illegal(now, "commit to " + std::to_string(*a.commit) + " while committed to " +
                         std::to_string(*committed_));
      }
      if (!is_visible(*a.commit)) illegal(now, "commit to request " + std::to_string(*a.commit) + " not visible");
      if (!committed_) {
        committed_ = a.commit;
        if (source_) source_->on_accept(visible_request(*a.commit), now);
      }
    }

    if (std::holds_alternative<Idle>(a.kind)) {
      activity_ = Activity::Waiting;
      busy_until_ = now + 1;
    } else if (const auto* move = std::get_if<MoveTo>(&a.kind)) {
      if (!inst_.graph.contains(move->node)) illegal(now, "move to missing node " + std::to_string(move->node));
      if (move->node == position_) {
        activity_ = Activity::Waiting;
        busy_until_ = now + 1;
      } else {
        activity_ = Activity::Moving;
        target_ = move->node;
        busy_until_ = now + inst_.graph.weight(position_, move->node);
      }
    } else {
      RequestId id = std::get<BeginServe>(a.kind).id;
      if (!is_visible(id)) illegal(now, "serve of request " + std::to_string(id) + " that is not visible");
      const Request& r = visible_request(id);
      if (committed_ && *committed_ != id) {
        illegal(now, "serve of " + std::to_string(id) + " while committed to " + std::to_string(*committed_));
      }
      if (r.source != position_) {
        illegal(now, "serve of " + std::to_string(id) + " away from its source");
      }
      Time completes = now + inst_.graph.weight(r.source, r.destination);
      if (completes > inst_.time_limit) {
        illegal(now, "serve of " + std::to_string(id) + " would finish after T");
      }
      committed_.reset();
      activity_ = Activity::Serving;
      serving_ = InProgress{id, now, completes};
      busy_until_ = completes;
      if (source_) source_->on_accept(r, now);
    }
    return describe(a);
  }

  bool is_visible(RequestId id) const {
    return std::any_of(visible_.begin(), visible_.end(), [&](const Request& r) { return r.id == id; });
  }

  const Request& visible_request(RequestId id) const {
    return *std::find_if(visible_.begin(), visible_.end(), [&](const Request& r) { return r.id == id; });
  }

  const Instance& inst_;
  Strategy& strategy_;
  RequestSource* source_;
  std::set<RequestId> known_ids_;

  NodeId position_;
  Activity activity_ = Activity::None;
  Time busy_until_ = 0;
  NodeId target_ = 0;
  InProgress serving_;
  std::optional<RequestId> committed_;
  std::vector<Request> visible_;
  StrategyTrace trace_;
};

}  // namespace

std::string describe(const Action& a) {
  std::string out;
  if (std::holds_alternative<Idle>(a.kind)) {
    out = "idle";
  } else if (const auto* m = std::get_if<MoveTo>(&a.kind)) {
    out = "move " + std::to_string(m->node);
  } else {
    out = "serve " + std::to_string(std::get<BeginServe>(a.kind).id);
  }
  if (a.commit) out += " (commit " + std::to_string(*a.commit) + ")";
  return out;
}

std::vector<Revenue> StrategyTrace::revenue_by_time() const {
  std::vector<Revenue> out;
  out.reserve(steps.size());
  for (const auto& s : steps) out.push_back(s.revenue);
  return out;
}

bool feasible_remaining(const OnlineView& view, const Request& req) {
  Time arrive = view.now + view.graph->weight(view.position, req.source);
  return arrive + view.graph->weight(req.source, req.destination) <= view.time_limit;
}

StrategyTrace simulate(const Instance& inst, Strategy& strategy, RequestSource* source) {
  require_valid(inst);
  return Engine(inst, strategy, source).run();
}

Instance realized_instance(const Instance& base, const StrategyTrace& trace) {
  Instance out = base;
  out.requests = trace.realized;
  out.goal.reset();
  canonicalize(out);
  return out;
}

std::string trace_to_jsonl(const StrategyTrace& trace) {
  std::string out;
  for (const auto& s : trace.steps) {
    nlohmann::ordered_json line;
    line["t"] = s.time;
    line["position"] = s.position;
    line["action"] = s.action;
    line["revenue"] = format_revenue(s.revenue);
    out += line.dump();
    out += '\n';
  }
  return out;
}

}  // namespace roldarp
