#include "roldarp/offline.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>

namespace roldarp {

namespace {

constexpr std::size_t kHardRequestLimit = 64;

struct StateKey {
  std::uint64_t served;
  NodeId position;

  bool operator==(const StateKey&) const = default;
};

struct StateKeyHash {
  std::size_t operator()(const StateKey& k) const noexcept {
    std::uint64_t h = k.served * 0x9E3779B97F4A7C15ULL;
    h ^= static_cast<std::uint64_t>(k.position) + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

class Search {
 public:
  enum class Mode { Optimize, Decide };

  Search(const Instance& inst, Mode mode, Revenue goal) : inst_(inst), mode_(mode), goal_(goal) {
    const auto& reqs = inst.requests;
    conflicts_.assign(reqs.size(), 0);
    for (std::size_t i = 0; i < reqs.size(); ++i) {
      conflicts_[i] |= bit(i);
      for (std::size_t j = 0; j < reqs.size(); ++j) {
        if (reqs[i].group && reqs[i].group == reqs[j].group) conflicts_[i] |= bit(j);
      }
      service_.push_back(inst.graph.weight(reqs[i].source, reqs[i].destination));
    }
  }

  void run() {
    path_.clear();
    explore(inst_.graph.origin(), 0, 0, Revenue{0});
  }

  bool found_goal() const { return found_goal_; }
  const std::vector<ScheduleEntry>& best_path() const { return best_path_; }
  Revenue best_value() const { return best_value_; }
  const SearchStats& stats() const { return stats_; }

 private:
  static std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

  // Earliest start of request i from (position, clock), if it can finish by T.
  std::optional<Time> earliest_start(std::size_t i, NodeId position, Time clock) const {
    const Request& r = inst_.requests[i];
    Time start = std::max(clock + inst_.graph.weight(position, r.source), r.release);
    if (start + service_[i] > inst_.time_limit) return std::nullopt;
    return start;
  }

  // Admissible bound on revenue still obtainable: the top-k individually
  // feasible requests (one per group), k limited by the remaining time over
  // the shortest service among them.
  Revenue optimistic_extra(NodeId position, Time clock, std::uint64_t served) const {
    std::map<std::int64_t, Revenue> per_key;
    Weight min_service = 0;
    for (std::size_t i = 0; i < inst_.requests.size(); ++i) {
      if (served & conflicts_[i]) continue;
      if (!earliest_start(i, position, clock)) continue;
      const Request& r = inst_.requests[i];
      std::int64_t key = r.group ? *r.group : -1 - static_cast<std::int64_t>(i);
      auto [it, inserted] = per_key.emplace(key, r.revenue);
      if (!inserted) it->second = std::max(it->second, r.revenue);
      min_service = min_service == 0 ? service_[i] : std::min(min_service, service_[i]);
    }
    if (per_key.empty()) return Revenue{0};
    std::vector<Revenue> values;
    for (const auto& [key, value] : per_key) values.push_back(value);
    std::sort(values.begin(), values.end(), std::greater<>());
    auto k = static_cast<std::size_t>((inst_.time_limit - clock) / min_service);
    Revenue sum{0};
    for (std::size_t i = 0; i < std::min(k, values.size()); ++i) sum += values[i];
    return sum;
  }

  void explore(NodeId position, Time clock, std::uint64_t served, Revenue revenue) {
    ++stats_.expanded;
    if (revenue > best_value_) {
      best_value_ = revenue;
      best_path_ = path_;
    }
    if (mode_ == Mode::Decide && revenue >= goal_) {
      found_goal_ = true;
      best_path_ = path_;
      return;
    }

    Revenue bound = revenue + optimistic_extra(position, clock, served);
    if (mode_ == Mode::Decide ? bound < goal_ : bound <= best_value_) {
      ++stats_.pruned;
      return;
    }

    for (std::size_t i = 0; i < inst_.requests.size(); ++i) {
      if (served & conflicts_[i]) continue;
      auto start = earliest_start(i, position, clock);
      if (!start) continue;
      const Request& r = inst_.requests[i];
      Time finish = *start + service_[i];
      std::uint64_t next = served | bit(i);

      auto [it, inserted] = reached_.try_emplace(StateKey{next, r.destination}, finish);
      if (!inserted) {
        if (it->second <= finish) {
          ++stats_.pruned;
          continue;
        }
        it->second = finish;
      }

      path_.push_back({r.id, *start});
      explore(r.destination, finish, next, revenue + r.revenue);
      path_.pop_back();
      if (found_goal_) return;
    }
  }

  const Instance& inst_;
  Mode mode_;
  Revenue goal_;
  std::vector<std::uint64_t> conflicts_;
  std::vector<Weight> service_;
  std::unordered_map<StateKey, Time, StateKeyHash> reached_;
  std::vector<ScheduleEntry> path_;
  std::vector<ScheduleEntry> best_path_;
  Revenue best_value_{0};
  bool found_goal_ = false;
  SearchStats stats_;
};

void check_solvable(const Instance& inst, const SolveOptions& options) {
  require_valid(inst);
  std::size_t cap = std::min(options.max_requests, kHardRequestLimit);
  if (inst.requests.size() > cap) {
    throw Error(ErrorCode::TooManyRequests, std::to_string(inst.requests.size()) +
                                                " requests exceed the cap of " + std::to_string(cap));
  }
}

}  // namespace

OptResult solve_opt(const Instance& inst, const SolveOptions& options) {
  check_solvable(inst, options);
  Search search(inst, Search::Mode::Optimize, Revenue{0});
  search.run();
  OptResult out;
  out.schedule = Schedule{"opt", search.best_path(), true};
  out.value = search.best_value();
  out.stats = search.stats();
  return out;
}

DecisionResult solve_decision(const Instance& inst, const SolveOptions& options) {
  check_solvable(inst, options);
  Revenue goal = inst.goal.value_or(Revenue{0});
  DecisionResult out;
  if (goal <= Revenue{0}) {
    out.yes = true;
    out.witness = Schedule{"opt", {}, true};
    return out;
  }
  Search search(inst, Search::Mode::Decide, goal);
  search.run();
  out.stats = search.stats();
  if (search.found_goal()) {
    out.yes = true;
    out.witness = Schedule{"opt", search.best_path(), true};
  }
  return out;
}

MaxResult run_max(const Instance& inst) {
  if (!inst.graph.all_unit()) throw Error(ErrorCode::NotUnitGraph, "MAX is defined on unit graphs only");
  MaxResult out;
  out.schedule.algorithm = "max";
  out.schedule.feasible = false;
  std::vector<bool> taken(inst.requests.size(), false);
  for (Time t = 0; t + 2 <= inst.time_limit; ++t) {
    std::optional<std::size_t> pick;
    for (std::size_t i = 0; i < inst.requests.size(); ++i) {
      const Request& r = inst.requests[i];
      if (taken[i] || r.release > t) continue;
      if (!pick) {
        pick = i;
        continue;
      }
      const Request& p = inst.requests[*pick];
      if (r.revenue > p.revenue || (r.revenue == p.revenue && r.id < p.id)) pick = i;
    }
    if (pick) {
      taken[*pick] = true;
      const Request& r = inst.requests[*pick];
      out.trace.push_back(r.revenue);
      out.value += r.revenue;
      out.schedule.entries.push_back({r.id, t});
    } else {
      out.trace.push_back(Revenue{0});
    }
  }
  return out;
}

Revenue last_revenue(const Instance& inst, const Schedule& sched) {
  if (sched.entries.empty()) return Revenue{0};
  return inst.request(sched.entries.back().id).revenue;
}

}  // namespace roldarp
