#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "roldarp/schedule.hpp"

namespace roldarp {

struct InProgress {
  RequestId id = 0;
  Time started = 0;
  Time completes = 0;
};

// What a strategy may look at when deciding at time `now`. `visible` holds
// released requests this server has not completed; nothing released after
// `now` is ever exposed. While a preemptible serve is running, `position` is
// where the server would stand if it quit now.
struct OnlineView {
  Time now = 0;
  Time time_limit = 0;
  NodeId position = 0;
  const Graph* graph = nullptr;
  bool preemption = false;
  std::vector<Request> visible;
  std::optional<InProgress> in_progress;
  // Request the strategy committed to and has not yet started.
  std::optional<RequestId> committed;
};

struct Idle {};
struct MoveTo {
  NodeId node = 0;
};
struct BeginServe {
  RequestId id = 0;
};

// Idle and a move to the current node both take one time unit. A non-empty
// `commit` locks the strategy to that request: its next BeginServe must be
// the committed one. Committing counts as accepting the request.
struct Action {
  std::variant<Idle, MoveTo, BeginServe> kind;
  std::optional<RequestId> commit;

  static Action idle() { return {Idle{}, std::nullopt}; }
  static Action move_to(NodeId node) { return {MoveTo{node}, std::nullopt}; }
  static Action begin(RequestId id) { return {BeginServe{id}, std::nullopt}; }
};

std::string describe(const Action& a);

class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual std::string name() const = 0;
  virtual Action decide(const OnlineView& view) = 0;
  virtual void notify_release(const Request&) {}
  virtual void notify_complete(const Request&) {}
};

// Adaptive request source. The engine asks it for new requests at the start
// of every time unit and tells it whenever the strategy accepts a request
// (begins serving it or commits to it).
class RequestSource {
 public:
  virtual ~RequestSource() = default;
  // Requests emitted at `now`; each must have release == now.
  virtual std::vector<Request> emit(Time now) = 0;
  virtual void on_accept(const Request& r, Time now) = 0;
};

struct TraceStep {
  Time time = 0;
  NodeId position = 0;
  std::string action;
  Revenue revenue{0};
};

struct StrategyTrace {
  std::string strategy;
  // One step per time unit 0..T-1. Revenue lands in the unit in which a
  // serve completes.
  std::vector<TraceStep> steps;
  Revenue total{0};
  // Completed serves with their start times.
  Schedule schedule;
  // Static requests plus everything an adaptive source emitted, in release
  // order.
  std::vector<Request> realized;
  std::size_t abandoned = 0;

  std::vector<Revenue> revenue_by_time() const;
};

// True iff travelling to req's source and serving it fits before T.
bool feasible_remaining(const OnlineView& view, const Request& req);

// Discrete-time simulation of one strategy against the instance's requests
// and an optional adaptive source. Throws IllegalAction with the offending
// time when the strategy breaks a precondition.
StrategyTrace simulate(const Instance& inst, Strategy& strategy, RequestSource* source = nullptr);

// Instance whose requests are the realized sequence of a trace.
Instance realized_instance(const Instance& base, const StrategyTrace& trace);

// JSON lines, one record per time unit.
std::string trace_to_jsonl(const StrategyTrace& trace);

}  // namespace roldarp
