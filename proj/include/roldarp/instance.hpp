#pragma once

#include <optional>
#include <string>
#include <vector>

#include "roldarp/graph.hpp"
#include "roldarp/types.hpp"

namespace roldarp {

struct Request {
  RequestId id = 0;
  NodeId source = 0;
  NodeId destination = 0;
  Time release = 0;
  Revenue revenue{0};
  // Requests sharing a group are alternatives of one logical request: at most
  // one of them may be served.
  std::optional<int> group;

  bool operator==(const Request&) const = default;
};

struct Instance {
  Graph graph;
  Time time_limit = 0;
  std::vector<Request> requests;
  bool preemption = false;
  std::optional<Revenue> goal;

  // Index into `requests`, or nullopt.
  std::optional<std::size_t> index_of(RequestId id) const;
  const Request& request(RequestId id) const;

  bool operator==(const Instance&) const = default;
};

// Sorts requests by (release, id).
void canonicalize(Instance& inst);

struct Violation {
  ErrorCode code;
  std::string detail;
};

// Checks every model invariant after dropping edges heavier than T. Returns
// all violations found; empty means valid.
std::vector<Violation> validate_instance(const Instance& inst);

// Throws an Error carrying the first violation (all of them in the message).
void require_valid(const Instance& inst);

}  // namespace roldarp
