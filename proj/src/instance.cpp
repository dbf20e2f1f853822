#include "roldarp/instance.hpp"

#include <algorithm>
#include <set>

namespace roldarp {

std::optional<std::size_t> Instance::index_of(RequestId id) const {
  for (std::size_t i = 0; i < requests.size(); ++i) {
    if (requests[i].id == id) return i;
  }
  return std::nullopt;
}

const Request& Instance::request(RequestId id) const {
  auto idx = index_of(id);
  if (!idx) throw Error(ErrorCode::UnknownRequestId, "request " + std::to_string(id));
  return requests[*idx];
}

void canonicalize(Instance& inst) {
  std::stable_sort(inst.requests.begin(), inst.requests.end(), [](const Request& a, const Request& b) {
    return a.release != b.release ? a.release < b.release : a.id < b.id;
  });
}

std::vector<Violation> validate_instance(const Instance& inst) {
  std::vector<Violation> out;
  const Graph& g = inst.graph;
  auto report = [&](ErrorCode code, std::string detail) { out.push_back({code, std::move(detail)}); };

  if (g.node_count() < 2) {
    report(ErrorCode::TooFewNodes, "graph has " + std::to_string(g.node_count()) + " nodes");
  }
  if (!g.contains(g.origin())) {
    report(ErrorCode::InvalidNode, "origin " + std::to_string(g.origin()) + " is not a node");
  }
  if (inst.time_limit <= 2) {
    report(ErrorCode::TimeLimitTooSmall, "T = " + std::to_string(inst.time_limit));
  }

  if (g.node_count() >= 2) {
    Graph usable = g.without_edges_above(inst.time_limit);
    if (!usable.is_complete()) {
      std::size_t missing = 0;
      for (NodeId u = 0; u < g.node_count(); ++u) {
        for (NodeId v = u + 1; v < g.node_count(); ++v) missing += usable.has_edge(u, v) ? 0 : 1;
      }
      report(ErrorCode::IncompleteGraph,
             std::to_string(missing) + " node pair(s) without an edge of weight <= T");
    }
    if (g.unit_flag() != g.all_unit()) {
      report(ErrorCode::UnitFlagMismatch, g.unit_flag() ? "unit flag set but some weight != 1"
                                                        : "unit flag clear but all weights are 1");
    } else if (!g.unit_flag() && !g.is_varying()) {
      report(ErrorCode::NotVarying, "weighted graph needs two pairs with different weights");
    }
  }

  std::set<RequestId> seen;
  for (const Request& r : inst.requests) {
    const std::string tag = "request " + std::to_string(r.id);
    if (!seen.insert(r.id).second) report(ErrorCode::DuplicateRequestId, tag);
    if (!g.contains(r.source) || !g.contains(r.destination)) {
      report(ErrorCode::InvalidNode, tag + " references a missing node");
    } else if (r.source == r.destination) {
      report(ErrorCode::SelfRide, tag + " has source == destination");
    }
    if (r.release < 0) report(ErrorCode::NegativeRelease, tag);
    if (r.revenue < Revenue{0}) report(ErrorCode::NegativeRevenue, tag);
  }
  if (inst.goal && *inst.goal < Revenue{0}) report(ErrorCode::NegativeRevenue, "goal revenue");
  return out;
}

void require_valid(const Instance& inst) {
  auto violations = validate_instance(inst);
  if (violations.empty()) return;
  std::string msg;
  for (const auto& v : violations) {
    if (!msg.empty()) msg += "; ";
    msg += std::string(to_string(v.code)) + " (" + v.detail + ")";
  }
  throw Error(violations.front().code, msg);
}

}  // namespace roldarp
