#include "roldarp/schedule.hpp"

#include <set>

namespace roldarp {

std::string_view to_string(CertificateCheck c) {
  switch (c) {
    case CertificateCheck::Accepted: return "accept";
    case CertificateCheck::ReleaseTime: return "condition-1 (start before release)";
    case CertificateCheck::OriginTravel: return "condition-1 (origin travel)";
    case CertificateCheck::Sequencing: return "condition-1 (sequencing)";
    case CertificateCheck::Deadline: return "condition-2 (deadline)";
    case CertificateCheck::GoalRevenue: return "condition-3 (goal revenue)";
    case CertificateCheck::GroupConflict: return "alternative already served";
  }
  return "unknown";
}

Verdict verify_certificate(const Instance& inst, const Schedule& sched) {
  std::set<RequestId> ids;
  for (const auto& e : sched.entries) {
    if (!inst.index_of(e.id)) {
      throw Error(ErrorCode::UnknownRequestId, "schedule entry for request " + std::to_string(e.id));
    }
    if (!ids.insert(e.id).second) {
      throw Error(ErrorCode::DuplicateEntry, "request " + std::to_string(e.id) + " scheduled twice");
    }
  }

  const Graph& g = inst.graph;
  auto reject = [](CertificateCheck c, std::size_t i, std::string detail) {
    return Verdict{c, std::move(detail), i};
  };

  std::set<int> groups;
  Revenue total{0};
  for (std::size_t i = 0; i < sched.entries.size(); ++i) {
    const auto& e = sched.entries[i];
    const Request& r = inst.request(e.id);
    const std::string tag = "entry " + std::to_string(i) + " (request " + std::to_string(r.id) + ")";
    if (r.group && !groups.insert(*r.group).second) {
      return reject(CertificateCheck::GroupConflict, i, tag);
    }
    if (e.start < r.release) {
      return reject(CertificateCheck::ReleaseTime, i,
                    tag + " starts at " + std::to_string(e.start) + " < release " + std::to_string(r.release));
    }
    if (i == 0) {
      Weight travel = g.weight(g.origin(), r.source);
      if (e.start < travel) {
        return reject(CertificateCheck::OriginTravel, i,
                      tag + " starts at " + std::to_string(e.start) + " < origin travel " + std::to_string(travel));
      }
    } else {
      const auto& prev_entry = sched.entries[i - 1];
      const Request& prev = inst.request(prev_entry.id);
      Time earliest = prev_entry.start + g.weight(prev.source, prev.destination) +
                      g.weight(prev.destination, r.source);
      if (e.start < earliest) {
        return reject(CertificateCheck::Sequencing, i,
                      tag + " starts at " + std::to_string(e.start) + " < " + std::to_string(earliest));
      }
    }
    total += r.revenue;
  }

  if (!sched.entries.empty()) {
    const auto& last = sched.entries.back();
    const Request& r = inst.request(last.id);
    Time finish = last.start + g.weight(r.source, r.destination);
    if (finish > inst.time_limit) {
      return reject(CertificateCheck::Deadline, sched.entries.size() - 1,
                    "last request finishes at " + std::to_string(finish) + " > T = " +
                        std::to_string(inst.time_limit));
    }
  }

  Revenue goal = inst.goal.value_or(Revenue{0});
  if (total < goal) {
    return Verdict{CertificateCheck::GoalRevenue,
                   "revenue " + format_revenue(total) + " < goal " + format_revenue(goal), std::nullopt};
  }
  return Verdict{};
}

Replay replay(const Instance& inst, const Schedule& sched) {
  Instance feasibility = inst;
  feasibility.goal.reset();
  Verdict v = verify_certificate(feasibility, sched);
  if (!v.accepted()) {
    throw Error(ErrorCode::InfeasibleSchedule, std::string(to_string(v.check)) + ": " + v.detail);
  }
  Replay out;
  for (const auto& e : sched.entries) {
    const Request& r = inst.request(e.id);
    out.total += r.revenue;
    out.finish_times.push_back(e.start + inst.graph.weight(r.source, r.destination));
  }
  return out;
}

Revenue schedule_revenue(const Instance& inst, const Schedule& sched) {
  Revenue total{0};
  for (const auto& e : sched.entries) total += inst.request(e.id).revenue;
  return total;
}

}  // namespace roldarp
