#pragma once

#include <string>
#include <vector>

#include "roldarp/instance.hpp"

namespace roldarp {

struct ScheduleEntry {
  RequestId id = 0;
  Time start = 0;

  bool operator==(const ScheduleEntry&) const = default;
};

struct Schedule {
  std::string algorithm;
  std::vector<ScheduleEntry> entries;
  // Only MAX pseudo-schedules may be infeasible.
  bool feasible = true;

  bool operator==(const Schedule&) const = default;
};

enum class CertificateCheck {
  Accepted,
  ReleaseTime,     // some q_i < t_i
  OriginTravel,    // q_1 < w(o, s_1)
  Sequencing,      // q_j < q_i + w(s_i, d_i) + w(d_i, s_j)
  Deadline,        // q_m + w(s_m, d_m) > T
  GoalRevenue,     // sum of revenues < R
  GroupConflict,   // two alternatives of one logical request served
};

std::string_view to_string(CertificateCheck c);

struct Verdict {
  CertificateCheck check = CertificateCheck::Accepted;
  std::string detail;
  // Index of the entry that failed, when applicable.
  std::optional<std::size_t> entry;

  bool accepted() const { return check == CertificateCheck::Accepted; }
};

// Checks the decision-problem certificate. The server starts at the origin,
// so the first start must also cover travel from the origin. The goal revenue
// is inst.goal (0 if absent). Throws UnknownRequestId / DuplicateEntry.
Verdict verify_certificate(const Instance& inst, const Schedule& sched);

struct Replay {
  Revenue total{0};
  std::vector<Time> finish_times;
};

// Throws InfeasibleSchedule if the certificate (with R = 0) rejects.
Replay replay(const Instance& inst, const Schedule& sched);

Revenue schedule_revenue(const Instance& inst, const Schedule& sched);

}  // namespace roldarp
