#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "roldarp/online.hpp"

namespace roldarp {

enum class AdversaryKind { Noncompete, Preempt, Additive };

std::string_view to_string(AdversaryKind k);
AdversaryKind parse_adversary_kind(std::string_view s);

// As read from an adversary config file. For the additive construction the
// two revenues default to b1 = b and b2 = b + eps.
struct AdversaryConfig {
  AdversaryKind kind = AdversaryKind::Noncompete;
  Revenue b{1};
  Revenue eps{1};
  std::optional<std::pair<NodeId, NodeId>> edge;
  std::optional<std::pair<NodeId, NodeId>> edge2;
  std::optional<Revenue> b1;
  std::optional<Revenue> b2;
};

// Resolved construction: r1 = (u, v, first_release, first_revenue) and, once
// r1 is accepted exactly at its release, r2 = (second_source,
// second_destination, first_release + 1, second_revenue).
struct AdversaryParams {
  AdversaryKind kind = AdversaryKind::Noncompete;
  NodeId u = 0;
  NodeId v = 0;
  std::optional<NodeId> x;
  std::optional<NodeId> y;
  Time first_release = 0;
  Revenue first_revenue{0};
  Revenue second_revenue{0};
};

// Picks edges and revenues for the construction on inst's graph and horizon.
// Candidate edges leaving the origin are preferred, then the
// lexicographically smallest ordered pair.
//   noncompete: 1 < w(u,v) < T.
//   preempt: additionally (x,y) disjoint from {u,v} with
//            w(u,v) <= w(x,y) + 1 and w(u,x) + w(x,y) <= T.
//   additive: unit graph, w(u,v) = 1.
// Throws NoQualifyingEdge / NoQualifyingEdgePair / NotUnitGraph.
AdversaryParams resolve_adversary(const Instance& inst, const AdversaryConfig& cfg);

class TwoStepAdversary final : public RequestSource {
 public:
  TwoStepAdversary(const Instance& inst, AdversaryParams params);

  std::vector<Request> emit(Time now) override;
  void on_accept(const Request& r, Time now) override;

  const AdversaryParams& params() const { return params_; }
  const Request& first() const { return first_; }
  const Request& second() const { return second_; }
  bool second_emitted() const { return second_emitted_; }

 private:
  AdversaryParams params_;
  Request first_;
  Request second_;
  bool triggered_ = false;
  bool second_emitted_ = false;
};

struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

struct Profile {
  IntRange nodes{2, 6};
  IntRange horizon{3, 12};
  IntRange requests{0, 10};
  IntRange revenue{1, 10};
  // Revenues are k/d with d drawn from here.
  std::vector<std::int64_t> denominators{1, 2, 3};
  bool saturated = false;
  bool unit = true;
  Weight max_weight = 4;
};

// Named presets: "unit", "saturated", "weighted".
Profile profile_preset(const std::string& name);

// Deterministic in (seed, profile). Saturated profiles release at least one
// request at every time 0..T-2. Throws ProfileInfeasible.
Instance gen_random(std::uint64_t seed, const Profile& profile);

}  // namespace roldarp
