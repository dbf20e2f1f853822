#include "roldarp/adversary.hpp"

#include <algorithm>
#include <random>

namespace roldarp {

std::string_view to_string(AdversaryKind k) {
  switch (k) {
    case AdversaryKind::Noncompete: return "noncompete";
    case AdversaryKind::Preempt: return "preempt";
    case AdversaryKind::Additive: return "additive";
  }
  return "unknown";
}

AdversaryKind parse_adversary_kind(std::string_view s) {
  if (s == "noncompete") return AdversaryKind::Noncompete;
  if (s == "preempt") return AdversaryKind::Preempt;
  if (s == "additive") return AdversaryKind::Additive;
  throw Error(ErrorCode::ConfigError, "unknown adversary kind '" + std::string(s) + "'");
}

namespace {

using NodePair = std::pair<NodeId, NodeId>;

// Ordered pairs leaving the origin first, then all pairs lexicographically.
std::vector<NodePair> candidate_pairs(const Graph& g) {
  std::vector<NodePair> out;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (v != g.origin()) out.emplace_back(g.origin(), v);
  }
  for (NodeId u = 0; u < g.node_count(); ++u) {
    if (u == g.origin()) continue;
    for (NodeId v = 0; v < g.node_count(); ++v) {
      if (v != u) out.emplace_back(u, v);
    }
  }
  return out;
}

bool heavy_enough(const Graph& g, NodePair e, Time horizon) {
  if (!g.contains(e.first) || !g.contains(e.second) || e.first == e.second) return false;
  Weight w = g.weight(e.first, e.second);
  return 1 < w && w < horizon;
}

bool usable_second_edge(const Graph& g, NodePair e, NodePair f, Time horizon) {
  if (!g.contains(f.first) || !g.contains(f.second) || f.first == f.second) return false;
  auto touches = [&](NodeId n) { return n == e.first || n == e.second; };
  if (touches(f.first) || touches(f.second)) return false;
  Weight w_uv = g.weight(e.first, e.second);
  Weight w_xy = g.weight(f.first, f.second);
  return w_uv <= w_xy + 1 && g.weight(e.first, f.first) + w_xy <= horizon;
}

}  // namespace

AdversaryParams resolve_adversary(const Instance& inst, const AdversaryConfig& cfg) {
  const Graph& g = inst.graph;
  const Time horizon = inst.time_limit;
  if (cfg.b <= Revenue{0} || cfg.eps <= Revenue{0}) throw Error(ErrorCode::ConfigError, "b and eps must be positive");

  AdversaryParams p;
  p.kind = cfg.kind;
  p.first_revenue = cfg.b + cfg.eps;
  p.second_revenue = Revenue(2) * (cfg.b + cfg.eps);

  switch (cfg.kind) {
    case AdversaryKind::Noncompete: {
      std::optional<NodePair> pick;
      if (cfg.edge) {
        if (heavy_enough(g, *cfg.edge, horizon)) pick = cfg.edge;
      } else {
        for (const auto& e : candidate_pairs(g)) {
          if (heavy_enough(g, e, horizon)) {
            pick = e;
            break;
          }
        }
      }
      if (!pick) throw Error(ErrorCode::NoQualifyingEdge, "no edge with 1 < w < T");
      p.u = pick->first;
      p.v = pick->second;
      p.first_release = horizon - g.weight(p.u, p.v) - 1;
      break;
    }
    case AdversaryKind::Preempt: {
      if (!inst.preemption) throw Error(ErrorCode::ConfigError, "preempt adversary needs preemption");
      std::optional<std::pair<NodePair, NodePair>> pick;
      std::vector<NodePair> firsts = cfg.edge ? std::vector<NodePair>{*cfg.edge} : candidate_pairs(g);
      for (const auto& e : firsts) {
        if (!heavy_enough(g, e, horizon)) continue;
        std::vector<NodePair> seconds = cfg.edge2 ? std::vector<NodePair>{*cfg.edge2} : candidate_pairs(g);
        std::sort(seconds.begin(), seconds.end());
        for (const auto& f : seconds) {
          if (usable_second_edge(g, e, f, horizon)) {
            pick = std::make_pair(e, f);
            break;
          }
        }
        if (pick) break;
      }
      if (!pick) throw Error(ErrorCode::NoQualifyingEdgePair, "no disjoint edge pair fits the construction");
      p.u = pick->first.first;
      p.v = pick->first.second;
      p.x = pick->second.first;
      p.y = pick->second.second;
      p.first_release = horizon - g.weight(*p.x, *p.y) - 1;
      break;
    }
    case AdversaryKind::Additive: {
      if (!g.all_unit()) throw Error(ErrorCode::NotUnitGraph, "additive construction runs on unit graphs");
      NodePair e = cfg.edge.value_or(candidate_pairs(g).front());
      if (!g.contains(e.first) || !g.contains(e.second) || e.first == e.second) {
        throw Error(ErrorCode::ConfigError, "additive edge must join two distinct nodes");
      }
      p.u = e.first;
      p.v = e.second;
      p.first_release = horizon - 2;
      p.first_revenue = cfg.b1.value_or(cfg.b);
      p.second_revenue = cfg.b2.value_or(cfg.b + cfg.eps);
      break;
    }
  }
  return p;
}

TwoStepAdversary::TwoStepAdversary(const Instance& inst, AdversaryParams params) : params_(params) {
  RequestId next_id = 1;
  for (const Request& r : inst.requests) next_id = std::max(next_id, r.id + 1);
  first_ = Request{next_id, params_.u, params_.v, params_.first_release, params_.first_revenue, std::nullopt};
  second_ = Request{next_id + 1, params_.x.value_or(params_.u), params_.y.value_or(params_.v),
                    params_.first_release + 1, params_.second_revenue, std::nullopt};
}

std::vector<Request> TwoStepAdversary::emit(Time now) {
  if (now == first_.release) return {first_};
  if (triggered_ && now == second_.release) {
    second_emitted_ = true;
    return {second_};
  }
  return {};
}

void TwoStepAdversary::on_accept(const Request& r, Time now) {
  // Only an acceptance at r1's release time leaves room for r2.
  if (r.id == first_.id && now == first_.release) triggered_ = true;
}

Profile profile_preset(const std::string& name) {
  Profile p;
  if (name == "unit") return p;
  if (name == "saturated") {
    p.horizon = {3, 10};
    p.requests = {0, 12};
    p.saturated = true;
    return p;
  }
  if (name == "weighted") {
    p.nodes = {2, 5};
    p.horizon = {3, 10};
    p.requests = {0, 8};
    p.unit = false;
    return p;
  }
  throw Error(ErrorCode::ConfigError, "unknown profile '" + name + "'");
}

Instance gen_random(std::uint64_t seed, const Profile& profile) {
  std::mt19937_64 rng(seed);
  auto draw = [&](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  };
  auto infeasible = [](const std::string& why) { throw Error(ErrorCode::ProfileInfeasible, why); };

  if (profile.nodes.lo > profile.nodes.hi || profile.nodes.hi < 2) infeasible("node range admits no n >= 2");
  if (profile.denominators.empty()) infeasible("no revenue denominators");
  for (auto d : profile.denominators) {
    if (d <= 0) infeasible("revenue denominators must be positive");
  }
  if (profile.revenue.lo < 0 || profile.revenue.lo > profile.revenue.hi) infeasible("bad revenue range");
  if (!profile.unit && profile.max_weight < 2) infeasible("weighted profile needs max_weight >= 2");

  Time t_lo = std::max<std::int64_t>(profile.horizon.lo, 3);
  Time t_hi = profile.horizon.hi;
  if (profile.saturated) t_hi = std::min<std::int64_t>(t_hi, profile.requests.hi + 1);
  if (t_lo > t_hi) infeasible("no horizon T > 2 fits the profile");

  const int n = static_cast<int>(draw(std::max<std::int64_t>(profile.nodes.lo, 2), profile.nodes.hi));
  const Time horizon = draw(t_lo, t_hi);
  std::int64_t m_lo = std::max<std::int64_t>(profile.requests.lo, profile.saturated ? horizon - 1 : 0);
  if (m_lo > profile.requests.hi) infeasible("request range too small");
  const auto m = static_cast<std::size_t>(draw(m_lo, profile.requests.hi));
  const NodeId origin = static_cast<NodeId>(draw(0, n - 1));

  Instance inst;
  inst.time_limit = horizon;
  if (profile.unit) {
    inst.graph = Graph::unit_complete(n, origin);
  } else {
    const Weight w_hi = std::min<Weight>(profile.max_weight, horizon);
    if (w_hi < 2) infeasible("weights cannot vary below T");
    bool done = false;
    for (int attempt = 0; attempt < 64 && !done; ++attempt) {
      std::vector<Edge> edges;
      for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) edges.push_back({u, v, draw(1, w_hi)});
      }
      Graph closed = metric_closure(Graph::from_edges(n, origin, edges, false));
      if (closed.is_varying() && !closed.all_unit()) {
        inst.graph = Graph::from_edges(n, origin, closed.edges(), false);
        done = true;
      }
    }
    if (!done) infeasible("could not draw a varying weighted graph");
  }

  for (std::size_t i = 0; i < m; ++i) {
    Request r;
    if (profile.saturated) {
      r.release = static_cast<Time>(i) < horizon - 1 ? static_cast<Time>(i) : draw(0, horizon - 2);
    } else {
      r.release = draw(0, horizon - 1);
    }
    r.source = static_cast<NodeId>(draw(0, n - 1));
    r.destination = static_cast<NodeId>(draw(0, n - 2));
    if (r.destination >= r.source) ++r.destination;
    std::int64_t den = profile.denominators[static_cast<std::size_t>(
        draw(0, static_cast<std::int64_t>(profile.denominators.size()) - 1))];
    r.revenue = Revenue(draw(profile.revenue.lo * den, profile.revenue.hi * den), den);
    inst.requests.push_back(r);
  }
  std::stable_sort(inst.requests.begin(), inst.requests.end(),
                   [](const Request& a, const Request& b) { return a.release < b.release; });
  for (std::size_t i = 0; i < inst.requests.size(); ++i) inst.requests[i].id = static_cast<RequestId>(i + 1);
  return inst;
}

}  // namespace roldarp
