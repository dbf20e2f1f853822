#include <doctest.h>

#include <set>

#include "roldarp/harness.hpp"

using namespace roldarp;

namespace {

struct Outcome {
  StrategyTrace trace;
  OptResult opt;
  bool second_released = false;
};

Outcome play(const Instance& base, const AdversaryConfig& cfg, const std::string& strategy) {
  TwoStepAdversary adv(base, resolve_adversary(base, cfg));
  auto s = make_strategy(strategy);
  Outcome out;
  out.trace = simulate(base, *s, &adv);
  out.opt = solve_opt(realized_instance(base, out.trace));
  out.second_released = adv.second_emitted();
  return out;
}

AdversaryConfig config(AdversaryKind kind, int b, int eps) {
  AdversaryConfig cfg;
  cfg.kind = kind;
  cfg.b = Revenue(b);
  cfg.eps = Revenue(eps);
  return cfg;
}

}  // namespace

TEST_CASE("kind names round trip") {
  for (auto k : {AdversaryKind::Noncompete, AdversaryKind::Preempt, AdversaryKind::Additive}) {
    CHECK(parse_adversary_kind(to_string(k)) == k);
  }
  CHECK_THROWS_AS(parse_adversary_kind("greedy"), Error);
}

TEST_CASE("two requests on the heavy edge") {
  Instance base = default_duel_instance(AdversaryKind::Noncompete, 10);
  AdversaryConfig cfg = config(AdversaryKind::Noncompete, 2, 1);
  AdversaryParams p = resolve_adversary(base, cfg);
  CHECK(p.u == 0);
  CHECK(p.v == 1);
  CHECK(p.first_release == 6);
  CHECK(p.first_revenue == Revenue(3));
  CHECK(p.second_revenue == Revenue(6));

  SUBCASE("rejecting r1 ends the sequence") {
    Outcome o = play(base, cfg, "reject");
    CHECK_FALSE(o.second_released);
    CHECK(o.trace.total == Revenue(0));
    CHECK(o.opt.value == Revenue(3));
  }
  SUBCASE("accepting r1 at the origin loses r2") {
    for (const char* name : {"greedy", "nearest", "fickle"}) {
      Outcome o = play(base, cfg, name);
      CAPTURE(name);
      CHECK(o.second_released);
      CHECK(o.trace.total == Revenue(3));
      CHECK(o.opt.value == Revenue(6));
      CHECK(o.opt.value - o.trace.total >= Revenue(3));
    }
  }
  SUBCASE("explicit edge must be heavy and shorter than T") {
    cfg.edge = std::make_pair(0, 2);
    CHECK_THROWS_AS(resolve_adversary(base, cfg), Error);
    cfg.edge = std::make_pair(2, 1);
    CHECK(resolve_adversary(base, cfg).first_release == 7);
  }
  SUBCASE("unit graphs have no qualifying edge") {
    Instance unit;
    unit.graph = Graph::unit_complete(3, 0);
    unit.time_limit = 10;
    CHECK_THROWS_AS(resolve_adversary(unit, cfg), Error);
  }
  SUBCASE("b and eps must be positive") {
    cfg.eps = Revenue(0);
    CHECK_THROWS_AS(resolve_adversary(base, cfg), Error);
  }
}

TEST_CASE("preemption does not help the online server") {
  Instance base = default_duel_instance(AdversaryKind::Preempt, 10);
  AdversaryConfig cfg = config(AdversaryKind::Preempt, 2, 1);
  AdversaryParams p = resolve_adversary(base, cfg);
  REQUIRE(p.x);
  REQUIRE(p.y);
  std::set<NodeId> nodes{p.u, p.v, *p.x, *p.y};
  CHECK(nodes.size() == 4);

  SUBCASE("rejecting") {
    Outcome o = play(base, cfg, "reject");
    CHECK(o.trace.total == Revenue(0));
    CHECK(o.opt.value == Revenue(3));
  }
  SUBCASE("quitting r1 for r2 is too late") {
    Outcome o = play(base, cfg, "fickle");
    CHECK(o.second_released);
    CHECK(o.trace.abandoned == 1);
    CHECK(o.trace.total == Revenue(0));
    CHECK(o.opt.value == Revenue(6));
  }
  SUBCASE("finishing r1") {
    Outcome o = play(base, cfg, "greedy");
    CHECK(o.trace.total == Revenue(3));
    CHECK(o.opt.value == Revenue(6));
  }
  SUBCASE("needs preemption enabled") {
    base.preemption = false;
    CHECK_THROWS_AS(resolve_adversary(base, cfg), Error);
  }
}

TEST_CASE("additive construction") {
  AdversaryConfig cfg = config(AdversaryKind::Additive, 1, 1);
  cfg.b1 = Revenue(1);
  cfg.b2 = Revenue(100);
  for (Time T = 3; T <= 12; ++T) {
    Instance base = default_duel_instance(AdversaryKind::Additive, T);
    CAPTURE(T);
    Outcome grf = play(base, cfg, "grf");
    CHECK(grf.second_released);
    CHECK(grf.trace.total == Revenue(1));
    CHECK(grf.opt.value == Revenue(100));

    Outcome reject = play(base, cfg, "reject");
    CHECK_FALSE(reject.second_released);
    CHECK(reject.trace.total == Revenue(0));
    CHECK(reject.opt.value == Revenue(1));
  }
  SUBCASE("weighted graphs are refused") {
    CHECK_THROWS_AS(resolve_adversary(default_duel_instance(AdversaryKind::Noncompete), cfg), Error);
  }
}

TEST_CASE("random generation") {
  SUBCASE("same seed, same instance") {
    for (const char* preset : {"unit", "saturated", "weighted"}) {
      CHECK(gen_random(77, profile_preset(preset)) == gen_random(77, profile_preset(preset)));
    }
    CHECK_FALSE(gen_random(77, profile_preset("unit")) == gen_random(78, profile_preset("unit")));
  }
  SUBCASE("saturated instances release something at every step before T-1") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
      Instance inst = gen_random(seed, profile_preset("saturated"));
      std::set<Time> releases;
      for (const auto& r : inst.requests) releases.insert(r.release);
      for (Time t = 0; t + 2 <= inst.time_limit; ++t) CHECK(releases.count(t) == 1);
    }
  }
  SUBCASE("profile ranges are respected") {
    Profile p = profile_preset("unit");
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
      Instance inst = gen_random(seed, p);
      CHECK(inst.graph.node_count() >= p.nodes.lo);
      CHECK(inst.graph.node_count() <= p.nodes.hi);
      CHECK(inst.time_limit >= p.horizon.lo);
      CHECK(inst.time_limit <= p.horizon.hi);
      CHECK(inst.requests.size() <= static_cast<std::size_t>(p.requests.hi));
    }
  }
  SUBCASE("impossible profiles are reported") {
    Profile p;
    p.nodes = {1, 1};
    CHECK_THROWS_AS(gen_random(1, p), Error);
    p = Profile{};
    p.saturated = true;
    p.requests = {0, 1};
    CHECK_THROWS_AS(gen_random(1, p), Error);
    CHECK_THROWS_AS(profile_preset("huge"), Error);
  }
}
