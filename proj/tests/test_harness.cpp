#include <doctest.h>

#include <sstream>

#include "roldarp/harness.hpp"

using namespace roldarp;

namespace {

Instance table_one() {
  Instance inst;
  inst.graph = Graph::unit_complete(3, 0);
  inst.time_limit = 6;
  const std::vector<int> revenues{5, 3, 7, 2, 6};
  for (int t = 0; t < 5; ++t) {
    inst.requests.push_back({t + 1, t % 3, (t + 1) % 3, t, Revenue(revenues[t]), std::nullopt});
  }
  return inst;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    std::vector<std::string> cells;
    std::istringstream cols(line);
    for (std::string cell; std::getline(cols, cell, ',');) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

const std::string kHeader = "seed,n,T,VAL_grf,VAL_max,VAL_opt,v_last,eq2,eq3,eq4,ratio,eq56,error";

}  // namespace

TEST_CASE("empty results give a header-only CSV") {
  CorpusReport r = summarize({});
  CHECK(summary_csv(r) == kHeader + "\n");
  CHECK(r.all_pass());
}

TEST_CASE("empty sequence passes vacuously") {
  Instance inst;
  inst.graph = Graph::unit_complete(2, 0);
  inst.time_limit = 3;
  CorpusReport r = run_instances({inst}, ExperimentConfig{});
  REQUIRE(r.rows.size() == 1);
  const auto& row = r.rows[0];
  CHECK(row.error.empty());
  CHECK(row.eq2 == true);
  CHECK(row.eq3 == true);
  CHECK(row.eq4 == true);
  CHECK(row.eq56 == true);
  CHECK(format_ratio(row.grf, row.opt) == "inf");
  CHECK(r.all_pass());
}

TEST_CASE("one release per step") {
  CorpusReport r = run_instances({table_one()}, ExperimentConfig{});
  REQUIRE(r.rows.size() == 1);
  const auto& row = r.rows[0];
  CHECK(*row.grf == Revenue(18));
  CHECK(*row.max == Revenue(23));
  CHECK(row.passed());
  auto csv = parse_csv(summary_csv(r));
  REQUIRE(csv.size() == 2);
  CHECK(csv[1][3] == "18");
  CHECK(csv[1][4] == "23");
}

TEST_CASE("fractions are written exactly") {
  Instance inst = table_one();
  inst.requests[0].revenue = Revenue(7, 3);
  CorpusReport r = run_instances({inst}, ExperimentConfig{});
  auto csv = parse_csv(summary_csv(r));
  REQUIRE(csv.size() == 2);
  CHECK(csv[1][4] == format_revenue(Revenue(7, 3) + Revenue(18)));
  CHECK(csv[1][4] == "61/3");
}

TEST_CASE("per-step dominance") {
  // T = 6: GRF serves in slots 1, 3, 5.
  std::vector<Revenue> max_trace{5, 3, 7, 2, 6};
  CHECK(per_step_dominance({0, 5, 0, 7, 0, 6}, max_trace, 6));
  CHECK_FALSE(per_step_dominance({0, 5, 0, 3, 0, 6}, max_trace, 6));
  CHECK_FALSE(per_step_dominance({0, 4, 0, 7, 0, 6}, max_trace, 6));
}

TEST_CASE("corpus reports") {
  ExperimentConfig cfg;
  cfg.seed = 900;
  cfg.count = 40;
  cfg.profile = profile_preset("unit");
  CorpusReport one = run_corpus(cfg);
  cfg.workers = 4;
  CorpusReport four = run_corpus(cfg);

  SUBCASE("row count and ordering") {
    auto csv = parse_csv(summary_csv(one));
    CHECK(csv.size() == 41);
    CHECK(csv[0].size() == 13);
    for (std::size_t i = 0; i < one.rows.size(); ++i) CHECK(one.rows[i].seed == 900 + i);
  }
  SUBCASE("worker count does not change the output") {
    CHECK(summary_csv(one) == summary_csv(four));
    CHECK(detail_json(one).dump() == detail_json(four).dump());
  }
  SUBCASE("verdict columns follow from the value columns") {
    auto csv = parse_csv(summary_csv(one));
    for (std::size_t i = 1; i < csv.size(); ++i) {
      const auto& c = csv[i];
      Revenue grf = parse_revenue(c[3]), mx = parse_revenue(c[4]), opt = parse_revenue(c[5]);
      Revenue last = parse_revenue(c[6]);
      auto verdict = [](bool ok) { return std::string(ok ? "pass" : "fail"); };
      CHECK(c[7] == verdict(Revenue(2) * grf + last >= opt));
      CHECK(c[8] == verdict(mx >= opt - last));
      CHECK(c[9] == verdict(Revenue(2) * grf >= mx));
      if (grf > Revenue{0}) CHECK(parse_revenue(c[10]) == opt / grf);
    }
  }
  SUBCASE("detail file rebuilds the same summary") {
    Json detail = Json::parse(detail_json(one).dump());
    CHECK(summary_csv(report_from_detail(detail)) == summary_csv(one));
  }
  SUBCASE("aggregates") {
    CHECK(one.eq2_checked == 40);
    CHECK(one.eq2_pass == 40);
    CHECK(one.failures == 0);
  }
}

TEST_CASE("an instance failure is reported and not fatal") {
  ExperimentConfig cfg;
  cfg.seed = 1;
  cfg.count = 30;
  cfg.solve.max_requests = 3;
  CorpusReport r = run_corpus(cfg);
  CHECK(r.rows.size() == 30);
  CHECK(r.failures > 0);
  CHECK(r.failures < 30);
  CHECK_FALSE(r.all_pass());
}

TEST_CASE("configuration is checked") {
  ExperimentConfig cfg;
  cfg.algorithms = {"grf", "magic"};
  CHECK_THROWS_AS(run_corpus(cfg), Error);
  cfg.algorithms = {"grf"};
  cfg.workers = 0;
  CHECK_THROWS_AS(run_corpus(cfg), Error);
}

TEST_CASE("duels") {
  SUBCASE("rejecting strategy loses exactly b + eps") {
    DuelConfig cfg;
    cfg.base = default_duel_instance(AdversaryKind::Noncompete);
    cfg.adversary.kind = AdversaryKind::Noncompete;
    cfg.adversary.b = Revenue(2);
    cfg.adversary.eps = Revenue(1);
    cfg.strategies = {"reject"};
    DuelReport r = run_duel(cfg);
    REQUIRE(r.rows.size() == 1);
    CHECK(r.rows[0].gap == Revenue(3));
    CHECK(r.all_pass());
  }
  SUBCASE("gap grows linearly with eps") {
    DuelConfig cfg;
    cfg.base = default_duel_instance(AdversaryKind::Noncompete);
    cfg.eps_sweep = {Revenue(10), Revenue(100)};
    DuelReport r = run_duel(cfg);
    CHECK(r.rows.size() == 3 * shipped_strategies(false).size());
    REQUIRE(r.linear_in_eps);
    CHECK(*r.linear_in_eps);
    CHECK(r.all_pass());
  }
  SUBCASE("GRF serves only the first additive request") {
    DuelConfig cfg;
    cfg.base = default_duel_instance(AdversaryKind::Additive, 8);
    cfg.adversary.kind = AdversaryKind::Additive;
    cfg.adversary.b1 = Revenue(1);
    cfg.adversary.b2 = Revenue(100);
    cfg.strategies = {"grf"};
    DuelReport r = run_duel(cfg);
    REQUIRE(r.rows.size() == 1);
    const auto& row = r.rows[0];
    CHECK(row.second_released);
    CHECK_FALSE(row.online_served_second);
    CHECK(row.offline_served_second);
    CHECK(row.gap == Revenue(99));
    CHECK(row.pass);
    CHECK_FALSE(duel_json(r).dump().empty());
  }
}

TEST_CASE("json round trips") {
  SUBCASE("instance") {
    Instance inst = gen_random(3, profile_preset("weighted"));
    inst.goal = Revenue(5, 2);
    inst.requests[0].group = 4;
    CHECK(instance_from_json(Json::parse(instance_to_json(inst).dump())) == inst);
  }
  SUBCASE("integer revenues are accepted") {
    Json j = Json::parse(R"({"nodes": 2, "origin": 0, "weights": [[0, 1, 1]], "unit": true, "T": 3,
                             "requests": [{"id": 1, "s": 0, "d": 1, "t": 0, "r": 4}]})");
    Instance inst = instance_from_json(j);
    CHECK(inst.requests[0].revenue == Revenue(4));
    CHECK_FALSE(inst.preemption);
  }
  SUBCASE("missing fields are parse errors") {
    try {
      instance_from_json(Json::parse(R"({"nodes": 2})"));
      FAIL("expected a parse error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ParseError);
    }
  }
  SUBCASE("schedule") {
    Schedule s{"opt", {{3, 1}, {5, 4}}, true};
    CHECK(schedule_from_json(schedule_to_json(s)) == s);
  }
  SUBCASE("adversary") {
    AdversaryConfig cfg;
    cfg.kind = AdversaryKind::Preempt;
    cfg.b = Revenue(10);
    cfg.edge = std::make_pair(0, 1);
    cfg.edge2 = std::make_pair(2, 3);
    AdversaryConfig back = adversary_from_json(adversary_to_json(cfg));
    CHECK(back.kind == cfg.kind);
    CHECK(back.b == cfg.b);
    CHECK(back.edge == cfg.edge);
    CHECK(back.edge2 == cfg.edge2);
  }
  SUBCASE("profile") {
    Profile p = profile_from_json(Json::parse(R"({"nodes": [3, 4], "T": 9, "saturated": true})"));
    CHECK(p.nodes.lo == 3);
    CHECK(p.nodes.hi == 4);
    CHECK(p.horizon.lo == 9);
    CHECK(p.horizon.hi == 9);
    CHECK(p.saturated);
  }
  SUBCASE("tsp") {
    TspInstance t = random_tsp(4, 5, 7);
    t.budget = 12;
    TspInstance back = tsp_from_json(tsp_to_json(t));
    CHECK(back.graph == t.graph);
    CHECK(back.budget == 12);
  }
}
