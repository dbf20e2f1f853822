#include "roldarp/harness.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace roldarp {

namespace {

bool wants(const std::vector<std::string>& algos, std::string_view name) {
  return std::find(algos.begin(), algos.end(), name) != algos.end();
}

void apply_verdicts(InstanceResult& r) {
  if (r.grf && r.opt) r.eq2 = Revenue(2) * *r.grf + r.v_last >= *r.opt;
  if (r.max && r.opt) r.eq3 = *r.max >= *r.opt - r.v_last;
  if (r.grf && r.max) r.eq4 = Revenue(2) * *r.grf >= *r.max;
  if (r.grf && r.max && !r.grf_trace.empty()) {
    r.eq56 = per_step_dominance(r.grf_trace, r.max_trace, r.instance.time_limit);
  }
}

std::string verdict(const std::optional<bool>& v) {
  if (!v) return "-";
  return *v ? "pass" : "fail";
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

Json revenues_to_json(const std::vector<Revenue>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(format_revenue(v));
  return out;
}

std::vector<Revenue> revenues_from_json(const Json& j) {
  std::vector<Revenue> out;
  for (const auto& v : j) out.push_back(revenue_from_json(v));
  return out;
}

Json optional_revenue(const std::optional<Revenue>& r) {
  return r ? Json(format_revenue(*r)) : Json(nullptr);
}

bool contains_request(const Schedule& s, RequestId id) {
  return std::any_of(s.entries.begin(), s.entries.end(), [&](const ScheduleEntry& e) { return e.id == id; });
}

}  // namespace

void validate_config(const ExperimentConfig& cfg) {
  for (const auto& a : cfg.algorithms) {
    if (a != "grf" && a != "max" && a != "opt") {
      throw Error(ErrorCode::ConfigError, "unknown algorithm '" + a + "' (expected grf, max or opt)");
    }
  }
  if (cfg.workers == 0) throw Error(ErrorCode::ConfigError, "workers must be at least 1");
}

bool per_step_dominance(const std::vector<Revenue>& grf_by_time, const std::vector<Revenue>& max_trace,
                        Time time_limit) {
  auto max_at = [&](Time t) {
    return t >= 0 && static_cast<std::size_t>(t) < max_trace.size() ? max_trace[static_cast<std::size_t>(t)]
                                                                     : Revenue{0};
  };
  const Time first_serve = time_limit % 2 == 0 ? 1 : 2;
  for (Time t = first_serve; t < time_limit && static_cast<std::size_t>(t) < grf_by_time.size(); t += 2) {
    const Revenue earned = grf_by_time[static_cast<std::size_t>(t)];
    const Revenue a = max_at(t - 1);
    const Revenue b = max_at(t - 2);
    if (earned < std::max(a, b) || Revenue(2) * earned < a + b) return false;
  }
  return true;
}

bool InstanceResult::passed() const {
  if (!error.empty()) return false;
  for (const auto& v : {eq2, eq3, eq4, eq56}) {
    if (v && !*v) return false;
  }
  return true;
}

InstanceResult evaluate_instance(const Instance& inst, const std::vector<std::string>& algorithms,
                                 const SolveOptions& solve) {
  InstanceResult r;
  r.instance = inst;
  try {
    require_valid(inst);
    if (wants(algorithms, "grf")) {
      StrategyTrace trace = run_grf(inst);
      Verdict v = verify_certificate(inst, trace.schedule);
      if (!v.accepted()) {
        throw Error(ErrorCode::InfeasibleSchedule, "grf schedule rejected: " + v.detail);
      }
      r.grf = trace.total;
      r.grf_trace = trace.revenue_by_time();
      r.grf_schedule = trace.schedule;
    }
    if (wants(algorithms, "max")) {
      MaxResult m = run_max(inst);
      r.max = m.value;
      r.max_trace = m.trace;
      r.max_schedule = m.schedule;
    }
    if (wants(algorithms, "opt")) {
      OptResult o = solve_opt(inst, solve);
      r.opt = o.value;
      r.opt_schedule = o.schedule;
      r.opt_stats = o.stats;
      r.v_last = last_revenue(inst, o.schedule);
    }
    apply_verdicts(r);
  } catch (const Error& e) {
    r.error = e.what();
  }
  return r;
}

bool CorpusReport::all_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const InstanceResult& r) { return r.passed(); });
}

CorpusReport summarize(std::vector<InstanceResult> rows) {
  CorpusReport out;
  auto tally = [](const std::optional<bool>& v, std::size_t& checked, std::size_t& pass) {
    if (!v) return;
    ++checked;
    if (*v) ++pass;
  };
  for (const auto& r : rows) {
    if (!r.error.empty()) ++out.failures;
    tally(r.eq2, out.eq2_checked, out.eq2_pass);
    tally(r.eq3, out.eq3_checked, out.eq3_pass);
    tally(r.eq4, out.eq4_checked, out.eq4_pass);
    tally(r.eq56, out.eq56_checked, out.eq56_pass);
    if (r.grf && r.opt && *r.grf > Revenue{0}) {
      Revenue ratio = *r.opt / *r.grf;
      if (!out.worst_ratio || ratio > *out.worst_ratio) out.worst_ratio = ratio;
    }
  }
  out.rows = std::move(rows);
  return out;
}

namespace {

template <typename Job>
std::vector<InstanceResult> run_parallel(std::size_t count, std::size_t workers, Job job) {
  std::vector<InstanceResult> rows(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) rows[i] = job(i);
  };
  std::vector<std::jthread> pool;
  for (std::size_t w = 1; w < std::min(workers, count); ++w) pool.emplace_back(worker);
  worker();
  return rows;
}

}  // namespace

CorpusReport run_corpus(const ExperimentConfig& cfg) {
  validate_config(cfg);
  auto rows = run_parallel(cfg.count, cfg.workers, [&](std::size_t i) {
    const std::uint64_t seed = cfg.seed + i;
    InstanceResult r;
    try {
      r = evaluate_instance(gen_random(seed, cfg.profile), cfg.algorithms, cfg.solve);
    } catch (const Error& e) {
      r.error = e.what();
    }
    r.index = i;
    r.seed = seed;
    return r;
  });
  return summarize(std::move(rows));
}

CorpusReport run_instances(const std::vector<Instance>& instances, const ExperimentConfig& cfg) {
  validate_config(cfg);
  auto rows = run_parallel(instances.size(), cfg.workers, [&](std::size_t i) {
    InstanceResult r = evaluate_instance(instances[i], cfg.algorithms, cfg.solve);
    r.index = i;
    return r;
  });
  return summarize(std::move(rows));
}

std::string format_ratio(const std::optional<Revenue>& grf, const std::optional<Revenue>& opt) {
  if (!grf || !opt) return "-";
  if (*grf <= Revenue{0}) return "inf";
  return format_revenue(*opt / *grf);
}

std::string summary_csv(const CorpusReport& report) {
  std::ostringstream out;
  out << "seed,n,T,VAL_grf,VAL_max,VAL_opt,v_last,eq2,eq3,eq4,ratio,eq56,error\n";
  auto value = [](const std::optional<Revenue>& r) { return r ? format_revenue(*r) : std::string("-"); };
  for (const auto& r : report.rows) {
    out << r.seed << ',' << r.instance.graph.node_count() << ',' << r.instance.time_limit << ','
        << value(r.grf) << ',' << value(r.max) << ',' << value(r.opt) << ',' << format_revenue(r.v_last) << ','
        << verdict(r.eq2) << ',' << verdict(r.eq3) << ',' << verdict(r.eq4) << ','
        << format_ratio(r.grf, r.opt) << ',' << verdict(r.eq56) << ',' << csv_escape(r.error) << '\n';
  }
  return out.str();
}

Json detail_json(const CorpusReport& report) {
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    Json j;
    j["index"] = r.index;
    j["seed"] = r.seed;
    j["instance"] = instance_to_json(r.instance);
    if (!r.error.empty()) j["error"] = r.error;
    j["values"] = Json{{"grf", optional_revenue(r.grf)},
                       {"max", optional_revenue(r.max)},
                       {"opt", optional_revenue(r.opt)},
                       {"v_last", format_revenue(r.v_last)}};
    j["verdicts"] = Json{{"eq2", verdict(r.eq2)},
                         {"eq3", verdict(r.eq3)},
                         {"eq4", verdict(r.eq4)},
                         {"eq56", verdict(r.eq56)}};
    j["traces"] = Json{{"grf", revenues_to_json(r.grf_trace)}, {"max", revenues_to_json(r.max_trace)}};
    Json schedules = Json::object();
    if (r.grf_schedule) schedules["grf"] = schedule_to_json(*r.grf_schedule);
    if (r.max_schedule) schedules["max"] = schedule_to_json(*r.max_schedule);
    if (r.opt_schedule) schedules["opt"] = schedule_to_json(*r.opt_schedule);
    j["schedules"] = std::move(schedules);
    if (r.opt) j["opt_search"] = stats_to_json(r.opt_stats);
    rows.push_back(std::move(j));
  }
  Json aggregate;
  aggregate["instances"] = report.rows.size();
  aggregate["errors"] = report.failures;
  auto rate = [](std::size_t pass, std::size_t checked) {
    return Json{{"pass", pass}, {"checked", checked}};
  };
  aggregate["eq2"] = rate(report.eq2_pass, report.eq2_checked);
  aggregate["eq3"] = rate(report.eq3_pass, report.eq3_checked);
  aggregate["eq4"] = rate(report.eq4_pass, report.eq4_checked);
  aggregate["eq56"] = rate(report.eq56_pass, report.eq56_checked);
  aggregate["worst_ratio"] = report.worst_ratio ? Json(format_revenue(*report.worst_ratio)) : Json(nullptr);
  aggregate["all_pass"] = report.all_pass();
  return Json{{"aggregate", aggregate}, {"instances", rows}};
}

void emit_report(const CorpusReport& report, const std::filesystem::path& dir) {
  write_text_file(dir / "summary.csv", summary_csv(report));
  write_text_file(dir / "detail.json", detail_json(report).dump(2) + "\n");
}

CorpusReport report_from_detail(const Json& detail) {
  std::vector<InstanceResult> rows;
  try {
    for (const auto& j : detail.at("instances")) {
      InstanceResult r;
      r.index = j.at("index").get<std::size_t>();
      r.seed = j.at("seed").get<std::uint64_t>();
      r.instance = instance_from_json(j.at("instance"));
      if (j.contains("error")) r.error = j.at("error").get<std::string>();
      const Json& values = j.at("values");
      auto opt_value = [&](const char* key) -> std::optional<Revenue> {
        if (values.at(key).is_null()) return std::nullopt;
        return revenue_from_json(values.at(key));
      };
      r.grf = opt_value("grf");
      r.max = opt_value("max");
      r.opt = opt_value("opt");
      r.v_last = revenue_from_json(values.at("v_last"));
      r.grf_trace = revenues_from_json(j.at("traces").at("grf"));
      r.max_trace = revenues_from_json(j.at("traces").at("max"));
      const Json& schedules = j.at("schedules");
      if (schedules.contains("grf")) r.grf_schedule = schedule_from_json(schedules.at("grf"));
      if (schedules.contains("max")) r.max_schedule = schedule_from_json(schedules.at("max"));
      if (schedules.contains("opt")) r.opt_schedule = schedule_from_json(schedules.at("opt"));
      if (j.contains("opt_search")) {
        r.opt_stats.expanded = j.at("opt_search").at("expanded").get<std::uint64_t>();
        r.opt_stats.pruned = j.at("opt_search").at("pruned").get<std::uint64_t>();
      }
      if (r.error.empty()) apply_verdicts(r);
      rows.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("detail report: ") + e.what());
  }
  return summarize(std::move(rows));
}

Instance default_duel_instance(AdversaryKind kind, Time time_limit) {
  Instance inst;
  inst.time_limit = time_limit;
  switch (kind) {
    case AdversaryKind::Noncompete:
      inst.graph = Graph::from_edges(3, 0, {{0, 1, 3}, {0, 2, 1}, {1, 2, 2}}, false);
      break;
    case AdversaryKind::Preempt:
      inst.graph = Graph::from_edges(4, 0, {{0, 1, 3}, {0, 2, 1}, {0, 3, 2}, {1, 2, 2}, {1, 3, 2}, {2, 3, 3}},
                                     false);
      inst.preemption = true;
      break;
    case AdversaryKind::Additive:
      inst.graph = Graph::unit_complete(3, 0);
      break;
  }
  return inst;
}

bool DuelReport::all_pass() const {
  bool rows_ok = std::all_of(rows.begin(), rows.end(), [](const DuelRow& r) { return r.pass; });
  return rows_ok && linear_in_eps.value_or(true);
}

DuelReport run_duel(const DuelConfig& cfg) {
  DuelReport report;
  report.kind = cfg.adversary.kind;
  std::vector<Revenue> eps_values{cfg.adversary.eps};
  for (const auto& e : cfg.eps_sweep) {
    if (std::find(eps_values.begin(), eps_values.end(), e) == eps_values.end()) eps_values.push_back(e);
  }
  std::vector<std::string> names = cfg.strategies;
  if (names.empty()) names = shipped_strategies(cfg.base.graph.all_unit());

  for (const auto& name : names) {
    for (const auto& eps : eps_values) {
      AdversaryConfig adv_cfg = cfg.adversary;
      adv_cfg.eps = eps;
      DuelRow row;
      row.strategy = name;
      row.eps = eps;
      row.params = resolve_adversary(cfg.base, adv_cfg);
      TwoStepAdversary adversary(cfg.base, row.params);
      auto strategy = make_strategy(name);
      StrategyTrace trace = simulate(cfg.base, *strategy, &adversary);
      row.realized = realized_instance(cfg.base, trace);
      OptResult opt = solve_opt(row.realized, cfg.solve);

      row.online = trace.total;
      row.offline = opt.value;
      row.gap = opt.value - trace.total;
      row.online_schedule = trace.schedule;
      row.offline_schedule = opt.schedule;
      row.second_released = adversary.second_emitted();
      row.online_served_second = contains_request(trace.schedule, adversary.second().id);
      row.offline_served_second = row.second_released && contains_request(opt.schedule, adversary.second().id);

      if (cfg.adversary.kind == AdversaryKind::Additive) {
        if (row.second_released) {
          bool served_first = contains_request(trace.schedule, adversary.first().id);
          Revenue expected = row.params.second_revenue - (served_first ? row.params.first_revenue : Revenue{0});
          row.pass = !row.online_served_second && row.offline_served_second && row.gap == expected;
        } else {
          row.pass = row.online == Revenue{0} && row.offline == row.params.first_revenue;
        }
      } else {
        row.pass = row.gap >= adv_cfg.b + eps;
      }
      report.rows.push_back(std::move(row));
    }
  }

  if (cfg.adversary.kind != AdversaryKind::Additive && eps_values.size() >= 3) {
    bool linear = true;
    for (std::size_t s = 0; s < names.size(); ++s) {
      const auto first = report.rows.begin() + static_cast<std::ptrdiff_t>(s * eps_values.size());
      std::optional<Revenue> slope;
      for (std::size_t k = 1; k < eps_values.size(); ++k) {
        const DuelRow& a = *(first + static_cast<std::ptrdiff_t>(k - 1));
        const DuelRow& b = *(first + static_cast<std::ptrdiff_t>(k));
        Revenue here = (b.gap - a.gap) / (b.eps - a.eps);
        if (here <= Revenue{0} || (slope && *slope != here)) linear = false;
        slope = here;
      }
    }
    report.linear_in_eps = linear;
  }
  return report;
}

Json duel_json(const DuelReport& report) {
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    Json j;
    j["strategy"] = r.strategy;
    j["eps"] = format_revenue(r.eps);
    Json params{{"u", r.params.u}, {"v", r.params.v}};
    if (r.params.x) params["x"] = *r.params.x;
    if (r.params.y) params["y"] = *r.params.y;
    params["first_release"] = r.params.first_release;
    params["first_revenue"] = format_revenue(r.params.first_revenue);
    params["second_revenue"] = format_revenue(r.params.second_revenue);
    j["params"] = std::move(params);
    j["online"] = format_revenue(r.online);
    j["offline"] = format_revenue(r.offline);
    j["gap"] = format_revenue(r.gap);
    j["second_released"] = r.second_released;
    j["online_served_second"] = r.online_served_second;
    j["offline_served_second"] = r.offline_served_second;
    j["pass"] = r.pass;
    j["online_schedule"] = schedule_to_json(r.online_schedule);
    j["offline_schedule"] = schedule_to_json(r.offline_schedule);
    j["realized"] = instance_to_json(r.realized);
    rows.push_back(std::move(j));
  }
  Json out;
  out["kind"] = std::string(to_string(report.kind));
  out["rows"] = std::move(rows);
  out["linear_in_eps"] = report.linear_in_eps ? Json(*report.linear_in_eps) : Json(nullptr);
  out["all_pass"] = report.all_pass();
  return out;
}

}  // namespace roldarp
