#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "roldarp/harness.hpp"

namespace fs = std::filesystem;
using namespace roldarp;

namespace {

constexpr int kVerdictFailed = 1;
constexpr int kUsageOrIoError = 2;

Profile load_profile(const std::string& spec) {
  if (fs::exists(spec)) return profile_from_json(read_json_file(spec));
  return profile_preset(spec);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

AdversaryConfig load_adversary(const std::string& spec) {
  if (fs::exists(spec)) return adversary_from_json(read_json_file(spec));
  AdversaryConfig cfg;
  cfg.kind = parse_adversary_kind(spec);
  return cfg;
}

struct CorpusArgs {
  std::uint64_t seed = 1;
  std::size_t count = 100;
  std::string profile = "unit";
  std::vector<std::string> inputs;
  std::string algo = "grf,max,opt";
  std::size_t workers = 1;
  std::size_t max_requests = 16;
  std::string out = "out";
};

int cmd_gen(const CorpusArgs& a) {
  Profile profile = load_profile(a.profile);
  for (std::size_t i = 0; i < a.count; ++i) {
    const std::uint64_t seed = a.seed + i;
    Instance inst = gen_random(seed, profile);
    write_text_file(fs::path(a.out) / ("instance_" + std::to_string(seed) + ".json"),
                    instance_to_json(inst).dump(2) + "\n");
  }
  std::cout << "wrote " << a.count << " instances to " << a.out << "\n";
  return 0;
}

int cmd_run(const CorpusArgs& a) {
  ExperimentConfig cfg;
  cfg.seed = a.seed;
  cfg.count = a.count;
  cfg.algorithms = split_list(a.algo);
  cfg.workers = a.workers;
  cfg.solve.max_requests = a.max_requests;

  CorpusReport report;
  if (!a.inputs.empty()) {
    std::vector<Instance> instances;
    for (const auto& path : a.inputs) instances.push_back(instance_from_json(read_json_file(path)));
    report = run_instances(instances, cfg);
  } else {
    cfg.profile = load_profile(a.profile);
    report = run_corpus(cfg);
  }
  emit_report(report, a.out);

  for (const auto& r : report.rows) {
    if (!r.error.empty()) std::cerr << "instance " << r.index << " (seed " << r.seed << "): " << r.error << "\n";
  }
  auto rate = [](std::size_t pass, std::size_t checked) {
    return std::to_string(pass) + "/" + std::to_string(checked);
  };
  std::cout << "instances " << report.rows.size() << ", errors " << report.failures
            << ", eq2 " << rate(report.eq2_pass, report.eq2_checked)
            << ", eq3 " << rate(report.eq3_pass, report.eq3_checked)
            << ", eq4 " << rate(report.eq4_pass, report.eq4_checked)
            << ", eq56 " << rate(report.eq56_pass, report.eq56_checked)
            << ", worst opt/grf " << (report.worst_ratio ? format_revenue(*report.worst_ratio) : "-") << "\n";
  return report.all_pass() ? 0 : kVerdictFailed;
}

int cmd_report(const std::string& in, const std::string& out) {
  CorpusReport report = report_from_detail(read_json_file(in));
  write_text_file(fs::path(out) / "summary.csv", summary_csv(report));
  std::cout << "rebuilt summary for " << report.rows.size() << " instances\n";
  return report.all_pass() ? 0 : kVerdictFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Online dial-a-ride revenue experiments"};
  app.require_subcommand(1);
  int status = 0;

  CorpusArgs corpus;
  auto add_corpus_flags = [&](CLI::App* sub) {
    sub->add_option("--seed", corpus.seed, "First seed; instance i uses seed+i");
    sub->add_option("--count", corpus.count, "Number of generated instances");
    sub->add_option("--profile", corpus.profile, "Preset (unit, saturated, weighted) or profile JSON file");
    sub->add_option("--out", corpus.out, "Output directory");
  };

  auto* gen = app.add_subcommand("gen", "Generate random instances");
  add_corpus_flags(gen);
  gen->callback([&] { status = cmd_gen(corpus); });

  auto* run = app.add_subcommand("run", "Run GRF, MAX and OPT and check the inequalities");
  add_corpus_flags(run);
  run->add_option("--in", corpus.inputs, "Instance files (instead of generating)");
  run->add_option("--algo", corpus.algo, "Comma separated subset of grf,max,opt");
  run->add_option("--workers", corpus.workers, "Worker threads")->check(CLI::PositiveNumber);
  run->add_option("--max-requests", corpus.max_requests, "Request cap for the exact solver");
  run->callback([&] { status = cmd_run(corpus); });

  std::string adversary = "noncompete";
  std::string duel_in;
  std::string strategies;
  std::string b = "1";
  std::string eps = "1";
  std::string sweep;
  Time horizon = 10;
  std::string duel_out = "out";
  std::size_t duel_cap = 16;
  auto* duel = app.add_subcommand("duel", "Play an adaptive adversary against online strategies");
  duel->add_option("--adversary", adversary, "noncompete, preempt, additive, or adversary JSON file");
  duel->add_option("--in", duel_in, "Base instance (graph, T, preemption)");
  duel->add_option("--T", horizon, "Horizon of the built-in base instance");
  duel->add_option("--algo", strategies, "Comma separated strategies (default: all shipped)");
  duel->add_option("--b", b, "Base revenue");
  duel->add_option("--eps", eps, "Revenue increment");
  duel->add_option("--sweep", sweep, "Extra comma separated eps values");
  duel->add_option("--max-requests", duel_cap, "Request cap for the exact solver");
  duel->add_option("--out", duel_out, "Output directory");
  duel->callback([&] {
    DuelConfig cfg;
    cfg.adversary = load_adversary(adversary);
    if (!fs::exists(adversary)) {
      cfg.adversary.b = parse_revenue(b);
      cfg.adversary.eps = parse_revenue(eps);
    }
    cfg.base = duel_in.empty() ? default_duel_instance(cfg.adversary.kind, horizon)
                               : instance_from_json(read_json_file(duel_in));
    cfg.strategies = split_list(strategies);
    for (const auto& e : split_list(sweep)) cfg.eps_sweep.push_back(parse_revenue(e));
    cfg.solve.max_requests = duel_cap;
    DuelReport report = run_duel(cfg);
    write_text_file(fs::path(duel_out) / "duel.json", duel_json(report).dump(2) + "\n");
    for (const auto& r : report.rows) {
      std::cout << r.strategy << " eps=" << format_revenue(r.eps) << ": online " << format_revenue(r.online)
                << ", offline " << format_revenue(r.offline) << ", gap " << format_revenue(r.gap)
                << (r.pass ? "  pass" : "  FAIL") << "\n";
    }
    if (report.linear_in_eps) std::cout << "gap linear in eps: " << (*report.linear_in_eps ? "yes" : "no") << "\n";
    status = report.all_pass() ? 0 : kVerdictFailed;
  });

  std::string verify_in;
  std::string verify_schedule;
  auto* verify = app.add_subcommand("verify", "Check a schedule certificate against an instance");
  verify->add_option("--in", verify_in, "Instance file")->required();
  verify->add_option("--schedule", verify_schedule, "Schedule file")->required();
  verify->callback([&] {
    Instance inst = instance_from_json(read_json_file(verify_in));
    Schedule sched = schedule_from_json(read_json_file(verify_schedule));
    Verdict v = verify_certificate(inst, sched);
    if (v.accepted()) {
      std::cout << "accepted, revenue " << format_revenue(schedule_revenue(inst, sched)) << "\n";
    } else {
      std::cout << "rejected: " << to_string(v.check) << ": " << v.detail << "\n";
    }
    status = v.accepted() ? 0 : kVerdictFailed;
  });

  std::string tsp_in;
  Weight budget = 0;
  std::string reduce_out = "instance.json";
  auto* reduce = app.add_subcommand("reduce-tsp", "Build the dial-a-ride decision instance for a TSP");
  reduce->add_option("--in", tsp_in, "TSP file")->required();
  reduce->add_option("--k", budget, "Tour budget")->required();
  reduce->add_option("--out", reduce_out, "Output instance file");
  reduce->callback([&] {
    TspInstance tsp = tsp_from_json(read_json_file(tsp_in));
    tsp.budget = budget;
    write_text_file(reduce_out, instance_to_json(reduce_tsp(tsp)).dump(2) + "\n");
    std::cout << "wrote " << reduce_out << "\n";
  });

  std::string eq_in;
  std::uint64_t eq_seed = 1;
  std::size_t eq_count = 50;
  std::vector<int> eq_nodes{4, 7};
  Weight eq_max_weight = 0;
  bool perturb = false;
  std::string eq_out = "out";
  auto* equiv = app.add_subcommand("check-equivalence", "Check the TSP reduction in both directions");
  equiv->add_option("--in", eq_in, "TSP file (otherwise random instances)");
  equiv->add_option("--seed", eq_seed, "First seed for random instances");
  equiv->add_option("--count", eq_count, "Number of random instances");
  equiv->add_option("--nodes", eq_nodes, "Node count range lo hi")->expected(2);
  equiv->add_option("--max-weight", eq_max_weight, "Largest random edge weight (default n)");
  equiv->add_flag("--perturb", perturb, "Give one tour edge revenue 2 (negative control)");
  equiv->add_option("--out", eq_out, "Output directory");
  equiv->callback([&] {
    std::vector<std::pair<std::string, TspInstance>> cases;
    if (!eq_in.empty()) {
      cases.emplace_back(eq_in, tsp_from_json(read_json_file(eq_in)));
    } else {
      const int span = eq_nodes[1] - eq_nodes[0] + 1;
      if (span < 1) throw Error(ErrorCode::ConfigError, "--nodes lo must not exceed hi");
      for (std::size_t i = 0; i < eq_count; ++i) {
        const std::uint64_t seed = eq_seed + i;
        const int n = eq_nodes[0] + static_cast<int>(i % static_cast<std::size_t>(span));
        cases.emplace_back("seed " + std::to_string(seed), random_tsp(seed, n, eq_max_weight > 0 ? eq_max_weight : n));
      }
    }
    EquivalenceOptions options;
    options.perturb_revenue = perturb;
    Json rows = Json::array();
    std::size_t holds = 0;
    for (const auto& [label, tsp] : cases) {
      EquivalenceReport r = check_equivalence(tsp, options);
      if (r.holds()) ++holds;
      Json j;
      j["case"] = label;
      j["tsp"] = tsp_to_json(tsp);
      j["optimum"] = r.optimum;
      j["optimum_dp"] = r.optimum_dp;
      j["yes_at_optimum"] = r.yes_at_optimum;
      j["witness_certified"] = r.witness_certified;
      j["witness_is_tour"] = r.witness_is_tour;
      j["no_below_optimum"] = r.no_below_optimum;
      if (r.witness) j["witness"] = schedule_to_json(*r.witness);
      if (r.counterexample) j["counterexample"] = schedule_to_json(*r.counterexample);
      j["holds"] = r.holds();
      rows.push_back(std::move(j));
      std::cout << label << ": k*=" << r.optimum << (r.holds() ? "  holds" : "  FAILS");
      if (!r.counterexample_text.empty()) std::cout << "  (budget k*-1 accepts " << r.counterexample_text << ")";
      std::cout << "\n";
    }
    std::cout << holds << "/" << cases.size() << " instances satisfy both directions\n";
    write_text_file(fs::path(eq_out) / "equivalence.json", Json{{"cases", rows}}.dump(2) + "\n");
    status = holds == cases.size() ? 0 : kVerdictFailed;
  });

  std::string report_in;
  std::string report_out = "out";
  auto* report = app.add_subcommand("report", "Rebuild summary.csv from a detail.json");
  report->add_option("--in", report_in, "detail.json")->required();
  report->add_option("--out", report_out, "Output directory");
  report->callback([&] { status = cmd_report(report_in, report_out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageOrIoError;
  }
  return status;
}
