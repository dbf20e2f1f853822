// Acceptance suite: one PASS/FAIL line per criterion.
//
// Usage: acceptance <path-to-roldarp-cli>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "oracles.hpp"
#include "roldarp/harness.hpp"

using namespace roldarp;
namespace fs = std::filesystem;

namespace {

// Pinned thresholds. Every revenue comparison is exact (rational arithmetic,
// zero tolerance); only corpus sizes and time budgets are configurable here.
constexpr std::size_t kUnitCorpus = 1000;
constexpr std::size_t kSaturatedCorpus = 250;
constexpr std::size_t kSolverCorpus = 500;
constexpr std::size_t kSolverMaxRequests = 8;
constexpr std::size_t kTspCorpus = 52;
constexpr double kCorpusBudgetSeconds = 60.0;
constexpr double kTspBudgetSeconds = 120.0;

int failures = 0;

void report(int id, bool pass, const std::string& what, const std::string& detail) {
  if (!pass) ++failures;
  std::cout << "criterion " << id << ": " << (pass ? "PASS" : "FAIL") << "  " << what << "  [" << detail << "]"
            << std::endl;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string ratio(std::size_t pass, std::size_t total) {
  return std::to_string(pass) + "/" + std::to_string(total);
}

std::size_t worker_count() { return std::max(1u, std::thread::hardware_concurrency()); }

void corpus_inequalities() {
  ExperimentConfig cfg;
  cfg.seed = 1;
  cfg.count = kUnitCorpus;
  cfg.profile = profile_preset("unit");
  cfg.workers = worker_count();
  auto start = std::chrono::steady_clock::now();
  CorpusReport r = run_corpus(cfg);
  const double took = seconds_since(start);

  std::ostringstream common;
  common << r.rows.size() << " unit instances, n<=6, T<=12, <=10 requests, " << r.failures << " errors, "
         << took << " s";
  const bool healthy = r.failures == 0 && r.rows.size() >= kUnitCorpus && took < kCorpusBudgetSeconds;
  report(1, healthy && r.eq2_pass == r.rows.size(), "2*GRF + v_last >= OPT",
         ratio(r.eq2_pass, r.rows.size()) + "; " + common.str() + "; worst OPT/GRF " +
             (r.worst_ratio ? format_revenue(*r.worst_ratio) : "-"));
  report(2, healthy && r.eq3_pass == r.rows.size(), "MAX >= OPT - v_last",
         ratio(r.eq3_pass, r.rows.size()) + "; " + common.str());
  report(3, healthy && r.eq4_pass == r.rows.size(), "2*GRF >= MAX",
         ratio(r.eq4_pass, r.rows.size()) + "; " + common.str());
}

void per_step_dominance_on_saturated() {
  ExperimentConfig cfg;
  cfg.seed = 5000;
  cfg.count = kSaturatedCorpus;
  cfg.profile = profile_preset("saturated");
  cfg.workers = worker_count();
  CorpusReport r = run_corpus(cfg);
  const bool pass = r.failures == 0 && r.eq56_checked == kSaturatedCorpus && r.eq56_pass == kSaturatedCorpus;
  report(4, pass, "GRF serving step t earns >= max(MAX_{t-1}, MAX_{t-2})",
         ratio(r.eq56_pass, r.eq56_checked) + " saturated instances, " + std::to_string(r.failures) + " errors");
}

void solver_soundness() {
  std::size_t agree = 0;
  std::size_t certified = 0;
  std::string first_mismatch;
  for (std::size_t i = 0; i < kSolverCorpus; ++i) {
    Profile p = profile_preset(i % 2 == 0 ? "unit" : "weighted");
    p.requests = {0, static_cast<std::int64_t>(kSolverMaxRequests)};
    const std::uint64_t seed = 20000 + i;
    Instance inst = gen_random(seed, p);
    OptResult opt = solve_opt(inst);
    Revenue brute = oracle::brute_force_opt(inst);
    if (opt.value == brute) {
      ++agree;
    } else if (first_mismatch.empty()) {
      first_mismatch = "; first mismatch seed " + std::to_string(seed) + ": solver " + format_revenue(opt.value) +
                       " vs brute force " + format_revenue(brute);
    }
    if (verify_certificate(inst, opt.schedule).accepted()) ++certified;
  }
  report(5, agree == kSolverCorpus && certified == kSolverCorpus,
         "exact solver equals permutation brute force; every optimum schedule certified",
         ratio(agree, kSolverCorpus) + " equal, " + ratio(certified, kSolverCorpus) +
             " certified (half unit, half weighted, <=8 requests)" + first_mismatch);
}

void non_competitiveness() {
  bool pass = true;
  std::size_t rows = 0;
  std::size_t good = 0;
  std::string failure;
  for (AdversaryKind kind : {AdversaryKind::Noncompete, AdversaryKind::Preempt}) {
    for (int b : {1, 10}) {
      for (int eps : {1, 10}) {
        DuelConfig cfg;
        cfg.base = default_duel_instance(kind);
        cfg.adversary.kind = kind;
        cfg.adversary.b = Revenue(b);
        cfg.adversary.eps = Revenue(eps);
        DuelReport r = run_duel(cfg);
        for (const auto& row : r.rows) {
          ++rows;
          if (row.pass) {
            ++good;
          } else if (failure.empty()) {
            failure = "; " + std::string(to_string(kind)) + " " + row.strategy + " b=" + std::to_string(b) +
                      " eps=" + std::to_string(eps) + " gap " + format_revenue(row.gap);
          }
        }
        pass = pass && r.all_pass();
      }
    }
    for (int b : {1, 10}) {
      DuelConfig cfg;
      cfg.base = default_duel_instance(kind);
      cfg.adversary.kind = kind;
      cfg.adversary.b = Revenue(b);
      cfg.adversary.eps = Revenue(1);
      cfg.eps_sweep = {Revenue(10), Revenue(100)};
      DuelReport r = run_duel(cfg);
      const bool linear = r.linear_in_eps.value_or(false);
      if (!linear && failure.empty()) failure = "; gap not linear in eps for " + std::string(to_string(kind));
      pass = pass && linear && r.all_pass();
    }
  }
  report(6, pass, "adaptive adversary forces OPT - ON >= b + eps for every shipped strategy; gap linear in eps",
         ratio(good, rows) + " duels (noncompete and preempt, b in {1,10}, eps in {1,10}); sweep eps {1,10,100}" +
             failure);
}

void additive_bound() {
  std::size_t rows = 0;
  std::size_t good = 0;
  std::string failure;
  for (Time T = 3; T <= 12; ++T) {
    for (int b2 : {2, 100}) {
      DuelConfig cfg;
      cfg.base = default_duel_instance(AdversaryKind::Additive, T);
      cfg.adversary.kind = AdversaryKind::Additive;
      cfg.adversary.b1 = Revenue(1);
      cfg.adversary.b2 = Revenue(b2);
      DuelReport r = run_duel(cfg);
      for (const auto& row : r.rows) {
        ++rows;
        const bool ok = row.pass && !row.online_served_second && (!row.second_released || row.offline_served_second);
        if (ok) {
          ++good;
        } else if (failure.empty()) {
          failure = "; " + row.strategy + " at T=" + std::to_string(T);
        }
      }
    }
  }
  report(7, good == rows, "no online strategy serves r2 while the offline optimum does",
         ratio(good, rows) + " duels, T=3..12, all unit-graph strategies, b1=1, b2 in {2,100}" + failure);
}

void reduction_equivalence() {
  auto start = std::chrono::steady_clock::now();
  std::size_t holds = 0;
  std::size_t oracles_agree = 0;
  std::size_t yes_side = 0;
  std::size_t no_side = 0;
  std::size_t counterexamples_certified = 0;
  std::vector<std::string> samples;
  for (std::size_t i = 0; i < kTspCorpus; ++i) {
    const int n = 4 + static_cast<int>(i % 4);
    const std::uint64_t seed = 700 + i;
    TspInstance tsp = random_tsp(seed, n, n);
    EquivalenceReport r = check_equivalence(tsp);
    if (r.oracles_agree) ++oracles_agree;
    if (r.yes_at_optimum && r.witness_certified) ++yes_side;
    if (r.no_below_optimum) ++no_side;
    if (r.holds()) ++holds;
    if (r.counterexample) {
      // Re-check the witness independently of the solver.
      TspInstance below = tsp;
      below.budget = r.optimum - 1;
      if (verify_certificate(reduce_tsp(below), *r.counterexample).accepted()) ++counterexamples_certified;
      if (samples.size() < 3) {
        samples.push_back("seed " + std::to_string(seed) + " n=" + std::to_string(n) + " k*=" +
                          std::to_string(r.optimum) + ": " + r.counterexample_text);
      }
    }
  }
  const double took = seconds_since(start);
  std::ostringstream detail;
  detail << ratio(holds, kTspCorpus) << " hold; oracles agree " << ratio(oracles_agree, kTspCorpus)
         << "; yes at T=k*+1 " << ratio(yes_side, kTspCorpus) << "; no at T=k* " << ratio(no_side, kTspCorpus)
         << "; certified counterexamples " << counterexamples_certified << "; " << took << " s";
  report(8, holds == kTspCorpus && took < kTspBudgetSeconds,
         "decision(reduce(G, k*)) = yes and decision(reduce(G, k*-1)) = no", detail.str());
  for (const auto& s : samples) std::cout << "    revenue n within budget k*-1 without a tour: " << s << "\n";
}

std::map<std::string, std::string> snapshot(const fs::path& dir) {
  std::map<std::string, std::string> files;
  if (!fs::exists(dir)) return files;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    std::ifstream in(entry.path(), std::ios::binary);
    std::ostringstream bytes;
    bytes << in.rdbuf();
    files[fs::relative(entry.path(), dir).string()] = bytes.str();
  }
  return files;
}

void cli_determinism(const std::string& cli) {
  const fs::path root = fs::temp_directory_path() / "roldarp-acceptance";
  fs::remove_all(root);
  fs::create_directories(root);

  const fs::path tsp_file = root / "tsp.json";
  {
    std::ofstream out(tsp_file);
    out << tsp_to_json(random_tsp(3, 5, 5)).dump(2) << "\n";
  }

  const std::vector<std::pair<std::string, std::string>> commands{
      {"gen", "gen --seed 11 --count 5 --profile saturated"},
      {"run-unit", "run --seed 3 --count 200 --profile unit --workers 4"},
      {"run-weighted", "run --seed 3 --count 50 --profile weighted --algo opt --workers 3"},
      {"duel", "duel --adversary noncompete --b 2 --eps 1 --sweep 10,100"},
      {"duel-additive", "duel --adversary additive --T 9"},
      {"equivalence", "check-equivalence --seed 5 --count 8"},
  };
  std::size_t identical = 0;
  std::size_t total = 0;
  std::string failure;
  for (const auto& [label, args] : commands) {
    std::map<std::string, std::string> runs[2];
    for (int k = 0; k < 2; ++k) {
      const fs::path out = root / (label + "-" + std::to_string(k));
      std::string cmd = "\"" + cli + "\" " + args + " --out \"" + out.string() + "\" > /dev/null 2>&1";
      [[maybe_unused]] int rc = std::system(cmd.c_str());
      runs[k] = snapshot(out);
    }
    ++total;
    if (!runs[0].empty() && runs[0] == runs[1]) {
      ++identical;
    } else if (failure.empty()) {
      failure = "; differs: " + label;
    }
  }
  // reduce-tsp writes a single file.
  {
    std::map<std::string, std::string> runs[2];
    for (int k = 0; k < 2; ++k) {
      const fs::path out = root / ("reduce-" + std::to_string(k));
      std::string cmd = "\"" + cli + "\" reduce-tsp --in \"" + tsp_file.string() + "\" --k 9 --out \"" +
                        (out / "instance.json").string() + "\" > /dev/null 2>&1";
      [[maybe_unused]] int rc = std::system(cmd.c_str());
      runs[k] = snapshot(out);
    }
    ++total;
    if (!runs[0].empty() && runs[0] == runs[1]) {
      ++identical;
    } else if (failure.empty()) {
      failure = "; differs: reduce-tsp";
    }
  }
  fs::remove_all(root);
  report(9, identical == total, "repeated CLI invocations write byte-identical files",
         ratio(identical, total) + " invocations (gen, run, duel, check-equivalence, reduce-tsp)" + failure);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <roldarp-cli>\n";
    return 2;
  }
  try {
    corpus_inequalities();
    per_step_dominance_on_saturated();
    solver_soundness();
    non_competitiveness();
    additive_bound();
    reduction_equivalence();
    cli_determinism(argv[1]);
  } catch (const std::exception& e) {
    std::cout << "acceptance aborted: " << e.what() << "\n";
    return 2;
  }
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criterion(s) failed") << "\n";
  return failures == 0 ? 0 : 1;
}
