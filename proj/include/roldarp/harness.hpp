#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "roldarp/adversary.hpp"
#include "roldarp/io.hpp"
#include "roldarp/offline.hpp"
#include "roldarp/strategies.hpp"

namespace roldarp {

struct ExperimentConfig {
  std::uint64_t seed = 1;
  std::size_t count = 100;
  Profile profile;
  // Any of "grf", "max", "opt"; the inequality verdicts need all three.
  std::vector<std::string> algorithms{"grf", "max", "opt"};
  std::size_t workers = 1;
  SolveOptions solve;
};

void validate_config(const ExperimentConfig& cfg);

struct InstanceResult {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  Instance instance;
  std::string error;

  std::optional<Revenue> grf;
  std::optional<Revenue> max;
  std::optional<Revenue> opt;
  Revenue v_last{0};

  // 2 GRF + v_last >= OPT, MAX >= OPT - v_last, 2 GRF >= MAX, and the per
  // serving-step dominance of GRF over the two MAX slots it covers.
  std::optional<bool> eq2;
  std::optional<bool> eq3;
  std::optional<bool> eq4;
  std::optional<bool> eq56;

  std::vector<Revenue> grf_trace;
  std::vector<Revenue> max_trace;
  std::optional<Schedule> grf_schedule;
  std::optional<Schedule> max_schedule;
  std::optional<Schedule> opt_schedule;
  SearchStats opt_stats;

  bool passed() const;
};

// Per-step check: every GRF serving slot t earns at least max(v_{t-1},
// v_{t-2}) of the MAX trace (missing slots count as 0).
bool per_step_dominance(const std::vector<Revenue>& grf_by_time, const std::vector<Revenue>& max_trace,
                        Time time_limit);

InstanceResult evaluate_instance(const Instance& inst, const std::vector<std::string>& algorithms,
                                 const SolveOptions& solve);

struct CorpusReport {
  std::vector<InstanceResult> rows;
  std::size_t failures = 0;  // rows with an error
  std::size_t eq2_pass = 0, eq3_pass = 0, eq4_pass = 0, eq56_pass = 0;
  std::size_t eq2_checked = 0, eq3_checked = 0, eq4_checked = 0, eq56_checked = 0;
  // Largest OPT/GRF over rows with GRF > 0.
  std::optional<Revenue> worst_ratio;

  bool all_pass() const;
};

CorpusReport summarize(std::vector<InstanceResult> rows);

// Instance i uses seed cfg.seed + i. Rows come back in index order.
CorpusReport run_corpus(const ExperimentConfig& cfg);

// Evaluates given instances (e.g. loaded from files).
CorpusReport run_instances(const std::vector<Instance>& instances, const ExperimentConfig& cfg);

struct DuelConfig {
  Instance base;  // graph, T and preemption; its requests are kept
  AdversaryConfig adversary;
  std::vector<std::string> strategies;
  // Extra eps values to sweep (the config's eps is always included first).
  std::vector<Revenue> eps_sweep;
  SolveOptions solve;
};

struct DuelRow {
  std::string strategy;
  Revenue eps{0};
  AdversaryParams params;
  Revenue online{0};
  Revenue offline{0};
  Revenue gap{0};
  bool second_released = false;
  bool online_served_second = false;
  bool offline_served_second = false;
  bool pass = false;
  Instance realized;
  Schedule online_schedule;
  Schedule offline_schedule;
};

struct DuelReport {
  AdversaryKind kind = AdversaryKind::Noncompete;
  std::vector<DuelRow> rows;
  // Per strategy: gaps across the eps sweep lie on a line with positive slope
  // (only set when at least three eps values were run).
  std::optional<bool> linear_in_eps;

  bool all_pass() const;
};

DuelReport run_duel(const DuelConfig& cfg);

// Graph and horizon the duel runs on when no base instance is supplied.
Instance default_duel_instance(AdversaryKind kind, Time time_limit = 10);

std::string summary_csv(const CorpusReport& report);
Json detail_json(const CorpusReport& report);
Json duel_json(const DuelReport& report);

// Writes summary.csv and detail.json into `dir`.
void emit_report(const CorpusReport& report, const std::filesystem::path& dir);

// Rebuilds a report from a detail.json written by emit_report; the verdicts
// are recomputed from the stored values.
CorpusReport report_from_detail(const Json& detail);

std::string format_ratio(const std::optional<Revenue>& grf, const std::optional<Revenue>& opt);

}  // namespace roldarp
