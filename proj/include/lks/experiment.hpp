#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "lks/embedding.hpp"
#include "lks/schedule.hpp"

namespace lks {

// Random end-to-end trials: a host satisfying the (1+eps) census, a random
// tree with k edges, embed_tree, and the oracle on every failure.
struct TrialConfig {
  Vertex n_min = 30;
  Vertex n_max = 60;
  Vertex k_min = 4;
  Vertex k_max = 12;
  int dense_every = 4;  // every dense_every-th trial uses a min-degree (1+eps)k host
  ConstantSchedule schedule;
  bool oracle = true;
  std::chrono::milliseconds oracle_cap{10000};
};

struct TrialRecord {
  int trial = 0;
  std::uint64_t seed = 0;
  Vertex n = 0;
  Vertex k = 0;
  std::string host;       // "lks-host" or "dense"
  std::string tree_kind;
  std::size_t census_big = 0;
  bool census_ok = false;
  bool success = false;
  bool fast_path = false;
  bool valid = false;     // validate_embedding on the returned state
  bool breach = false;
  std::string stage;      // failure stage, empty on success
  std::string reason;
  bool oracle_run = false;
  OracleVerdict oracle = OracleVerdict::kNo;
  std::size_t hub_calls = 0;
  std::size_t hub_violations = 0;
  Json strategy_counts;
};

// Deterministic in (config, trial, seed).
TrialRecord run_trial(const TrialConfig& config, int trial, std::uint64_t seed);

// Trials 0..count-1 on `threads` workers, returned in trial order.
std::vector<TrialRecord> run_trials(const TrialConfig& config, int count, std::uint64_t seed, unsigned threads = 0);

std::string trials_csv_header();
std::string trial_csv_row(const TrialRecord& r);

}  // namespace lks
