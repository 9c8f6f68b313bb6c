#include "lks/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <sstream>
#include <thread>

#include "lks/generators.hpp"

namespace lks {

namespace {

constexpr TreeKind kKinds[] = {TreeKind::kRandom, TreeKind::kPath, TreeKind::kCaterpillar, TreeKind::kBroom,
                               TreeKind::kStar};

std::string verdict_cell(const TrialRecord& r) { return r.oracle_run ? to_string(r.oracle) : "-"; }

}  // namespace

TrialRecord run_trial(const TrialConfig& config, int trial, std::uint64_t seed) {
  TrialRecord r;
  r.trial = trial;
  r.seed = seed * 1000003ULL + static_cast<std::uint64_t>(trial);
  std::mt19937_64 rng(r.seed);
  auto pick = [&](Vertex lo, Vertex hi) { return lo + static_cast<Vertex>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
  const Rational& eps = config.schedule.eps;
  r.k = pick(config.k_min, config.k_max);
  const auto need = static_cast<Vertex>(ceil_int((1 + eps) * r.k));
  r.n = pick(std::max(config.n_min, need + 3), std::max(config.n_max, need + 3));
  const bool dense = config.dense_every > 0 && trial % config.dense_every == config.dense_every - 1;
  r.host = dense ? "dense" : "lks-host";
  const TreeKind kind = kKinds[trial % 5];
  r.tree_kind = to_string(kind);

  Graph g;
  for (std::uint64_t attempt = 0;; ++attempt) {
    const std::uint64_t s = r.seed + attempt * 7919;
    const double p = 0.1 + 0.3 * static_cast<double>(rng() % 1000) / 1000.0;
    g = dense ? gen_random_min_degree(r.n, need, p, s) : gen_lks_host(r.n, r.k, eps, p, s);
    const Census c = lks_degree_census(g, r.k, eps);
    r.census_big = c.count_big;
    r.census_ok = c.satisfies;
    if (c.satisfies || attempt >= 16) break;
  }
  const RootedTree t = gen_tree(kind, r.k, r.seed);

  const EmbedOutcome out = embed_tree(g, t, r.k, config.schedule);
  r.success = out.success;
  r.fast_path = out.fast_path;
  r.breach = out.soundness_breach;
  r.valid = out.success && validate_embedding(g, t, out.state).pass;
  if (out.failure) {
    r.stage = out.failure->stage;
    r.reason = out.failure->reason;
  }
  r.hub_calls = out.trace.hub.size();
  for (const HubCheck& h : out.trace.hub) r.hub_violations += h.holds ? 0 : 1;
  r.strategy_counts = embedding_to_json(out.state, r.valid).at("strategy_log").at("counts");
  if (!out.success && config.oracle) {
    r.oracle_run = true;
    r.oracle = oracle_contains(g, t, config.oracle_cap).verdict;
  }
  return r;
}

std::vector<TrialRecord> run_trials(const TrialConfig& config, int count, std::uint64_t seed, unsigned threads) {
  std::vector<TrialRecord> out(static_cast<std::size_t>(std::max(count, 0)));
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < threads; ++i) {
    pool.emplace_back([&] {
      for (int t = next++; t < count; t = next++) out[t] = run_trial(config, t, seed);
    });
  }
  for (auto& th : pool) th.join();
  return out;
}

std::string trials_csv_header() {
  return "trial,seed,n,k,host,tree,census_big,census_ok,success,fast_path,valid,breach,stage,oracle,hub_calls,"
         "hub_violations\n";
}

std::string trial_csv_row(const TrialRecord& r) {
  std::ostringstream os;
  os << r.trial << ',' << r.seed << ',' << r.n << ',' << r.k << ',' << r.host << ',' << r.tree_kind << ','
     << r.census_big << ',' << r.census_ok << ',' << r.success << ',' << r.fast_path << ',' << r.valid << ','
     << r.breach << ',' << (r.stage.empty() ? "-" : r.stage) << ',' << verdict_cell(r) << ',' << r.hub_calls << ','
     << r.hub_violations << '\n';
  return os.str();
}

}  // namespace lks
