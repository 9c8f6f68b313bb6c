// lks: command-line front end for the decomposition and embedding pipeline.
//
// Exit codes: 0 pass, 1 verification failed, 2 input error, 3 pipeline
// error, 4 an invalid embedding was produced.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lks/decomposition.hpp"
#include "lks/embedding.hpp"
#include "lks/experiment.hpp"
#include "lks/generators.hpp"
#include "lks/io.hpp"
#include "lks/regularity.hpp"
#include "lks/schedule.hpp"
#include "lks/tree_partition.hpp"

namespace {

using namespace lks;

enum Exit { kPass = 0, kVerifyFail = 1, kInput = 2, kPipeline = 3, kBreach = 4 };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  Vertex k = -1;
  std::optional<std::string> eps, tau, gamma, rho, beta, eta;
  std::vector<std::string> sets;  // name=value
  bool figure2 = false;
  std::string spots = "ball";
  std::uint64_t seed = 0;
  long long time_cap = 10000;  // ms
  int budget = 20;
  bool oracle = false;
  std::string out = "-";
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--k", c.k, "tree edge count k");
  sub->add_option("--eps", c.eps, "override eps (rational or decimal)");
  sub->add_option("--tau", c.tau, "override tau");
  sub->add_option("--gamma", c.gamma, "override gamma");
  sub->add_option("--rho", c.rho, "override rho");
  sub->add_option("--beta", c.beta, "override beta");
  sub->add_option("--eta", c.eta, "override eta");
  sub->add_option("--set", c.sets, "override any constant, name=value");
  sub->add_flag("--figure2-schedule", c.figure2, "start from the small-eps Figure 2 schedule");
  sub->add_option("--spots", c.spots, "dense-spot search order: ball or star")->check(CLI::IsMember({"ball", "star"}));
  sub->add_option("--seed", c.seed, "random seed");
  sub->add_option("--time-cap", c.time_cap, "oracle time cap in milliseconds");
  sub->add_option("--budget", c.budget, "regularization rounds per matching");
  sub->add_flag("--oracle", c.oracle, "cross-check with the exact containment oracle");
  sub->add_option("--out", c.out, "output file, - for stdout");
}

ConstantSchedule schedule_of(const Common& c) {
  ConstantSchedule s = c.figure2 ? figure2_schedule() : ConstantSchedule{};
  try {
    const std::pair<const char*, const std::optional<std::string>*> named[] = {
        {"eps", &c.eps}, {"tau", &c.tau}, {"gamma", &c.gamma}, {"rho", &c.rho}, {"beta", &c.beta}, {"eta", &c.eta}};
    for (const auto& [name, value] : named) {
      if (*value) set_constant(s, name, parse_rational(**value));
    }
    for (const std::string& kv : c.sets) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw InputError("--set expects name=value, got " + kv);
      set_constant(s, kv.substr(0, eq), parse_rational(kv.substr(eq + 1)));
    }
    validate_schedule(s);
  } catch (const Error& e) {
    throw InputError(e.what());
  }
  return s;
}

// The partition's tau is free of the schedule relations.
Rational tree_tau(const Common& c) {
  if (!c.tau) return ConstantSchedule{}.tau;
  try {
    return parse_rational(*c.tau);
  } catch (const Error& e) {
    throw InputError(e.what());
  }
}

DecomposeOptions decompose_options(const Common& c) {
  DecomposeOptions o;
  o.spot_search = c.spots == "star" ? SpotSearch::kStarFirst : SpotSearch::kBallFirst;
  o.regularize.budget = c.budget;
  o.regularize.seed = c.seed;
  return o;
}

Vertex require_k(const Common& c) {
  if (c.k < 1) throw InputError("--k is required and must be positive");
  return c.k;
}

// Any failure to read or parse an input file is an input error.
template <class F>
auto load(const std::string& what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(what + ": " + e.what());
  }
}

Graph load_graph(const std::string& path) {
  return load("graph " + path, [&] { return graph_from_json(read_json_file(path)); });
}

RootedTree load_tree(const std::string& path) {
  return load("tree " + path, [&] { return tree_from_json(read_json_file(path)); });
}

void emit(const Common& c, const Json& j) { write_text_file(c.out, j.dump(2) + "\n"); }

// Human summary next to machine output: stdout when the JSON goes to a file.
std::ostream& summary(const Common& c) { return c.out == "-" ? std::cerr : std::cout; }

Json violations_json(const std::vector<std::pair<std::string, std::string>>& v) {
  Json out = Json::array();
  for (const auto& [item, witness] : v) out.push_back({{"item", item}, {"witness", witness}});
  return out;
}

int report(const Common& c, const std::string& kind, const std::vector<std::pair<std::string, std::string>>& v) {
  emit(c, {{"kind", kind}, {"pass", v.empty()}, {"violations", violations_json(v)}});
  for (const auto& [item, witness] : v) summary(c) << "violation (" << item << "): " << witness << "\n";
  summary(c) << kind << ": " << (v.empty() ? "pass" : "FAIL") << "\n";
  return v.empty() ? kPass : kVerifyFail;
}

// ---------------------------------------------------------------- generate

struct GenerateArgs {
  std::string name;
  Vertex n = 0, a = 0, b = 0, m = 0;
  double p = 0.3;
  std::string kind = "random";
  std::vector<Vertex> offsets;
};

int cmd_generate(const GenerateArgs& ga, const Common& c) {
  const Rational eps = schedule_of(c).eps;
  auto need_k = [&] { return require_k(c); };
  auto need_n = [&] {
    if (ga.n < 1) throw InputError("--n is required and must be positive");
    return ga.n;
  };
  Json out;
  std::optional<Graph> g;
  try {
    if (ga.name == "extremal-lks") {
      g = gen_extremal_lks(need_k());
    } else if (ga.name == "figure2") {
      const Figure2Instance f = gen_figure2(need_n(), need_k(), c.seed);
      g = f.graph;
      out = graph_to_json(*g);
      out["meta"] = {{"big", f.big},
                     {"small", f.small},
                     {"big_big_degree", f.big_big_degree},
                     {"big_small_degree", f.big_small_degree},
                     {"small_big_degree", f.small_big_degree},
                     {"block_construction", f.block_construction}};
    } else if (ga.name == "tree") {
      const RootedTree t = gen_tree(parse_tree_kind(ga.kind), need_k(), c.seed);
      emit(c, tree_to_json(t));
      summary(c) << "tree: " << ga.kind << " with " << t.num_edges() << " edges\n";
      return kPass;
    } else if (ga.name == "gnp") {
      g = gen_gnp(need_n(), ga.p, c.seed);
    } else if (ga.name == "min-degree") {
      g = gen_random_min_degree(need_n(), need_k(), ga.p, c.seed);
    } else if (ga.name == "lks-host") {
      g = gen_lks_host(need_n(), need_k(), eps, ga.p, c.seed);
    } else if (ga.name == "empty") {
      g = Graph(need_n(), std::vector<Edge>{});
    } else if (ga.name == "complete") {
      g = complete_graph(need_n());
    } else if (ga.name == "complete-bipartite") {
      g = complete_bipartite(ga.a, ga.b);
    } else if (ga.name == "half-split") {
      g = gen_half_split(ga.m);
    } else if (ga.name == "circulant") {
      g = circulant(need_n(), ga.offsets);
    } else {
      throw InputError("unknown generator " + ga.name);
    }
  } catch (const Error& e) {
    throw InputError(e.what());
  }
  if (out.is_null()) out = graph_to_json(*g);
  emit(c, out);
  std::ostream& os = summary(c);
  os << "graph: n=" << g->n() << " m=" << g->num_edges() << "\n";
  if (c.k >= 1) {
    std::size_t at_k = 0;
    for (Vertex v = 0; v < g->n(); ++v) at_k += g->degree(v) >= static_cast<std::size_t>(c.k) ? 1 : 0;
    const Census census = lks_degree_census(*g, c.k, eps);
    os << "census: " << at_k << " vertices of degree >= " << c.k << "; " << census.count_big
       << " of degree >= (1+" << to_string(eps) << ")k; (1+eps) condition " << (census.satisfies ? "holds" : "fails")
       << "\n";
  }
  return kPass;
}

// ---------------------------------------------------------------- decompose

int cmd_decompose(const std::string& path, const std::string& dot, const Common& c) {
  const Graph g = load_graph(path);
  const Vertex k = require_k(c);
  const ConstantSchedule s = schedule_of(c);
  SparseDecomposition d;
  try {
    d = decompose(g, k, s, decompose_options(c));
  } catch (const Error& e) {
    std::cerr << "error: stage decompose: " << e.what() << "\n";
    return kPipeline;
  }
  const AuditReport audit = audit_decomposition(g, d);
  VertexList big;
  const auto threshold = (1 + d.schedule.eps) * k;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (Rational(static_cast<long long>(g.degree(v))) >= threshold) big.push_back(v);
  }
  const auto in_small = indicator(g.n(), d.cells.small_cells);
  const bool covered = std::all_of(big.begin(), big.end(), [&](Vertex v) { return in_small[v] != 0; });
  Json j{{"decomposition", decomposition_to_json(d)},
         {"audit", {{"pass", audit.pass}, {"violations", audit.violations}}},
         {"summary",
          {{"psi", d.psi.size()},
           {"spots", d.spots.size()},
           {"expander_vertices", d.expander.vertices.size()},
           {"small_cell_vertices", d.cells.small_cells.size()},
           {"regular_pairs", d.reg.pairs.size()},
           {"big_vertices", big.size()},
           {"small_cells_cover_big", covered}}}};
  emit(c, j);
  if (!dot.empty()) write_text_file(dot, cell_graph_to_dot(d.cell_graph));
  std::ostream& os = summary(c);
  os << "psi " << d.psi.size() << ", spots " << d.spots.size() << ", G_exp " << d.expander.vertices.size()
     << " vertices, small cells " << d.cells.small_cells.size() << " vertices, regular pairs " << d.reg.pairs.size()
     << "\n";
  os << "big vertices " << big.size() << (covered ? " all" : " not all") << " inside small cells\n";
  for (const auto& v : audit.violations) os << "audit: " << v << "\n";
  os << "audit " << (audit.pass ? "pass" : "FAIL") << "\n";
  return audit.pass ? kPass : kVerifyFail;
}

// ---------------------------------------------------------------- partition

int cmd_partition(const std::string& path, const Common& c) {
  const RootedTree t = load_tree(path);
  const Vertex k = c.k >= 1 ? c.k : static_cast<Vertex>(t.num_edges());
  const Rational tau = tree_tau(c);
  TreePartition p;
  try {
    p = partition_tree(t, tau, k);
  } catch (const Error& e) {
    std::cerr << "error: stage partition: " << e.what() << "\n";
    return e.code() == "edge-count" || e.code() == "bad-tau" ? kInput : kPipeline;
  }
  const PartitionReport r = check_partition(t, p, tau, k);
  Json j = partition_to_json(p);
  j["check"] = {{"pass", r.pass}};
  emit(c, j);
  summary(c) << "W_A " << p.w_a.size() << ", W_B " << p.w_b.size() << ", T_A " << p.trees_a.size() << ", T_B "
             << p.trees_b.size() << "; check " << (r.pass ? "pass" : "FAIL") << "\n";
  return r.pass ? kPass : kVerifyFail;
}

// ---------------------------------------------------------------- structure

int cmd_structure(const std::string& path, std::optional<std::size_t> cut, const Common& c) {
  const Graph g = load_graph(path);
  const Vertex k = require_k(c);
  const ConstantSchedule s = schedule_of(c);
  SparseDecomposition d;
  try {
    d = decompose(g, k, s, decompose_options(c));
  } catch (const Error& e) {
    std::cerr << "error: stage decompose: " << e.what() << "\n";
    return kPipeline;
  }
  StructureOptions so;
  so.cut_degree = cut;
  const StructureResult r = find_global_structure(g, d, k, d.schedule, so);
  if (!r.structure) {
    emit(c, {{"found", false}, {"reason", r.reason}, {"trace", r.trace}});
    std::cerr << "error: stage structure: " << r.reason << "\n";
    return kPipeline;
  }
  const StructureReport v = verify_global_structure(g, d, *r.structure, k, d.schedule);
  Json vj = Json::array();
  for (const auto& x : v.violations) vj.push_back({{"item", x.item}, {"witness", x.witness}});
  emit(c, {{"found", true}, {"structure", structure_to_json(*r.structure)}, {"verify", {{"pass", v.pass}, {"violations", vj}}}});
  const GlobalStructure& gs = *r.structure;
  summary(c) << "L " << gs.big_l.size() << ", X " << gs.x_set.size() << ", Y " << gs.y_set.size() << ", M "
             << gs.matching.size() << " pairs, Q " << gs.q_set.size() << ", cut degree " << gs.cut_degree
             << "; verify " << (v.pass ? "pass" : "FAIL") << "\n";
  return v.pass ? kPass : kVerifyFail;
}

// ---------------------------------------------------------------- embed

std::string verdict_word(OracleVerdict v) {
  switch (v) {
    case OracleVerdict::kYes: return "contained";
    case OracleVerdict::kNo: return "not-contained";
    case OracleVerdict::kTimeout: return "timeout";
  }
  return "timeout";
}

struct BatchArgs {
  int trials = 0;
  Vertex n_min = 30, n_max = 60, k_min = 4, k_max = 12;
  unsigned threads = 0;
};

int cmd_embed_batch(const BatchArgs& b, const Common& c) {
  TrialConfig cfg;
  cfg.schedule = schedule_of(c);
  cfg.n_min = b.n_min;
  cfg.n_max = b.n_max;
  cfg.k_min = b.k_min;
  cfg.k_max = b.k_max;
  cfg.oracle = c.oracle;
  cfg.oracle_cap = std::chrono::milliseconds(c.time_cap);
  if (cfg.k_min < 1 || cfg.k_max < cfg.k_min || cfg.n_max < cfg.n_min) throw InputError("bad --n/--k ranges");
  const auto records = run_trials(cfg, b.trials, c.seed, b.threads);
  std::string csv = trials_csv_header();
  int success = 0, fast = 0, breach = 0, yes = 0, no = 0, timeout = 0;
  for (const auto& r : records) {
    csv += trial_csv_row(r);
    success += r.success;
    fast += r.fast_path && r.success;
    breach += r.breach || (r.success && !r.valid);
    if (r.oracle_run) {
      yes += r.oracle == OracleVerdict::kYes;
      no += r.oracle == OracleVerdict::kNo;
      timeout += r.oracle == OracleVerdict::kTimeout;
    }
  }
  write_text_file(c.out, csv);
  summary(c) << b.trials << " trials: " << success << " embedded (" << fast << " by the min-degree fast path), "
             << breach << " invalid; oracle on failures: " << yes << " contained, " << no << " not contained, "
             << timeout << " timeouts\n";
  return breach > 0 ? kBreach : kPass;
}

int cmd_embed(const std::string& gpath, const std::string& tpath, const Common& c) {
  const Graph g = load_graph(gpath);
  const RootedTree t = load_tree(tpath);
  const Vertex k = c.k >= 1 ? c.k : static_cast<Vertex>(t.num_edges());
  if (t.num_edges() != static_cast<std::size_t>(k)) throw InputError("tree does not have k edges");
  const ConstantSchedule s = schedule_of(c);
  EmbedOptions opt;
  opt.decompose = decompose_options(c);
  const EmbedOutcome r = embed_tree(g, t, k, s, opt);
  const bool valid = r.success && validate_embedding(g, t, r.state).pass;
  Json j = embedding_to_json(r.state, valid);
  j["outcome"] = r.success ? "success" : "failure";
  j["fast_path"] = r.fast_path;
  if (r.failure) j["failure"] = failure_to_json(*r.failure);
  Json hubs = Json::array();
  for (const HubCheck& h : r.trace.hub) hubs.push_back(hub_check_to_json(h));
  j["hub_checks"] = hubs;
  std::optional<OracleVerdict> verdict;
  if (c.oracle) {
    const OracleResult o = oracle_contains(g, t, std::chrono::milliseconds(c.time_cap));
    verdict = o.verdict;
    j["oracle"] = {{"verdict", verdict_word(o.verdict)}, {"nodes", o.nodes}};
  }
  emit(c, j);
  std::ostream& os = summary(c);
  if (r.success) {
    os << "embedded" << (r.fast_path ? " (min-degree fast path)" : "") << "\n";
  } else {
    os << "embedding failed at stage " << r.failure->stage << ": " << r.failure->reason << "\n";
  }
  if (verdict) os << "oracle: " << verdict_word(*verdict) << "\n";
  if (r.soundness_breach || (r.success && !valid)) {
    std::cerr << "error: produced embedding is invalid\n";
    return kBreach;
  }
  if (r.success) return kPass;
  return verdict && *verdict != OracleVerdict::kTimeout ? kPass : kPipeline;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const std::string& kind, const std::string& path, const std::string& gpath, const std::string& tpath,
               const Common& c) {
  const Json j = load("artifact " + path, [&] { return read_json_file(path); });
  std::vector<std::pair<std::string, std::string>> v;
  if (kind == "partition") {
    if (tpath.empty()) throw InputError("--tree is required for partition");
    const RootedTree t = load_tree(tpath);
    const TreePartition p = load("partition", [&] { return partition_from_json(j); });
    const Vertex k = c.k >= 1 ? c.k : static_cast<Vertex>(t.num_edges());
    for (const auto& x : check_partition(t, p, tree_tau(c), k).violations) v.emplace_back(x.item, x.witness);
  } else if (kind == "structure") {
    if (gpath.empty()) throw InputError("--graph is required for structure");
    const Graph g = load_graph(gpath);
    const Vertex k = require_k(c);
    const GlobalStructure gs = load("structure", [&] { return structure_from_json(j.contains("structure") ? j.at("structure") : j); });
    const SparseDecomposition d = decompose(g, k, schedule_of(c), decompose_options(c));
    for (const auto& x : verify_global_structure(g, d, gs, k, d.schedule).violations) v.emplace_back(x.item, x.witness);
  } else if (kind == "embedding") {
    if (gpath.empty() || tpath.empty()) throw InputError("--graph and --tree are required for embedding");
    const Graph g = load_graph(gpath);
    const RootedTree t = load_tree(tpath);
    const EmbeddingState st = load("embedding", [&] { return embedding_from_json(j, g.n()); });
    for (const auto& line : validate_embedding(g, t, st).violations) {
      const auto colon = line.find(": ");
      v.emplace_back(line.substr(0, colon), line.substr(colon + 2));
    }
  } else if (kind == "decomposition") {
    if (gpath.empty()) throw InputError("--graph is required for decomposition");
    const Graph g = load_graph(gpath);
    const SparseDecomposition d =
        load("decomposition", [&] { return decomposition_from_json(j.contains("decomposition") ? j.at("decomposition") : j); });
    for (const auto& line : audit_decomposition(g, d).violations) v.emplace_back("audit", line);
  }
  return report(c, kind, v);
}

// ---------------------------------------------------------------- regcheck

VertexList parse_list(const std::string& text) {
  VertexList out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto dash = item.find('-');
    try {
      if (dash != std::string::npos && dash > 0) {
        for (Vertex v = std::stoi(item.substr(0, dash)); v <= std::stoi(item.substr(dash + 1)); ++v) out.push_back(v);
      } else if (!item.empty()) {
        out.push_back(std::stoi(item));
      }
    } catch (const std::exception&) {
      throw InputError("bad vertex list " + text);
    }
  }
  return out;
}

int cmd_regcheck(const std::string& path, const std::string& a, const std::string& b, const std::string& mode,
                 int samples, const Common& c) {
  const Graph g = load_graph(path);
  const Rational eta = schedule_of(c).eta;
  RegOptions o;
  o.mode = mode == "sampled" ? RegMode::kSampled : mode == "certificate" ? RegMode::kCertificate : RegMode::kExact;
  o.samples = samples;
  o.seed = c.seed;
  const BipartitePair pair = load("pair", [&] { return BipartitePair(g, parse_list(a), parse_list(b)); });
  RegularityVerdict r;
  try {
    r = check_regular_pair(pair, eta, o);
  } catch (const Error& e) {
    std::cerr << "error: stage regcheck: " << e.what() << "\n";
    return kPipeline;
  }
  emit(c, verdict_to_json(r));
  summary(c) << "density " << to_string(r.pair_density) << ", " << (r.regular ? "regular" : "not regular") << " ("
             << to_string(r.method) << ", eta " << to_string(eta) << ")\n";
  return r.regular ? kPass : kVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sparse decomposition and tree embedding toolkit"};
  app.require_subcommand(1);
  Common c;

  GenerateArgs ga;
  auto* gen = app.add_subcommand("generate", "write a generated graph or tree as JSON");
  gen->add_option("name", ga.name,
                  "extremal-lks, figure2, tree, gnp, min-degree, lks-host, empty, complete, complete-bipartite, half-split, "
                  "circulant")
      ->required();
  gen->add_option("--n", ga.n, "vertex count");
  gen->add_option("--p", ga.p, "edge probability");
  gen->add_option("--kind", ga.kind, "tree kind: path, star, caterpillar, broom, random");
  gen->add_option("--a", ga.a, "first side (complete-bipartite)");
  gen->add_option("--b", ga.b, "second side (complete-bipartite)");
  gen->add_option("--m", ga.m, "side size (half-split)");
  gen->add_option("--offsets", ga.offsets, "circulant offsets")->delimiter(',');
  add_common(gen, c);

  std::string graph_path, tree_path, dot_path;
  auto* dec = app.add_subcommand("decompose", "sparse decomposition report; exit 0 iff the audit passes");
  dec->add_option("graph", graph_path)->required();
  dec->add_option("--dot", dot_path, "write the cell graph as DOT");
  add_common(dec, c);

  auto* part = app.add_subcommand("partition", "partition a tree around a cut set");
  part->add_option("tree", tree_path)->required();
  add_common(part, c);

  std::optional<std::size_t> cut;
  auto* st = app.add_subcommand("structure", "search and verify the global structure (X, Y, M)");
  st->add_option("graph", graph_path)->required();
  st->add_option("--cut-degree", cut, "mutual X/Y degree threshold (default 100/tau)");
  add_common(st, c);

  BatchArgs batch;
  auto* emb = app.add_subcommand("embed", "embed a tree, or run --trials random instances to CSV");
  emb->add_option("graph", graph_path);
  emb->add_option("tree", tree_path);
  emb->add_option("--trials", batch.trials, "batch mode: number of random instances");
  emb->add_option("--n-min", batch.n_min);
  emb->add_option("--n-max", batch.n_max);
  emb->add_option("--k-min", batch.k_min);
  emb->add_option("--k-max", batch.k_max);
  emb->add_option("--threads", batch.threads, "batch workers (default: all cores)");
  add_common(emb, c);

  std::string kind, artifact;
  auto* ver = app.add_subcommand("verify", "check an artifact file");
  ver->add_option("artifact", artifact)->required();
  ver->add_option("--kind", kind)->required()->check(CLI::IsMember({"partition", "structure", "embedding", "decomposition"}));
  ver->add_option("--graph", graph_path);
  ver->add_option("--tree", tree_path);
  add_common(ver, c);

  std::string side_a, side_b, mode = "exact";
  int samples = 500;
  auto* reg = app.add_subcommand("regcheck", "eta-regularity of a bipartite pair");
  reg->add_option("graph", graph_path)->required();
  reg->add_option("--a", side_a, "first side, e.g. 0-5,9")->required();
  reg->add_option("--b", side_b, "second side")->required();
  reg->add_option("--mode", mode)->check(CLI::IsMember({"exact", "sampled", "certificate"}));
  reg->add_option("--samples", samples);
  add_common(reg, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kPass : kInput;
  }

  try {
    if (gen->parsed()) return cmd_generate(ga, c);
    if (dec->parsed()) return cmd_decompose(graph_path, dot_path, c);
    if (part->parsed()) return cmd_partition(tree_path, c);
    if (st->parsed()) return cmd_structure(graph_path, cut, c);
    if (emb->parsed()) {
      if (batch.trials > 0) return cmd_embed_batch(batch, c);
      if (graph_path.empty() || tree_path.empty()) throw InputError("embed needs a graph and a tree, or --trials");
      return cmd_embed(graph_path, tree_path, c);
    }
    if (ver->parsed()) return cmd_verify(kind, artifact, graph_path, tree_path, c);
    if (reg->parsed()) return cmd_regcheck(graph_path, side_a, side_b, mode, samples, c);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == "schema" ? kInput : kPipeline;
  }
  return kInput;
}
