// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "lks/decomposition.hpp"
#include "lks/embedding.hpp"
#include "lks/experiment.hpp"
#include "lks/generators.hpp"
#include "lks/regularity.hpp"
#include "lks/tree_partition.hpp"

namespace {

using namespace lks;
using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& why) {
    if (!ok && pass) detail << "first failure: " << why << "; ";
    pass = pass && ok;
  }
};

VertexList range(Vertex from, Vertex to) {
  VertexList out(to - from);
  std::iota(out.begin(), out.end(), from);
  return out;
}

RootedTree path_tree(Vertex k) { return gen_tree(TreeKind::kPath, k); }

// ---------------------------------------------------------------- 1

void criterion1(Verdict& v) {
  for (Vertex k : {3, 7, 9, 11}) {
    const Graph g = gen_extremal_lks(k);
    std::size_t at_k = 0;
    for (Vertex x = 0; x < g.n(); ++x) at_k += g.degree(x) == static_cast<std::size_t>(k) ? 1 : 0;
    const std::size_t expected = static_cast<std::size_t>(g.n() / 2 - 1);
    v.require(g.n() % 2 == 0 && at_k == expected,
              "k=" + std::to_string(k) + " has " + std::to_string(at_k) + " vertices of degree k, expected " + std::to_string(expected));
    const OracleResult o = oracle_contains(g, path_tree(k));
    v.require(o.verdict == OracleVerdict::kNo, "oracle does not answer NO for the path at k=" + std::to_string(k));
    v.detail << "k=" << k << ": n=" << g.n() << ", " << at_k << " of degree k, path " << to_string(o.verdict) << "; ";
  }
}

// ---------------------------------------------------------------- 2

void criterion2(Verdict& v) {
  std::vector<RootedTree> trees;
  for (Vertex order = 2; order <= 9; ++order) {
    for (auto& t : all_free_trees(order)) trees.push_back(std::move(t));
  }
  std::size_t on_nine = all_free_trees(9).size();
  std::size_t pairs = 0, greedy_ok = 0, oracle_ok = 0;
  for (int h = 0; h < 200; ++h) {
    std::mt19937_64 rng(1000 + h);
    const Vertex d = 1 + static_cast<Vertex>(rng() % 8);
    const Vertex n = std::max<Vertex>(d + 1, 10 + static_cast<Vertex>(rng() % 31));
    const Graph g = gen_random_min_degree(n, d, 0.05 * static_cast<double>(rng() % 5), 1000 + h);
    v.require(g.min_degree() >= static_cast<std::size_t>(d), "host below its min degree");
    for (const RootedTree& t : trees) {
      const auto k = static_cast<Vertex>(t.num_edges());
      if (k > d) continue;
      ++pairs;
      const GreedyResult gr = embed_greedy_min_degree(g, t, k);
      greedy_ok += gr.ok && validate_embedding(g, t, gr.state).pass ? 1 : 0;
      const OracleResult o = oracle_contains(g, t);
      if (o.verdict == OracleVerdict::kYes) {
        const auto st = EmbeddingState::from_parts(o.mapping, [&] {
          std::vector<char> used(g.n(), 0);
          for (Vertex x : o.mapping) used[x] = 1;
          return used;
        }(), std::vector<Tag>(t.n(), Tag::kGreedy));
        oracle_ok += validate_embedding(g, t, st).pass ? 1 : 0;
      }
    }
  }
  v.require(greedy_ok == pairs, "greedy failed on " + std::to_string(pairs - greedy_ok) + " pairs");
  v.require(oracle_ok == pairs, "oracle disagreed on " + std::to_string(pairs - oracle_ok) + " pairs");
  v.detail << trees.size() << " trees with 2..9 vertices (" << on_nine << " on 9), 200 hosts, " << pairs
           << " pairs with k <= min degree: greedy " << greedy_ok << "/" << pairs << ", oracle " << oracle_ok << "/"
           << pairs << "; ";
}

// ---------------------------------------------------------------- 3

void criterion3(Verdict& v) {
  const Rational taus[] = {Rational(1, 20), Rational(1, 10), Rational(1, 4)};
  std::size_t checked = 0, skipped = 0, passed = 0;
  std::size_t max_w = 0;
  for (int i = 0; i < 1000; ++i) {
    std::mt19937_64 rng(5000 + i);
    const Vertex k = 20 + static_cast<Vertex>(rng() % 181);
    const Rational& tau = taus[i % 3];
    if (tau * k < 2) {
      ++skipped;
      continue;
    }
    const RootedTree t = gen_tree(static_cast<TreeKind>(rng() % 5), k, 5000 + i);
    const TreePartition p = partition_tree(t, tau, k);
    const PartitionReport r = check_partition(t, p, tau, k);
    ++checked;
    passed += r.pass ? 1 : 0;
    max_w = std::max(max_w, p.cut_size());
    if (!r.pass) v.require(false, "tree " + std::to_string(i) + " fails (" + r.violations.front().item + ")");
  }
  v.detail << checked << " checked, " << passed << " pass all of (a)-(g), " << skipped
           << " draws with tau*k < 2 skipped, largest |W| " << max_w << "; ";
}

// ---------------------------------------------------------------- 4

struct DecInstance {
  std::string name;
  Graph g;
  Vertex k;
  SpotSearch order = SpotSearch::kBallFirst;
  ConstantSchedule s;
};

std::vector<DecInstance> decomposition_corpus() {
  std::vector<DecInstance> out;
  const ConstantSchedule s;
  for (int i = 0; i < 20; ++i) {
    std::mt19937_64 rng(700 + i);
    const Vertex n = 20 + static_cast<Vertex>(rng() % 61);
    out.push_back({"gnp", gen_gnp(n, 0.05 + 0.025 * (i % 19), 700 + i), 3 + static_cast<Vertex>(rng() % 18), {}, s});
  }
  for (int i = 0; i < 20; ++i) {
    const Vertex n = 6 + i % 9;
    out.push_back({"small-gnp", gen_gnp(n, 0.3 + 0.03 * i, 800 + i), 2 + i % 9, {}, s});
  }
  for (int i = 0; i < 12; ++i) {
    const Vertex k = 3 + i % 10;
    out.push_back({"min-degree", gen_random_min_degree(30 + 3 * i, k, 0.1, 900 + i), k, {}, s});
  }
  for (int i = 0; i < 12; ++i) {
    const Vertex k = 4 + i % 9;
    out.push_back({"lks-host", gen_lks_host(40 + 2 * i, k, s.eps, 0.2, 950 + i), k, {}, s});
  }
  for (Vertex k : {3, 5, 7, 9, 11, 13, 21, 31}) out.push_back({"extremal", gen_extremal_lks(k), k, {}, s});
  for (int i = 0; i < 6; ++i) {
    const Figure2Instance f = gen_figure2(90, 20, i);
    out.push_back({"figure2", f.graph, 20, i % 2 ? SpotSearch::kStarFirst : SpotSearch::kBallFirst, figure2_schedule()});
  }
  for (Vertex n : {200, 400, 600, 1000}) out.push_back({"circulant", circulant(n, {1, 10, 100}), 40, {}, s});
  for (int i = 0; i < 6; ++i) {
    // Huge stars hung on a circulant body: Psi is nonempty.
    const Graph body = circulant(20, {1, 10});
    std::vector<Graph> parts{body};
    for (int j = 0; j < 1 + i % 3; ++j) parts.push_back(complete_bipartite(1, 200 + 50 * i));
    Graph u = disjoint_union(parts);
    std::vector<Edge> e = u.edges();
    Vertex offset = 20;
    for (std::size_t j = 1; j < parts.size(); ++j) {
      e.emplace_back(offset, static_cast<Vertex>(j));
      offset += parts[j].n();
    }
    out.push_back({"stars", Graph(u.n(), e), 3, {}, s});
  }
  for (Vertex m : {2, 3, 4, 6}) out.push_back({"half-split", gen_half_split(m), 40, {}, s});
  for (Vertex n : {8, 12, 14, 30}) out.push_back({"complete", complete_graph(n), n / 2, {}, s});
  for (Vertex a : {5, 7, 10, 20}) out.push_back({"complete-bipartite", complete_bipartite(a, a + 1), a, {}, s});
  return out;
}

void criterion4(Verdict& v) {
  const auto corpus = decomposition_corpus();
  std::size_t small = 0, exact_clean = 0, with_exp = 0, with_psi = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const DecInstance& in = corpus[i];
    DecomposeOptions o;
    o.spot_search = in.order;
    const SparseDecomposition d = decompose(in.g, in.k, in.s, o);
    const ConstantSchedule& s = d.schedule;
    const std::string tag = in.name + "#" + std::to_string(i);
    std::set<Edge> seen;
    std::size_t claimed = 0;
    auto claim = [&](const std::vector<Edge>& edges) {
      for (const auto& [a, b] : edges) {
        ++claimed;
        v.require(in.g.has_edge(a, b), tag + ": bucket edge not in G");
        seen.insert(make_edge(a, b));
      }
    };
    claim(d.psi_edges);
    for (const auto& spot : d.spots) claim(spot.edges);
    claim(d.expander.g_exp.edges());
    claim(d.gap.deleted);
    claim(d.expander.deleted);
    v.require(claimed == in.g.num_edges() && seen.size() == claimed,
              tag + ": buckets hold " + std::to_string(claimed) + " edges (" + std::to_string(seen.size()) +
                  " distinct), |E| = " + std::to_string(in.g.num_edges()));
    const auto deleted = static_cast<long long>(d.gap.deleted.size() + d.expander.deleted.size());
    v.require(Rational(deleted) <= (2 * s.eps + s.rho) * in.k * in.g.n(), tag + ": deleted edges above (2eps+rho)kn");
    const auto threshold = Rational(s.rho * in.k);
    for (Vertex x : d.expander.vertices) {
      v.require(Rational(static_cast<long long>(d.expander.g_exp.degree(x))) >= threshold, tag + ": G_exp degree below rho k");
    }
    v.require(!find_dense_spot(d.expander.g_exp, in.k, s.gamma), tag + ": spot searcher finds a spot in G_exp");
    if (in.g.n() <= 14) {
      ++small;
      const bool clean = !find_dense_spot_exact(d.expander.g_exp, in.k, s.gamma);
      exact_clean += clean ? 1 : 0;
      v.require(clean, tag + ": exact search finds a spot in G_exp");
    }
    const AuditReport a = audit_decomposition(in.g, d);
    v.require(a.pass, tag + ": audit: " + (a.violations.empty() ? "" : a.violations.front()));
    with_exp += d.expander.vertices.empty() ? 0 : 1;
    with_psi += d.psi.empty() ? 0 : 1;
  }
  v.detail << corpus.size() << " instances (" << with_psi << " with Psi, " << with_exp << " with nonempty G_exp), "
           << small << " with n <= 14 of which " << exact_clean << " exactly nowhere-dense; ";
}

// ---------------------------------------------------------------- 5

void criterion5(Verdict& v) {
  // (a) planted witness, sides up to 12.
  for (Vertex m = 1; m <= 6; ++m) {
    const Graph g = gen_half_split(m);
    const BipartitePair pair(g, range(0, 2 * m), range(2 * m, 4 * m));
    const Rational eta(9, 20);
    const RegularityVerdict r = check_regular_pair(pair, eta);
    const bool first = r.witness && r.witness->u == range(0, m) && r.witness->w == range(2 * m, 3 * m);
    const bool second = r.witness && r.witness->u == range(m, 2 * m) && r.witness->w == range(3 * m, 4 * m);
    v.require(!r.regular && (first || second) && witness_is_valid(pair, eta, *r.witness),
              "half-split m=" + std::to_string(m) + " does not return the planted block");
  }
  v.detail << "half-split sides 2..12 return the planted block; ";

  // (b) energy across refinement rounds.
  std::size_t rounds = 0, series = 0, steps = 0;
  for (int i = 0; i < 50; ++i) {
    std::mt19937_64 rng(3000 + i);
    const int c = 2 + i % 3;
    std::vector<std::pair<int, int>> spot_pairs;
    for (int a = 0; a < c; ++a) {
      for (int b = a + 1; b < c; ++b) {
        if (spot_pairs.empty() || rng() % 2) spot_pairs.emplace_back(a, b);
      }
    }
    std::vector<VennCell> cells(c);
    Vertex next = 0;
    for (int a = 0; a < c; ++a) {
      cells[a].vertices = range(next, next + 8 * (1 + static_cast<Vertex>(rng() % 2)));
      next = cells[a].vertices.back() + 1;
    }
    for (std::size_t j = 0; j < spot_pairs.size(); ++j) {
      cells[spot_pairs[j].first].signature.push_back(2 * static_cast<int>(j));
      cells[spot_pairs[j].second].signature.push_back(2 * static_cast<int>(j) + 1);
    }
    std::vector<Edge> e;
    std::uniform_real_distribution<double> u01(0, 1);
    for (const auto& [a, b] : spot_pairs) {
      const double p_in = 0.6 + 0.4 * u01(rng), p_out = 0.4 * u01(rng);
      for (Vertex x : cells[a].vertices) {
        for (Vertex y : cells[b].vertices) {
          const bool same = (x % 2) == (y % 2);  // planted parity blocks
          if (u01(rng) < (same ? p_in : p_out)) e.emplace_back(x, y);
        }
      }
    }
    const Graph spot_graph(next, e);
    const CellGraph cg = build_cell_graph(cells, spot_pairs.size());
    RegularizeOptions opt;
    opt.target_fraction = Rational(0);
    opt.budget = 6;
    opt.seed = 3000 + i;
    const RegularizeResult r = regularize_cells(spot_graph, cells, cg, ConstantSchedule{}, 80, opt);
    rounds += static_cast<std::size_t>(r.rounds);
    for (const auto& h : r.energy_history) {
      ++series;
      for (std::size_t t = 1; t < h.size(); ++t) {
        ++steps;
        v.require(h[t] >= h[t - 1], "energy dropped in instance " + std::to_string(i));
      }
    }
  }
  v.require(steps > 0, "no refinement step was exercised");
  v.detail << "50 regularizations: " << rounds << " refinement rounds, " << steps << " energy steps over " << series
           << " matchings, none decreasing; ";

  // (c) Vizing on cell graphs.
  std::size_t max_colours = 0, max_delta = 0;
  for (int i = 0; i < 100; ++i) {
    std::mt19937_64 rng(4000 + i);
    const int c = 3 + static_cast<int>(rng() % 12);
    const int spots = 1 + static_cast<int>(rng() % 30);
    std::vector<VennCell> cells(c);
    for (int a = 0; a < c; ++a) cells[a].vertices = {a};
    for (int j = 0; j < spots; ++j) {
      const int a = static_cast<int>(rng() % c);
      const int b = (a + 1 + static_cast<int>(rng() % (c - 1))) % c;
      cells[a].signature.push_back(2 * j);
      cells[b].signature.push_back(2 * j + 1);
    }
    const CellGraph cg = build_cell_graph(cells, spots);
    std::size_t delta = 0;
    for (Vertex x = 0; x < cg.graph.n(); ++x) delta = std::max(delta, cg.graph.degree(x));
    std::set<Edge> covered;
    for (const auto& m : cg.matchings) {
      std::vector<char> hit(cg.graph.n(), 0);
      for (const auto& [a, b] : m) {
        v.require(cg.graph.has_edge(a, b), "matching edge outside the cell graph");
        v.require(!hit[a] && !hit[b], "improper colour class in cell graph " + std::to_string(i));
        hit[a] = hit[b] = 1;
        covered.insert(make_edge(a, b));
      }
    }
    v.require(covered.size() == cg.graph.num_edges(), "matchings miss cell-graph edges");
    v.require(cg.matchings.size() <= delta + 1, "more than Delta+1 matchings");
    max_colours = std::max(max_colours, cg.matchings.size());
    max_delta = std::max(max_delta, delta);
  }
  v.detail << "100 cell graphs properly covered by <= Delta+1 matchings (max Delta " << max_delta << ", max matchings "
           << max_colours << ")";
}

// ---------------------------------------------------------------- 6

struct AvoidFamily {
  std::string name;
  ConstantSchedule s;
  Vertex k;
  int block;  // side of the planted complete bipartite blocks
};

void criterion6(Verdict& v) {
  ConstantSchedule base;
  base.Lambda = Rational(1, 10);  // Lambda k = 4 at k = 40
  ConstantSchedule wide;          // gamma^2 k = 1 at k = 16
  wide.eps = Rational(3, 2);
  wide.rho = Rational(3, 4);
  wide.gamma = Rational(1, 4);
  wide.beta = Rational(1, 20);
  wide.tau = Rational(1, 100);
  wide.eta = Rational(19, 20);
  wide.alpha = Rational(19, 100);
  wide.Lambda = Rational(1, 4);
  const AvoidFamily families[] = {{"default schedule, k=40", base, 40, 3}, {"gamma^2 k = 1, k=16", wide, 16, 5}};
  std::size_t instances = 0, nonvacuous = 0, failing = 0, sets = 0;
  std::string witness;
  for (const AvoidFamily& f : families) {
    validate_schedule(f.s);
    for (int seed = 0; seed < 200; ++seed) {
      std::mt19937_64 rng(6000 + seed);
      const Vertex n = 10 + static_cast<Vertex>(rng() % 7);
      std::set<Edge> es;
      for (int b = 0, blocks = 2 + seed % 3; b < blocks; ++b) {
        VertexList perm = range(0, n);
        std::shuffle(perm.begin(), perm.end(), rng);
        for (int i = 0; i < f.block; ++i) {
          for (int j = f.block; j < 2 * f.block && j < n; ++j) es.insert(make_edge(perm[i], perm[j]));
        }
      }
      const Graph g(n, std::vector<Edge>(es.begin(), es.end()));
      for (SpotSearch order : {SpotSearch::kBallFirst, SpotSearch::kStarFirst}) {
        DecomposeOptions o;
        o.spot_search = order;
        const SparseDecomposition d = decompose(g, f.k, f.s, o);
        ++instances;
        if (d.cells.small_cells.empty()) continue;
        ++nonvacuous;
        const AvoidingReport r = check_avoiding_exhaustive(g, d.spots, d.cells.small_cells, d.schedule, f.k);
        sets += r.sets_checked;
        if (!r.pass) {
          ++failing;
          if (witness.empty()) {
            std::ostringstream w;
            w << f.name << ", seed " << seed << ": X = {";
            for (std::size_t i = 0; i < r.worst_x.size(); ++i) w << (i ? "," : "") << r.worst_x[i];
            w << "} leaves " << r.worst_count << " of " << d.cells.small_cells.size()
              << " frak-A vertices without an avoiding spot, bound " << to_string(r.bound);
            witness = w.str();
          }
        }
      }
    }
  }
  v.require(nonvacuous > 0, "no instance with a nonempty frak-A");
  v.require(failing == 0, witness);
  v.detail << instances << " decompositions, " << nonvacuous << " with nonempty frak-A, " << sets << " sets X checked, "
           << failing << " with more than beta k exceptional vertices; ";
}

// ---------------------------------------------------------------- 7

void criterion7(Verdict& v) {
  const Figure2Instance f = gen_figure2(90, 20, 0);
  DecomposeOptions o;
  o.spot_search = SpotSearch::kStarFirst;
  const SparseDecomposition d = decompose(f.graph, 20, figure2_schedule(), o);
  StructureOptions so;
  so.cut_degree = 1;
  const StructureResult r = find_global_structure(f.graph, d, 20, d.schedule, so);
  v.require(r.structure.has_value(), "no structure found: " + r.reason);
  if (!r.structure) return;
  const GlobalStructure& gs = *r.structure;
  const auto big = indicator(f.graph.n(), f.big);
  std::size_t ls = 0;
  for (const RegularPair& p : gs.matching) {
    const bool a_big = std::all_of(p.a.begin(), p.a.end(), [&](Vertex x) { return big[x] != 0; });
    const bool b_small = std::none_of(p.b.begin(), p.b.end(), [&](Vertex x) { return big[x] != 0; });
    ls += a_big && b_small ? 1 : 0;
  }
  v.require(!gs.matching.empty() && ls == gs.matching.size(), "M contains pairs that are not big-small");
  const StructureReport rep = verify_global_structure(f.graph, d, gs, 20, d.schedule);
  v.require(rep.pass, rep.pass ? "" : "verify: (" + rep.violations.front().item + ") " + rep.violations.front().witness);
  GlobalStructure literal = gs;
  literal.cut_degree = literal_cut_degree(d.schedule);
  const StructureReport lit = verify_global_structure(f.graph, d, literal, 20, d.schedule);
  v.detail << "|L|=" << gs.big_l.size() << " |X|=" << gs.x_set.size() << " |Y|=" << gs.y_set.size() << ", M has "
           << gs.matching.size() << " pairs, all big-small; (i)-(iv) verified at cut degree " << gs.cut_degree
           << "; the literal cut degree " << literal.cut_degree << " " << (lit.pass ? "also holds" : "fails item (i)")
           << "; ";
}

// ---------------------------------------------------------------- 8, 9

std::vector<TrialRecord> g_corpus;

void criterion8(Verdict& v, const char* cli) {
  TrialConfig cfg;
  g_corpus = run_trials(cfg, 200, 2024);
  std::size_t census = 0, success = 0, fast = 0, valid = 0, yes = 0, no = 0, timeout = 0, breach = 0;
  for (const auto& r : g_corpus) {
    census += r.census_ok ? 1 : 0;
    breach += r.breach ? 1 : 0;
    if (r.success) {
      ++success;
      fast += r.fast_path ? 1 : 0;
      valid += r.valid ? 1 : 0;
    } else {
      yes += r.oracle == OracleVerdict::kYes ? 1 : 0;
      no += r.oracle == OracleVerdict::kNo ? 1 : 0;
      timeout += r.oracle == OracleVerdict::kTimeout ? 1 : 0;
    }
  }
  v.require(census == g_corpus.size(), std::to_string(g_corpus.size() - census) + " hosts miss the census");
  v.require(valid == success, std::to_string(success - valid) + " successes fail validation");
  v.require(yes == g_corpus.size() - success, "failures without an oracle YES: " + std::to_string(no) + " NO, " +
                                                   std::to_string(timeout) + " timeouts");
  v.require(breach == 0, std::to_string(breach) + " soundness breaches");
  std::string cli_note;
  if (cli) {
    const std::string cmd = std::string(cli) + " embed --trials 200 --seed 2024 --oracle --out /dev/null >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    v.require(code != 4, "CLI batch exited with 4");
    cli_note = ", CLI batch exit code " + std::to_string(code);
  }
  v.detail << "200 census-satisfying instances (n<=60, k<=12): success rate " << success << "/200 (" << fast
           << " by the min-degree fast path, " << success - fast << " through the decomposition), " << valid
           << " valid; " << g_corpus.size() - success << " failures, oracle YES on " << yes << cli_note << "; ";
  std::map<std::string, int> stages;
  for (const auto& r : g_corpus) {
    if (!r.success) ++stages[r.stage];
  }
  v.detail << "failure stages:";
  for (const auto& [stage, count] : stages) v.detail << " " << stage << "=" << count;
}

void criterion9(Verdict& v) {
  std::size_t calls = 0, applicable = 0, violations = 0, ok = 0, no_psi = 0;
  double worst_ratio = 0;
  for (int h = 0; h < 24; ++h) {
    std::mt19937_64 rng(8000 + h);
    const Vertex k = 60 + 20 * (h % 3);
    ConstantSchedule s;
    const Vertex body_n = 17 * k + static_cast<Vertex>(rng() % 300);
    const Graph body = gen_gnp(body_n, 0.01 + 0.01 * (h % 3), 8000 + h);
    std::set<Edge> e(body.edges().begin(), body.edges().end());
    const int hubs = 1 + h % 3;
    for (int j = 0; j < hubs; ++j) {
      for (Vertex x = 0; x < body_n; ++x) {
        if (x != j && rng() % 10 < 9) e.insert(make_edge(j, x));
      }
    }
    const Graph g(body_n, std::vector<Edge>(e.begin(), e.end()));
    const DegreeGap gap = find_degree_gap(g, k, s);
    s.omega_star = gap.omega_star;
    s.omega_star_star = gap.omega_star_star;
    s.omega_prime = 2 * gap.omega_star;
    const auto in_psi = indicator(g.n(), gap.psi);
    if (gap.psi.empty()) {
      ++no_psi;
      continue;
    }
    for (int trial = 0; trial < 60; ++trial) {
      const Vertex anchor = gap.psi[trial % gap.psi.size()];
      // U: the anchor plus a clustered or random used set.
      std::vector<char> used(g.n(), 0);
      used[anchor] = 1;
      const std::size_t want = 20 + rng() % 150;
      std::size_t have = 1;
      if (trial % 2 == 0) {
        const Vertex centre = static_cast<Vertex>(rng() % g.n());
        for (Vertex w : gap.g_prime.neighbors(centre)) {
          if (have >= want) break;
          if (!in_psi[w] && !used[w]) {
            used[w] = 1;
            ++have;
          }
        }
      }
      while (have < want) {
        const Vertex w = static_cast<Vertex>(rng() % g.n());
        if (!in_psi[w] && !used[w]) {
          used[w] = 1;
          ++have;
        }
      }
      std::vector<Vertex> mapping;
      for (Vertex w = 0; w < g.n(); ++w) {
        if (used[w]) mapping.push_back(w);
      }
      mapping.push_back(kNoVertex);
      const auto state = EmbeddingState::from_parts(mapping, used, std::vector<Tag>(mapping.size(), Tag::kGreedy));
      EmbedTrace trace;
      const HubResult r = embed_via_hub(state, gap.g_prime, in_psi, 1 + rng() % 5, anchor, s, k, {}, &trace);
      ++calls;
      ok += r.ok ? 1 : 0;
      for (const HubCheck& c : trace.hub) {
        if (!c.applicable) continue;
        ++applicable;
        if (!c.holds) ++violations;
        worst_ratio = std::max(worst_ratio, to_double(c.lhs) / to_double(c.rhs));
      }
    }
  }
  std::size_t corpus_calls = 0, corpus_violations = 0;
  for (const auto& r : g_corpus) {
    corpus_calls += r.hub_calls;
    corpus_violations += r.hub_violations;
  }
  v.require(applicable > 0, "no hub invocation with nonempty U~");
  v.require(violations + corpus_violations == 0, std::to_string(violations + corpus_violations) + " violations");
  v.detail << calls << " fuzzed hub calls at k in {60,80,100} on " << 24 - no_psi << " hosts with Psi (" << applicable << " with nonempty U~, " << ok
           << " placed all children), largest |U~| lambda k/2 : Omega* k |U\\Psi| ratio " << worst_ratio << "; "
           << corpus_calls << " hub checks in the end-to-end corpus; " << violations + corpus_violations
           << " violations";
}

}  // namespace

int main(int argc, char** argv) {
  const char* cli = argc > 1 ? argv[1] : nullptr;
  struct Item {
    int id;
    const char* name;
    double budget_s;
    std::function<void(Verdict&)> run;
  };
  const std::vector<Item> items{
      {1, "extremal graph", 10, criterion1},
      {2, "greedy min-degree embedding", 120, criterion2},
      {3, "tree partition", 60, criterion3},
      {4, "decomposition edge accounting", 300, criterion4},
      {5, "regularity primitives", 600, criterion5},
      {6, "avoiding property", 600, criterion6},
      {7, "Figure 2 global structure", 600, criterion7},
      {8, "end-to-end soundness", 1800, [&](Verdict& v) { criterion8(v, cli); }},
      {9, "hub inequality", 600, criterion9},
  };
  bool all = true;
  for (const Item& it : items) {
    Verdict v;
    const auto t0 = Clock::now();
    try {
      it.run(v);
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    v.require(secs < it.budget_s, "runtime " + std::to_string(secs) + " s over budget");
    all = all && v.pass;
    std::printf("%s %d %s: %s[%.1f s]\n", v.pass ? "PASS" : "FAIL", it.id, it.name, v.detail.str().c_str(), secs);
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
