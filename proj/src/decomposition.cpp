#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>

#include "lks/decomposition.hpp"

namespace lks {

namespace {

std::vector<Edge> all_spot_edges(const std::vector<DenseSpot>& spots) {
  std::vector<Edge> out;
  for (const auto& d : spots) out.insert(out.end(), d.edges.begin(), d.edges.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t edges_between(const Graph& g, const VertexList& a, const VertexList& b) {
  const auto in_b = indicator(g.n(), b);
  std::size_t e = 0;
  for (Vertex u : a) e += g.degree_into(u, in_b);
  return e;
}

}  // namespace

SparseDecomposition decompose(const Graph& g, Vertex k, const ConstantSchedule& s, const DecomposeOptions& options) {
  validate_schedule(s);
  SparseDecomposition d;
  d.n = g.n();
  d.k = k;
  d.schedule = s;
  d.gap = find_degree_gap(g, k, s);
  d.schedule.omega_star = d.gap.omega_star;
  d.schedule.omega_star_star = d.gap.omega_star_star;
  d.schedule.omega_prime = 2 * d.gap.omega_star;  // sqrt(omega_star * omega_star_star)
  d.psi = d.gap.psi;

  const auto in_psi = indicator(g.n(), d.psi);
  for (const auto& [u, v] : d.gap.g_prime.edges()) {
    if (in_psi[u] || in_psi[v]) d.psi_edges.emplace_back(u, v);
  }
  const Graph rest = d.gap.g_prime.without_edges(d.psi_edges);

  d.spots = extract_dense_spots(rest, k, s.gamma, options.spot_search);
  for (int round = 0;; ++round) {
    d.expander = build_expander(rest, d.spots, k, s.rho);
    if (round >= options.expander_rounds) break;
    std::vector<DenseSpot> more = extract_dense_spots(d.expander.g_exp, k, s.gamma, options.spot_search);
    if (more.empty()) break;
    for (auto& spot : more) d.spots.push_back(std::move(spot));
  }

  d.cells = venn_cells(g, d.spots, s.alpha, k);
  d.cell_graph = build_cell_graph(d.cells.cells, d.spots.size());
  const Graph spot_graph(g.n(), all_spot_edges(d.spots));
  d.reg = regularize_cells(spot_graph, d.cells.cells, d.cell_graph, d.schedule, k, options.regularize);

  EdgeLedger& l = d.ledger;
  l.total = g.num_edges();
  l.gap_deleted = d.gap.deleted.size();
  l.psi_edges = d.psi_edges.size();
  l.spot_edges = spot_graph.num_edges();
  l.exp_edges = d.expander.g_exp.num_edges();
  l.core_deleted = d.expander.deleted.size();
  std::size_t in_pairs = 0;
  for (const auto& p : d.reg.pairs) in_pairs += edges_between(spot_graph, p.a, p.b);
  l.leftover_pair_edges = l.spot_edges - in_pairs;
  l.conserved = l.gap_deleted + l.psi_edges + l.spot_edges + l.exp_edges + l.core_deleted == l.total;
  l.deleted_bound = (2 * s.eps + s.rho) * k * g.n();
  l.bound_ok = Rational(l.gap_deleted + l.core_deleted) <= l.deleted_bound;
  return d;
}

AuditReport audit_decomposition(const Graph& g, const SparseDecomposition& d) {
  AuditReport r;
  auto fail = [&](std::string what) {
    r.pass = false;
    r.violations.push_back(std::move(what));
  };
  const Vertex n = g.n();
  const Vertex k = d.k;
  const ConstantSchedule& s = d.schedule;
  if (d.n != n) {
    fail("decomposition is for " + std::to_string(d.n) + " vertices, graph has " + std::to_string(n));
    return r;
  }

  // Every edge of G in exactly one bucket.
  std::map<Edge, std::string> owner;
  auto claim = [&](const std::vector<Edge>& edges, const std::string& bucket) {
    for (const auto& raw : edges) {
      const Edge e = make_edge(raw.first, raw.second);
      if (!g.has_edge(e.first, e.second)) {
        fail(bucket + " edge (" + std::to_string(e.first) + "," + std::to_string(e.second) + ") is not in G");
        continue;
      }
      const auto [it, fresh] = owner.emplace(e, bucket);
      if (!fresh) fail("edge (" + std::to_string(e.first) + "," + std::to_string(e.second) + ") in both " + it->second + " and " + bucket);
    }
  };
  claim(d.gap.deleted, "gap-deleted");
  claim(d.psi_edges, "psi");
  for (std::size_t j = 0; j < d.spots.size(); ++j) claim(d.spots[j].edges, "spot " + std::to_string(j));
  claim(d.expander.g_exp.edges(), "g_exp");
  claim(d.expander.deleted, "core-deleted");
  if (owner.size() != g.num_edges()) {
    fail("edge buckets hold " + std::to_string(owner.size()) + " edges, G has " + std::to_string(g.num_edges()));
  }
  const std::size_t counted = d.ledger.gap_deleted + d.ledger.psi_edges + d.ledger.spot_edges + d.ledger.exp_edges +
                              d.ledger.core_deleted;
  if (counted != g.num_edges() || d.ledger.total != g.num_edges()) fail("ledger counts do not add up to |E(G)|");

  // Degree gap and psi.
  const Graph g_prime = g.without_edges(d.gap.deleted);
  VertexList psi;
  for (Vertex v = 0; v < n; ++v) {
    const Rational deg(g_prime.degree(v));
    if (deg >= s.omega_star * k && deg < s.omega_star_star * k) {
      fail("vertex " + std::to_string(v) + " has degree " + std::to_string(g_prime.degree(v)) + " inside the gap");
    }
    if (deg >= s.omega_star_star * k) psi.push_back(v);
  }
  if (psi != d.psi) fail("psi differs from the vertices of degree >= omega_star_star * k");
  const auto in_psi = indicator(n, psi);
  for (const auto& [u, v] : d.psi_edges) {
    if (!in_psi[u] && !in_psi[v]) fail("psi edge (" + std::to_string(u) + "," + std::to_string(v) + ") misses psi");
  }

  // Spots.
  for (std::size_t j = 0; j < d.spots.size(); ++j) {
    if (!is_dense_spot(g_prime, d.spots[j], k, s.gamma)) fail("spot " + std::to_string(j) + " is not a dense spot");
    for (const auto& [u, v] : d.spots[j].edges) {
      if (in_psi[u] || in_psi[v]) fail("spot " + std::to_string(j) + " touches psi");
    }
  }

  // Expander.
  const auto threshold = static_cast<std::size_t>(ceil_int(s.rho * k));
  const auto in_exp = indicator(n, d.expander.vertices);
  for (Vertex v : d.expander.vertices) {
    if (d.expander.g_exp.degree(v) < threshold) fail("g_exp vertex " + std::to_string(v) + " has degree below rho*k");
  }
  for (const auto& [u, v] : d.expander.g_exp.edges()) {
    if (!in_exp[u] || !in_exp[v]) fail("g_exp edge leaves V(g_exp)");
  }
  if (find_dense_spot(d.expander.g_exp, k, s.gamma)) fail("spot searcher finds a dense spot in g_exp");
  std::size_t candidates = 0;
  const auto needed = static_cast<std::size_t>(floor_int(s.gamma * k) + 1);
  for (Vertex v = 0; v < n; ++v) candidates += d.expander.g_exp.degree(v) >= needed;
  if (candidates <= kExactSpotLimit && find_dense_spot_exact(d.expander.g_exp, k, s.gamma)) {
    fail("exact search finds a dense spot in g_exp");
  }
  if (Rational(d.expander.deleted.size()) >= s.rho * k * n && !d.expander.deleted.empty()) {
    fail("expander cleaning lost >= rho*k*n edges");
  }

  // Venn cells.
  std::vector<std::vector<int>> signature(n);
  for (std::size_t j = 0; j < d.spots.size(); ++j) {
    for (Vertex v : d.spots[j].side_a) signature[v].push_back(static_cast<int>(2 * j));
    for (Vertex v : d.spots[j].side_b) signature[v].push_back(static_cast<int>(2 * j + 1));
  }
  std::vector<char> cell_seen(n, 0);
  VertexList small_union;
  auto check_cells = [&](const std::vector<VennCell>& cells, bool small) {
    for (const auto& c : cells) {
      if (c.vertices.empty()) fail("empty Venn cell");
      if ((Rational(c.vertices.size()) < s.alpha * k) != small) fail("Venn cell of size " + std::to_string(c.vertices.size()) + " on the wrong side of alpha*k");
      for (Vertex v : c.vertices) {
        if (cell_seen[v]) fail("vertex " + std::to_string(v) + " in two Venn cells");
        cell_seen[v] = 1;
        if (signature[v] != c.signature) fail("vertex " + std::to_string(v) + " has a different signature than its cell");
        if (small) small_union.push_back(v);
      }
    }
  };
  check_cells(d.cells.cells, false);
  check_cells(d.cells.small, true);
  for (Vertex v = 0; v < n; ++v) {
    if (!signature[v].empty() && !cell_seen[v]) fail("spot vertex " + std::to_string(v) + " in no Venn cell");
    if (signature[v].empty() && cell_seen[v]) fail("vertex " + std::to_string(v) + " in a Venn cell but in no spot");
  }
  std::sort(small_union.begin(), small_union.end());
  if (small_union != d.cells.small_cells) fail("small_cells is not the union of the small Venn cells");

  // Cell graph and its matching cover.
  const CellGraph& cg = d.cell_graph;
  const CellGraph rebuilt = build_cell_graph(d.cells.cells, d.spots.size());
  if (!(rebuilt.graph == cg.graph)) fail("cell graph edges differ from the spot incidences");
  if (cg.matchings.size() > cg.graph.max_degree() + 1) fail("more than max_degree+1 matchings");
  std::set<Edge> covered;
  for (std::size_t i = 0; i < cg.matchings.size(); ++i) {
    std::set<Vertex> ends;
    for (const auto& e : cg.matchings[i]) {
      if (!ends.insert(e.first).second || !ends.insert(e.second).second) fail("matching " + std::to_string(i) + " is not a matching");
      if (!covered.insert(make_edge(e.first, e.second)).second) fail("cell-graph edge in two matchings");
      if (!cg.graph.has_edge(e.first, e.second)) fail("matching edge not in the cell graph");
    }
  }
  if (covered.size() != cg.graph.num_edges()) fail("matchings do not cover the cell graph");

  // Regularization energies never drop.
  for (std::size_t i = 0; i < d.reg.energy_history.size(); ++i) {
    const auto& h = d.reg.energy_history[i];
    for (std::size_t t = 1; t < h.size(); ++t) {
      if (h[t] < h[t - 1]) fail("energy of matching " + std::to_string(i) + " dropped in round " + std::to_string(t));
    }
  }

  if (Rational(d.ledger.gap_deleted + d.ledger.core_deleted) > (2 * s.eps + s.rho) * k * n) {
    fail("deleted edges exceed (2 eps + rho) k n");
  }
  return r;
}

// ---------------------------------------------------------------- avoiding

namespace {

struct AvoidingIndex {
  std::vector<std::vector<int>> spots_of;  // per small-cell vertex
  std::vector<VertexList> spot_vertices;
  std::int64_t allowed_hits;               // floor(gamma^2 k)
};

AvoidingIndex index_spots(Vertex n, const std::vector<DenseSpot>& spots, const VertexList& small_cells, const ConstantSchedule& s, Vertex k) {
  AvoidingIndex idx;
  idx.allowed_hits = floor_int(s.gamma * s.gamma * k);
  std::vector<std::vector<int>> of(n);
  for (std::size_t j = 0; j < spots.size(); ++j) {
    VertexList vs = spots[j].side_a;
    vs.insert(vs.end(), spots[j].side_b.begin(), spots[j].side_b.end());
    std::sort(vs.begin(), vs.end());
    for (Vertex v : vs) of[v].push_back(static_cast<int>(j));
    idx.spot_vertices.push_back(std::move(vs));
  }
  for (Vertex v : small_cells) idx.spots_of.push_back(of[v]);
  return idx;
}

}  // namespace

AvoidingReport check_avoiding(const Graph& g, const std::vector<DenseSpot>& spots, const VertexList& small_cells,
                              const std::vector<VertexList>& x_sets, const ConstantSchedule& s, Vertex k) {
  const AvoidingIndex idx = index_spots(g.n(), spots, small_cells, s, k);
  AvoidingReport r;
  r.bound = s.beta * k;
  for (const auto& x : x_sets) {
    if (Rational(x.size()) > s.Lambda * k) {
      throw Error("Lambda-violation", "|X| = " + std::to_string(x.size()) + " exceeds Lambda*k = " + to_string(s.Lambda * k));
    }
    const auto in_x = indicator(g.n(), x);
    std::vector<std::int64_t> hits(spots.size(), 0);
    for (std::size_t j = 0; j < spots.size(); ++j) {
      for (Vertex v : idx.spot_vertices[j]) hits[j] += in_x[v];
    }
    VertexList exceptional;
    for (std::size_t i = 0; i < small_cells.size(); ++i) {
      const bool ok = std::any_of(idx.spots_of[i].begin(), idx.spots_of[i].end(), [&](int j) { return hits[j] <= idx.allowed_hits; });
      if (!ok) exceptional.push_back(small_cells[i]);
    }
    r.counts.push_back(exceptional.size());
    ++r.sets_checked;
    if (Rational(exceptional.size()) > r.bound) r.pass = false;
    if (r.sets_checked == 1 || exceptional.size() > r.worst_count) {
      r.worst_count = exceptional.size();
      r.worst_x = x;
      r.worst_exceptional = std::move(exceptional);
    }
  }
  return r;
}

AvoidingReport check_avoiding_exhaustive(const Graph& g, const std::vector<DenseSpot>& spots,
                                         const VertexList& small_cells, const ConstantSchedule& s, Vertex k) {
  const Vertex n = g.n();
  if (n > 64) throw Error("exhaustive-budget", "exhaustive avoiding check needs n <= 64");
  const auto limit = static_cast<int>(std::min<std::int64_t>(floor_int(s.Lambda * k), n));
  // Number of sets, stopping early once over budget.
  double total = 0;
  double binom = 1;
  for (int j = 0; j <= limit; ++j) {
    total += binom;
    binom = binom * (n - j) / (j + 1);
  }
  if (total > double(1 << 24)) throw Error("exhaustive-budget", "too many sets X to enumerate");

  const AvoidingIndex idx = index_spots(n, spots, small_cells, s, k);
  std::vector<std::uint64_t> spot_mask(spots.size(), 0);
  for (std::size_t j = 0; j < spots.size(); ++j) {
    for (Vertex v : idx.spot_vertices[j]) spot_mask[j] |= std::uint64_t{1} << v;
  }
  AvoidingReport r;
  r.bound = s.beta * k;
  VertexList x;
  std::vector<std::int64_t> hits(spots.size());
  // Recursive enumeration of sets in lexicographic order of their elements.
  auto visit = [&](auto&& self, Vertex next, std::uint64_t mask) -> void {
    for (std::size_t j = 0; j < spots.size(); ++j) hits[j] = std::popcount(mask & spot_mask[j]);
    std::size_t count = 0;
    for (std::size_t i = 0; i < small_cells.size(); ++i) {
      const bool ok = std::any_of(idx.spots_of[i].begin(), idx.spots_of[i].end(), [&](int j) { return hits[j] <= idx.allowed_hits; });
      count += !ok;
    }
    ++r.sets_checked;
    if (Rational(count) > r.bound) r.pass = false;
    if (r.sets_checked == 1 || count > r.worst_count) {
      r.worst_count = count;
      r.worst_x = x;
      r.worst_exceptional.clear();
      for (std::size_t i = 0; i < small_cells.size(); ++i) {
        const bool ok = std::any_of(idx.spots_of[i].begin(), idx.spots_of[i].end(), [&](int j) { return hits[j] <= idx.allowed_hits; });
        if (!ok) r.worst_exceptional.push_back(small_cells[i]);
      }
    }
    if (static_cast<int>(x.size()) == limit) return;
    for (Vertex v = next; v < n; ++v) {
      x.push_back(v);
      self(self, v + 1, mask | std::uint64_t{1} << v);
      x.pop_back();
    }
  };
  visit(visit, 0, 0);
  return r;
}

// ---------------------------------------------------------------- serialization

namespace {

Json edges_json(const std::vector<Edge>& edges) {
  Json a = Json::array();
  for (const auto& [u, v] : edges) a.push_back({u, v});
  return a;
}

std::vector<Edge> edges_from(const Json& j) {
  std::vector<Edge> out;
  for (const auto& e : j) out.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
  return out;
}

Json cells_json(const std::vector<VennCell>& cells) {
  Json a = Json::array();
  for (const auto& c : cells) a.push_back({{"vertices", c.vertices}, {"signature", c.signature}});
  return a;
}

std::vector<VennCell> cells_from(const Json& j) {
  std::vector<VennCell> out;
  for (const auto& c : j) out.push_back({c.at("vertices").get<VertexList>(), c.at("signature").get<std::vector<int>>()});
  return out;
}

Json rationals_json(const std::vector<std::vector<Rational>>& rows) {
  Json a = Json::array();
  for (const auto& row : rows) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(to_string(x));
    a.push_back(r);
  }
  return a;
}

std::vector<std::vector<Rational>> rationals_from(const Json& j) {
  std::vector<std::vector<Rational>> out;
  for (const auto& row : j) {
    out.emplace_back();
    for (const auto& x : row) out.back().push_back(parse_rational(x.get<std::string>()));
  }
  return out;
}

}  // namespace

Json spot_to_json(const DenseSpot& d) { return {{"side_a", d.side_a}, {"side_b", d.side_b}, {"edges", edges_json(d.edges)}}; }

DenseSpot spot_from_json(const Json& j) {
  return {j.at("side_a").get<VertexList>(), j.at("side_b").get<VertexList>(), edges_from(j.at("edges"))};
}

Json decomposition_to_json(const SparseDecomposition& d) {
  Json j;
  j["n"] = d.n;
  j["k"] = d.k;
  j["schedule"] = schedule_to_json(d.schedule);
  j["degree_gap"] = {{"band", d.gap.band},
                     {"omega_star", to_string(d.gap.omega_star)},
                     {"omega_star_star", to_string(d.gap.omega_star_star)},
                     {"pigeonhole_ok", d.gap.pigeonhole_ok},
                     {"repair_rounds", d.gap.repair_rounds},
                     {"within_bound", d.gap.within_bound},
                     {"deleted", edges_json(d.gap.deleted)}};
  j["psi"] = d.psi;
  j["psi_edges"] = edges_json(d.psi_edges);
  Json spots = Json::array();
  for (const auto& s : d.spots) spots.push_back(spot_to_json(s));
  j["spots"] = spots;
  j["g_exp"] = {{"vertices", d.expander.vertices},
                {"edges", edges_json(d.expander.g_exp.edges())},
                {"removed", d.expander.removed},
                {"deleted", edges_json(d.expander.deleted)}};
  j["venn"] = {{"cells", cells_json(d.cells.cells)}, {"small", cells_json(d.cells.small)}, {"small_cells", d.cells.small_cells}};
  Json matchings = Json::array();
  for (const auto& m : d.cell_graph.matchings) matchings.push_back(edges_json(m));
  j["cell_graph"] = {{"n", d.cell_graph.graph.n()},
                     {"edges", edges_json(d.cell_graph.graph.edges())},
                     {"max_degree", d.cell_graph.max_degree},
                     {"matchings", matchings}};
  Json pairs = Json::array();
  for (std::size_t i = 0; i < d.reg.pairs.size(); ++i) {
    Json p = regular_pair_to_json(d.reg.pairs[i]);
    p["matching"] = d.reg.pair_matching[i];
    pairs.push_back(p);
  }
  j["g_reg"] = {{"clusters", partition_to_json(d.reg.clusters)},
                {"cluster_cell", d.reg.cluster_cell},
                {"pairs", pairs},
                {"rounds", d.reg.rounds},
                {"budget_exhausted", d.reg.budget_exhausted},
                {"energy_history", rationals_json(d.reg.energy_history)},
                {"irregular_history", rationals_json(d.reg.irregular_history)}};
  const EdgeLedger& l = d.ledger;
  j["ledger"] = {{"total", l.total},
                 {"gap_deleted", l.gap_deleted},
                 {"psi_edges", l.psi_edges},
                 {"spot_edges", l.spot_edges},
                 {"exp_edges", l.exp_edges},
                 {"core_deleted", l.core_deleted},
                 {"leftover_pair_edges", l.leftover_pair_edges},
                 {"deleted_bound", to_string(l.deleted_bound)},
                 {"conserved", l.conserved},
                 {"bound_ok", l.bound_ok}};
  return j;
}

SparseDecomposition decomposition_from_json(const Json& j) {
  try {
    SparseDecomposition d;
    d.n = j.at("n").get<Vertex>();
    d.k = j.at("k").get<Vertex>();
    d.schedule = schedule_from_json(j.at("schedule"));
    const Json& gap = j.at("degree_gap");
    d.gap.band = gap.at("band").get<int>();
    d.gap.omega_star = parse_rational(gap.at("omega_star").get<std::string>());
    d.gap.omega_star_star = parse_rational(gap.at("omega_star_star").get<std::string>());
    d.gap.pigeonhole_ok = gap.at("pigeonhole_ok").get<bool>();
    d.gap.repair_rounds = gap.at("repair_rounds").get<int>();
    d.gap.within_bound = gap.at("within_bound").get<bool>();
    d.gap.deleted = edges_from(gap.at("deleted"));
    d.psi = j.at("psi").get<VertexList>();
    d.gap.psi = d.psi;
    d.psi_edges = edges_from(j.at("psi_edges"));
    for (const auto& s : j.at("spots")) d.spots.push_back(spot_from_json(s));
    const Json& exp = j.at("g_exp");
    d.expander.vertices = exp.at("vertices").get<VertexList>();
    d.expander.g_exp = Graph(d.n, edges_from(exp.at("edges")));
    d.expander.removed = exp.at("removed").get<VertexList>();
    d.expander.deleted = edges_from(exp.at("deleted"));
    const Json& venn = j.at("venn");
    d.cells.cells = cells_from(venn.at("cells"));
    d.cells.small = cells_from(venn.at("small"));
    d.cells.small_cells = venn.at("small_cells").get<VertexList>();
    const Json& cg = j.at("cell_graph");
    d.cell_graph.graph = Graph(cg.at("n").get<Vertex>(), edges_from(cg.at("edges")));
    d.cell_graph.max_degree = cg.at("max_degree").get<std::size_t>();
    for (const auto& m : cg.at("matchings")) d.cell_graph.matchings.push_back(edges_from(m));
    const Json& reg = j.at("g_reg");
    d.reg.clusters = cluster_partition_from_json(reg.at("clusters"));
    d.reg.cluster_cell = reg.at("cluster_cell").get<std::vector<int>>();
    for (const auto& p : reg.at("pairs")) {
      RegularPair rp = regular_pair_from_json(p);
      d.reg.pairs.push_back(std::move(rp));
      d.reg.pair_matching.push_back(p.at("matching").get<int>());
    }
    d.reg.rounds = reg.at("rounds").get<int>();
    d.reg.budget_exhausted = reg.at("budget_exhausted").get<bool>();
    d.reg.energy_history = rationals_from(reg.at("energy_history"));
    d.reg.irregular_history = rationals_from(reg.at("irregular_history"));
    const Json& l = j.at("ledger");
    d.ledger.total = l.at("total").get<std::size_t>();
    d.ledger.gap_deleted = l.at("gap_deleted").get<std::size_t>();
    d.ledger.psi_edges = l.at("psi_edges").get<std::size_t>();
    d.ledger.spot_edges = l.at("spot_edges").get<std::size_t>();
    d.ledger.exp_edges = l.at("exp_edges").get<std::size_t>();
    d.ledger.core_deleted = l.at("core_deleted").get<std::size_t>();
    d.ledger.leftover_pair_edges = l.at("leftover_pair_edges").get<std::size_t>();
    d.ledger.deleted_bound = parse_rational(l.at("deleted_bound").get<std::string>());
    d.ledger.conserved = l.at("conserved").get<bool>();
    d.ledger.bound_ok = l.at("bound_ok").get<bool>();
    return d;
  } catch (const Json::exception& e) {
    throw Error("schema", std::string("decomposition JSON: ") + e.what());
  }
}

std::string cell_graph_to_dot(const CellGraph& cg) {
  static const char* palette[] = {"red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan"};
  std::ostringstream out;
  out << "graph cells {\n";
  for (Vertex v = 0; v < cg.graph.n(); ++v) out << "  c" << v << ";\n";
  for (std::size_t i = 0; i < cg.matchings.size(); ++i) {
    for (const auto& [u, v] : cg.matchings[i]) {
      out << "  c" << u << " -- c" << v << " [color=" << palette[i % 8] << ", label=\"M" << i + 1 << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace lks
