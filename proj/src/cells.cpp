#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "lks/decomposition.hpp"

namespace lks {

namespace {

// Core peeling that also reports the deletion order.
std::vector<char> peel(const Graph& g, std::size_t threshold, std::span<const Vertex> order, VertexList* removed) {
  const Vertex n = g.n();
  std::vector<std::size_t> deg(n);
  std::vector<char> alive(n, 1), queued(n, 0);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  VertexList visit;
  if (order.empty()) {
    visit.resize(n);
    for (Vertex v = 0; v < n; ++v) visit[v] = v;
  } else {
    visit.assign(order.begin(), order.end());
  }
  std::deque<Vertex> queue;
  for (Vertex v : visit) {
    if (deg[v] < threshold) {
      queued[v] = 1;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    alive[v] = 0;
    if (removed) removed->push_back(v);
    for (Vertex u : g.neighbors(v)) {
      if (!alive[u]) continue;
      --deg[u];
      if (deg[u] < threshold && !queued[u]) {
        queued[u] = 1;
        queue.push_back(u);
      }
    }
  }
  return alive;
}

}  // namespace

std::vector<char> min_degree_core(const Graph& g, std::size_t threshold, std::span<const Vertex> order) {
  return peel(g, threshold, order, nullptr);
}

Expander build_expander(const Graph& g, const std::vector<DenseSpot>& spots, Vertex k, const Rational& rho) {
  std::vector<Edge> spot_edges;
  for (const auto& d : spots) spot_edges.insert(spot_edges.end(), d.edges.begin(), d.edges.end());
  const Graph rest = g.without_edges(spot_edges);
  Expander out;
  const auto threshold = static_cast<std::size_t>(ceil_int(rho * k));
  const std::vector<char> alive = peel(rest, threshold, {}, &out.removed);
  out.g_exp = rest.induced_on(alive);
  for (Vertex v = 0; v < g.n(); ++v) {
    if (alive[v]) out.vertices.push_back(v);
  }
  for (const auto& [u, v] : rest.edges()) {
    if (!alive[u] || !alive[v]) out.deleted.emplace_back(u, v);
  }
  return out;
}

VennCells venn_cells(const Graph& g, const std::vector<DenseSpot>& spots, const Rational& alpha, Vertex k) {
  std::vector<std::vector<int>> signature(g.n());
  for (std::size_t j = 0; j < spots.size(); ++j) {
    for (Vertex v : spots[j].side_a) signature[v].push_back(static_cast<int>(2 * j));
    for (Vertex v : spots[j].side_b) signature[v].push_back(static_cast<int>(2 * j + 1));
  }
  std::map<std::vector<int>, VertexList> groups;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (!signature[v].empty()) groups[signature[v]].push_back(v);
  }
  VennCells out;
  for (auto& [sig, members] : groups) {
    VennCell cell{std::move(members), sig};
    if (Rational(cell.vertices.size()) < alpha * k) {
      out.small_cells.insert(out.small_cells.end(), cell.vertices.begin(), cell.vertices.end());
      out.small.push_back(std::move(cell));
    } else {
      out.cells.push_back(std::move(cell));
    }
  }
  std::sort(out.small_cells.begin(), out.small_cells.end());
  return out;
}

std::vector<int> vizing_edge_coloring(const Graph& g) {
  const Vertex n = g.n();
  const int colors = static_cast<int>(g.max_degree()) + 1;
  std::vector<std::vector<Vertex>> who(n, std::vector<Vertex>(colors, kNoVertex));
  std::map<Edge, int> color;

  auto is_free = [&](Vertex x, int c) { return who[x][c] == kNoVertex; };
  auto first_free = [&](Vertex x) {
    for (int c = 0; c < colors; ++c) {
      if (is_free(x, c)) return c;
    }
    throw Error("internal", "no free colour at a vertex");
  };
  auto color_of = [&](Vertex x, Vertex y) {
    const auto it = color.find(make_edge(x, y));
    return it == color.end() ? -1 : it->second;
  };
  auto paint = [&](Vertex x, Vertex y, int c) {
    who[x][c] = y;
    who[y][c] = x;
    color[make_edge(x, y)] = c;
  };
  auto wipe = [&](Vertex x, Vertex y) {
    const auto it = color.find(make_edge(x, y));
    who[x][it->second] = kNoVertex;
    who[y][it->second] = kNoVertex;
    color.erase(it);
  };

  for (const auto& [u, v] : g.edges()) {
    // Maximal fan of u starting at v.
    VertexList fan{v};
    std::set<Vertex> in_fan{v};
    for (bool grew = true; grew;) {
      grew = false;
      for (Vertex w : g.neighbors(u)) {
        const int c = color_of(u, w);
        if (c < 0 || in_fan.count(w) || !is_free(fan.back(), c)) continue;
        fan.push_back(w);
        in_fan.insert(w);
        grew = true;
        break;
      }
    }
    const int c = first_free(u);
    const int d = first_free(fan.back());
    if (c != d && !is_free(u, d)) {
      // Swap colours c and d along the alternating path leaving u on colour d.
      std::vector<std::pair<Edge, int>> path;
      Vertex x = u;
      int cur = d;
      while (!is_free(x, cur)) {
        const Vertex y = who[x][cur];
        path.push_back({{x, y}, cur});
        x = y;
        cur = cur == d ? c : d;
      }
      for (const auto& [e, col] : path) wipe(e.first, e.second);
      for (const auto& [e, col] : path) paint(e.first, e.second, col == d ? c : d);
    }
    std::size_t stop = fan.size();
    for (std::size_t i = 0; i < fan.size() && stop == fan.size(); ++i) {
      if (!is_free(fan[i], d)) continue;
      bool prefix_is_fan = true;
      for (std::size_t j = 0; j < i && prefix_is_fan; ++j) {
        const int cj = color_of(u, fan[j + 1]);
        prefix_is_fan = cj >= 0 && is_free(fan[j], cj);
      }
      if (prefix_is_fan) stop = i;
    }
    if (stop == fan.size()) throw Error("internal", "edge colouring found no fan rotation");
    for (std::size_t j = 0; j < stop; ++j) {
      const int cj = color_of(u, fan[j + 1]);
      wipe(u, fan[j + 1]);
      paint(u, fan[j], cj);
    }
    paint(u, fan[stop], d);
  }

  std::vector<int> out;
  out.reserve(g.num_edges());
  for (const auto& e : g.edges()) out.push_back(color.at(e));
  return out;
}

CellGraph build_cell_graph(const std::vector<VennCell>& cells, std::size_t num_spots) {
  std::vector<std::vector<Vertex>> on_side(2 * num_spots);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (int code : cells[i].signature) {
      if (code < 0 || static_cast<std::size_t>(code) >= on_side.size()) throw Error("bad-cell", "signature refers to a missing spot");
      on_side[code].push_back(static_cast<Vertex>(i));
    }
  }
  std::set<Edge> edges;
  for (std::size_t j = 0; j < num_spots; ++j) {
    for (Vertex x : on_side[2 * j]) {
      for (Vertex y : on_side[2 * j + 1]) edges.insert(make_edge(x, y));
    }
  }
  CellGraph out;
  out.graph = Graph(static_cast<Vertex>(cells.size()), std::vector<Edge>(edges.begin(), edges.end()));
  out.max_degree = out.graph.max_degree();
  const std::vector<int> colour = vizing_edge_coloring(out.graph);
  int used = 0;
  for (int c : colour) used = std::max(used, c + 1);
  out.matchings.resize(used);
  for (std::size_t i = 0; i < colour.size(); ++i) out.matchings[colour[i]].push_back(out.graph.edges()[i]);
  return out;
}

RegularizeResult regularize_cells(const Graph& spot_graph, const std::vector<VennCell>& cells, const CellGraph& cg,
                                  const ConstantSchedule& s, Vertex k, const RegularizeOptions& options) {
  const Vertex n = spot_graph.n();
  const Rational target = options.target_fraction.value_or(s.eta);
  RegularizeResult out;

  std::vector<int> cell_of(n, -1);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (Vertex v : cells[i].vertices) cell_of[v] = static_cast<int>(i);
  }

  // Clusters of equal size inside every cell.
  const auto size = static_cast<std::size_t>(std::max<std::int64_t>(1, floor_int(s.nu * k)));
  std::vector<char> placed(n, 0);
  for (const auto& cell : cells) {
    for (std::size_t start = 0; start + size <= cell.vertices.size(); start += size) {
      VertexList cluster(cell.vertices.begin() + start, cell.vertices.begin() + start + size);
      for (Vertex v : cluster) placed[v] = 1;
      out.clusters.classes.push_back(std::move(cluster));
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!placed[v]) out.clusters.exceptional.push_back(v);
  }

  // Spot edges carried by each matching.
  std::map<Edge, int> matching_of;
  for (std::size_t i = 0; i < cg.matchings.size(); ++i) {
    for (const auto& e : cg.matchings[i]) matching_of[e] = static_cast<int>(i);
  }
  std::vector<std::vector<Edge>> carried(cg.matchings.size());
  for (const auto& [u, v] : spot_graph.edges()) {
    if (cell_of[u] < 0 || cell_of[v] < 0 || cell_of[u] == cell_of[v]) continue;
    const auto it = matching_of.find(make_edge(cell_of[u], cell_of[v]));
    if (it != matching_of.end()) carried[it->second].emplace_back(u, v);
  }
  std::vector<Graph> per_matching;
  for (const auto& edges : carried) per_matching.emplace_back(n, edges);
  out.energy_history.resize(cg.matchings.size());
  out.irregular_history.resize(cg.matchings.size());

  std::uint64_t sample_seed = options.seed;
  for (int round = 0;; ++round) {
    std::vector<std::vector<int>> clusters_of_cell(cells.size());
    for (std::size_t c = 0; c < out.clusters.classes.size(); ++c) {
      clusters_of_cell[cell_of[out.clusters.classes[c].front()]].push_back(static_cast<int>(c));
    }
    out.cluster_cell.clear();
    for (const auto& cls : out.clusters.classes) out.cluster_cell.push_back(cell_of[cls.front()]);

    std::vector<RefineWitness> witnesses;
    std::vector<RegularPair> pairs;
    std::vector<int> pair_matching;
    bool all_within = true;
    for (std::size_t i = 0; i < cg.matchings.size(); ++i) {
      out.energy_history[i].push_back(energy(out.clusters, per_matching[i]));
      std::size_t tested = 0, irregular = 0;
      for (const auto& [x, y] : cg.matchings[i]) {
        for (int cu : clusters_of_cell[x]) {
          for (int cw : clusters_of_cell[y]) {
            const BipartitePair pair(spot_graph, out.clusters.classes[cu], out.clusters.classes[cw]);
            RegOptions mode;
            if (pair.side_a().size() > kExactSideLimit || pair.side_b().size() > kExactSideLimit) {
              mode = {RegMode::kSampled, options.samples, sample_seed++};
            }
            RegularityVerdict v = check_regular_pair(pair, s.eta, mode);
            ++tested;
            if (!v.regular) {
              ++irregular;
              witnesses.push_back({cu, cw, v.witness->u, v.witness->w});
            } else if (v.pair_density > 0) {
              pairs.push_back({pair.side_a(), pair.side_b(), v.pair_density, std::move(v)});
              pair_matching.push_back(static_cast<int>(i));
            }
          }
        }
      }
      const Rational fraction = tested == 0 ? Rational(0) : Rational(irregular, tested);
      out.irregular_history[i].push_back(fraction);
      all_within = all_within && fraction <= target;
    }
    out.pairs = std::move(pairs);
    out.pair_matching = std::move(pair_matching);
    if (all_within || witnesses.empty()) break;
    if (round >= options.budget) {
      out.budget_exhausted = true;
      break;
    }
    out.clusters = refine_by_witnesses(out.clusters, witnesses, options.min_class);
    ++out.rounds;
  }
  return out;
}

}  // namespace lks
