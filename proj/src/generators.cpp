#include "lks/generators.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <random>
#include <set>

namespace lks {

namespace {

// Degree-preserving random double-edge swaps.
void randomize_by_swaps(std::vector<Edge>& edges, std::size_t rounds, std::mt19937_64& rng) {
  if (edges.size() < 2) return;
  std::set<Edge> present(edges.begin(), edges.end());
  std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
  std::bernoulli_distribution flip(0.5);
  for (std::size_t r = 0; r < rounds; ++r) {
    const std::size_t i = pick(rng);
    const std::size_t j = pick(rng);
    if (i == j) continue;
    auto [a, b] = edges[i];
    auto [c, d] = edges[j];
    if (flip(rng)) std::swap(c, d);
    if (a == c || a == d || b == c || b == d) continue;
    const Edge e1 = make_edge(a, d);
    const Edge e2 = make_edge(c, b);
    if (present.count(e1) || present.count(e2)) continue;
    present.erase(edges[i]);
    present.erase(edges[j]);
    present.insert(e1);
    present.insert(e2);
    edges[i] = e1;
    edges[j] = e2;
  }
}

// Same, for edges between ids < split and ids >= split; swaps keep them so.
void randomize_bipartite_by_swaps(std::vector<Edge>& edges, Vertex split, std::size_t rounds, std::mt19937_64& rng) {
  if (edges.size() < 2) return;
  // Orient every edge as (left, right).
  for (auto& e : edges) {
    if (e.first >= split) std::swap(e.first, e.second);
  }
  std::set<Edge> present(edges.begin(), edges.end());
  std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
  for (std::size_t r = 0; r < rounds; ++r) {
    const std::size_t i = pick(rng);
    const std::size_t j = pick(rng);
    if (i == j) continue;
    const auto [l1, r1] = edges[i];
    const auto [l2, r2] = edges[j];
    if (l1 == l2 || r1 == r2) continue;
    const Edge e1{l1, r2};
    const Edge e2{l2, r1};
    if (present.count(e1) || present.count(e2)) continue;
    present.erase(edges[i]);
    present.erase(edges[j]);
    present.insert(e1);
    present.insert(e2);
    edges[i] = e1;
    edges[j] = e2;
  }
  for (auto& e : edges) e = make_edge(e.first, e.second);
}

// Vertex i joined to i +- 1 .. i +- d/2, plus the antipode when d is odd.
std::vector<Edge> regular_circulant_edges(Vertex n, Vertex d) {
  std::set<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 1; j <= d / 2; ++j) edges.insert(make_edge(i, (i + j) % n));
    if (d % 2 == 1) edges.insert(make_edge(i, (i + n / 2) % n));
  }
  return {edges.begin(), edges.end()};
}

RootedTree tree_from_prufer(const VertexList& seq, Vertex n) {
  std::vector<Edge> edges;
  std::vector<int> degree(n, 1);
  for (Vertex v : seq) ++degree[v];
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  for (Vertex v : seq) {
    const Vertex leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, v);
    if (--degree[v] == 1) leaves.push(v);
  }
  const Vertex u = leaves.top();
  leaves.pop();
  const Vertex w = leaves.top();
  edges.emplace_back(u, w);
  return RootedTree(n, edges, 0);
}

std::string ahu_encode(const Graph& t, Vertex v, Vertex parent) {
  std::vector<std::string> parts;
  for (Vertex u : t.neighbors(v)) {
    if (u != parent) parts.push_back(ahu_encode(t, u, v));
  }
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (const auto& p : parts) out += p;
  return out + ")";
}

VertexList tree_centers(const Graph& t) {
  const Vertex n = t.n();
  if (n <= 2) {
    VertexList all(n);
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  std::vector<std::size_t> degree(n);
  VertexList layer;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = t.degree(v);
    if (degree[v] <= 1) layer.push_back(v);
  }
  Vertex remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<Vertex>(layer.size());
    VertexList next;
    for (Vertex v : layer) {
      for (Vertex u : t.neighbors(v)) {
        if (--degree[u] == 1) next.push_back(u);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

}  // namespace

Graph complete_graph(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph complete_bipartite(Vertex a, Vertex b) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  }
  return Graph(a + b, edges);
}

Graph circulant(Vertex n, const std::vector<Vertex>& offsets) {
  std::set<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex d : offsets) {
      const Vertex j = ((i + d) % n + n) % n;
      if (j != i) edges.insert(make_edge(i, j));
    }
  }
  return Graph(n, std::vector<Edge>(edges.begin(), edges.end()));
}

Graph disjoint_union(const std::vector<Graph>& graphs) {
  std::vector<Edge> edges;
  Vertex offset = 0;
  for (const auto& g : graphs) {
    for (const auto& [u, v] : g.edges()) edges.emplace_back(u + offset, v + offset);
    offset += g.n();
  }
  return Graph(offset, edges);
}

Graph gen_gnp(Vertex n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

Graph gen_random_bipartite(Vertex a, Vertex b, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = a; v < a + b; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(a + b, edges);
}

Graph gen_half_split(Vertex m) {
  std::vector<Edge> edges;
  for (Vertex half = 0; half < 2; ++half) {
    for (Vertex u = half * m; u < (half + 1) * m; ++u) {
      for (Vertex v = 2 * m + half * m; v < 2 * m + (half + 1) * m; ++v) edges.emplace_back(u, v);
    }
  }
  return Graph(4 * m, edges);
}

Graph gen_random_min_degree(Vertex n, Vertex min_degree, double p, std::uint64_t seed) {
  if (min_degree >= n) throw Error("infeasible", "min degree must be below n");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::set<Edge> edges;
  std::vector<Vertex> degree(n, 0);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) {
        edges.insert({u, v});
        ++degree[u];
        ++degree[v];
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    VertexList candidates;
    for (Vertex u = 0; u < n; ++u) {
      if (u != v && !edges.count(make_edge(u, v))) candidates.push_back(u);
    }
    std::shuffle(candidates.begin(), candidates.end(), rng);
    for (std::size_t i = 0; degree[v] < min_degree && i < candidates.size(); ++i) {
      edges.insert(make_edge(v, candidates[i]));
      ++degree[v];
      ++degree[candidates[i]];
    }
  }
  return Graph(n, std::vector<Edge>(edges.begin(), edges.end()));
}

Graph gen_lks_host(Vertex n, Vertex k, const Rational& eps, double p, std::uint64_t seed) {
  const auto core = static_cast<Vertex>(ceil_int((1 + eps) * n / 2));
  const auto need = static_cast<Vertex>(ceil_int((1 + eps) * k));
  if (k < 2 || core > n || need >= core) throw Error("infeasible", "core too small for the degree bound");
  std::vector<Edge> edges = gen_random_min_degree(core, need, p, seed).edges();
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<Vertex> count(1, k - 1);
  VertexList pool(core);
  std::iota(pool.begin(), pool.end(), 0);
  for (Vertex v = core; v < n; ++v) {
    std::shuffle(pool.begin(), pool.end(), rng);
    const Vertex c = std::min(count(rng), core);
    for (Vertex i = 0; i < c; ++i) edges.push_back(make_edge(pool[i], v));
  }
  return Graph(n, edges);
}

Graph gen_extremal_lks(Vertex k) {
  if (k < 3 || k % 2 == 0) throw Error("n-parity", "k must be odd and at least 3 so that n = k+1 is even");
  const Vertex n = k + 1;
  const Vertex clique_side = n / 2 - 1;
  std::vector<Edge> edges;
  for (Vertex u = 0; u < clique_side; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

VertexList extremal_lks_independent_set(Vertex k) {
  if (k < 3 || k % 2 == 0) throw Error("n-parity", "k must be odd and at least 3 so that n = k+1 is even");
  const Vertex n = k + 1;
  VertexList independent;
  for (Vertex v = n / 2 - 1; v < n; ++v) independent.push_back(v);
  return independent;
}

Figure2Instance gen_figure2(Vertex n, Vertex k, std::uint64_t seed) {
  if (n <= 0 || n % 9 != 0) throw Error("infeasible", "n must be a positive multiple of 9");
  if (k <= 0) throw Error("infeasible", "k must be positive");
  const Vertex m = n / 9;
  const Vertex big = 5 * m;
  const Vertex small = 4 * m;

  // Inside the big set: nearest integer to 0.7k with an even degree sum.
  const Rational exact_bb = Rational(7 * k, 10);
  Vertex bb = static_cast<Vertex>(floor_int(exact_bb + Rational(1, 2)));
  if ((static_cast<std::int64_t>(big) * bb) % 2 != 0) {
    const Vertex lo = bb - 1;
    const Vertex hi = bb + 1;
    bb = (exact_bb - lo <= hi - exact_bb) ? lo : hi;
  }
  // Across: 5m * bs = 4m * sb forces bs = 4t and sb = 5t.
  const Rational exact_bs = Rational(4 * k, 10);
  const Vertex t = static_cast<Vertex>(floor_int(exact_bs / 4 + Rational(1, 2)));
  const Vertex bs = 4 * t;
  const Vertex sb = 5 * t;
  if (bb < 0 || bb > big - 1 || t <= 0 || bs > small || sb > big) {
    throw Error("infeasible", "rounded degrees (" + std::to_string(bb) + "," + std::to_string(bs) + "," +
                                  std::to_string(sb) + ") are not realizable for n=" + std::to_string(n));
  }

  std::mt19937_64 rng(seed);
  VertexList big_order(big);
  std::iota(big_order.begin(), big_order.end(), 0);
  std::shuffle(big_order.begin(), big_order.end(), rng);

  std::vector<Edge> edges;
  Figure2Instance out;
  out.big_big_degree = bb;
  out.big_small_degree = bs;
  out.small_big_degree = sb;

  if (small % bs == 0) {
    // Complete blocks K_{sb, bs}: block j pairs sb big vertices with bs small ones.
    out.block_construction = true;
    const Vertex blocks = small / bs;
    for (Vertex j = 0; j < blocks; ++j) {
      for (Vertex a = 0; a < sb; ++a) {
        for (Vertex b = 0; b < bs; ++b) edges.emplace_back(big_order[j * sb + a], big + j * bs + b);
      }
    }
  } else {
    std::vector<Edge> across;
    for (Vertex i = 0; i < big; ++i) {
      for (Vertex j = 0; j < bs; ++j) {
        const Vertex s = static_cast<Vertex>((static_cast<std::int64_t>(i) * bs + j) % small);
        across.push_back(make_edge(big_order[i], big + s));
      }
    }
    randomize_bipartite_by_swaps(across, big, 20 * across.size(), rng);
    edges.insert(edges.end(), across.begin(), across.end());
  }

  std::vector<Edge> inside = regular_circulant_edges(big, bb);
  randomize_by_swaps(inside, 20 * inside.size(), rng);
  edges.insert(edges.end(), inside.begin(), inside.end());

  out.graph = Graph(n, edges);
  out.big.resize(big);
  std::iota(out.big.begin(), out.big.end(), 0);
  out.small.resize(small);
  std::iota(out.small.begin(), out.small.end(), big);
  return out;
}

TreeKind parse_tree_kind(const std::string& name) {
  if (name == "path") return TreeKind::kPath;
  if (name == "star") return TreeKind::kStar;
  if (name == "caterpillar") return TreeKind::kCaterpillar;
  if (name == "broom") return TreeKind::kBroom;
  if (name == "random") return TreeKind::kRandom;
  throw Error("bad-kind", "unknown tree kind '" + name + "'");
}

std::string to_string(TreeKind kind) {
  switch (kind) {
    case TreeKind::kPath: return "path";
    case TreeKind::kStar: return "star";
    case TreeKind::kCaterpillar: return "caterpillar";
    case TreeKind::kBroom: return "broom";
    case TreeKind::kRandom: return "random";
  }
  return "?";
}

RootedTree gen_tree(TreeKind kind, Vertex k, std::uint64_t seed) {
  if (k <= 0) throw Error("bad-k", "a tree needs k >= 1 edges");
  const Vertex n = k + 1;
  std::vector<Edge> edges;
  switch (kind) {
    case TreeKind::kPath:
      for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
      break;
    case TreeKind::kStar:
      for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
      break;
    case TreeKind::kCaterpillar: {
      const Vertex spine = (n + 1) / 2;
      for (Vertex v = 1; v < spine; ++v) edges.emplace_back(v - 1, v);
      for (Vertex v = spine; v < n; ++v) edges.emplace_back((v - spine) % spine, v);
      break;
    }
    case TreeKind::kBroom: {
      const Vertex handle = (k + 1) / 2;
      for (Vertex v = 1; v <= handle; ++v) edges.emplace_back(v - 1, v);
      for (Vertex v = handle + 1; v < n; ++v) edges.emplace_back(handle, v);
      break;
    }
    case TreeKind::kRandom: {
      if (n <= 2) {
        edges.emplace_back(0, 1);
        break;
      }
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<Vertex> pick(0, n - 1);
      VertexList seq(n - 2);
      for (auto& s : seq) s = pick(rng);
      return tree_from_prufer(seq, n);
    }
  }
  return RootedTree(n, edges, 0);
}

std::string canonical_form(const Graph& tree) {
  const VertexList centers = tree_centers(tree);
  if (centers.empty()) return "";
  if (centers.size() == 1) return ahu_encode(tree, centers[0], kNoVertex);
  // Two centers: encode both halves hanging off the central edge.
  const std::string a = ahu_encode(tree, centers[0], centers[1]);
  const std::string b = ahu_encode(tree, centers[1], centers[0]);
  return a < b ? "[" + a + b + "]" : "[" + b + a + "]";
}

std::vector<RootedTree> all_free_trees(Vertex order) {
  if (order < 1) return {};
  std::vector<std::vector<Edge>> level{{}};
  for (Vertex size = 2; size <= order; ++size) {
    std::set<std::string> seen;
    std::vector<std::vector<Edge>> next;
    for (const auto& edges : level) {
      for (Vertex attach = 0; attach < size - 1; ++attach) {
        auto grown = edges;
        grown.emplace_back(attach, size - 1);
        const std::string key = canonical_form(Graph(size, grown));
        if (seen.insert(key).second) next.push_back(std::move(grown));
      }
    }
    level = std::move(next);
  }
  std::vector<RootedTree> out;
  out.reserve(level.size());
  for (const auto& edges : level) out.emplace_back(order, edges, 0);
  return out;
}

Census lks_degree_census(const Graph& g, Vertex k, const Rational& eps) {
  const std::int64_t threshold = ceil_int((1 + eps) * k);
  Census c;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (static_cast<std::int64_t>(g.degree(v)) >= threshold) ++c.count_big;
  }
  c.satisfies = Rational(c.count_big) >= (1 + eps) * g.n() / 2;
  return c;
}

}  // namespace lks
