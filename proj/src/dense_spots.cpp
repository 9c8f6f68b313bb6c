#include <algorithm>
#include <bit>
#include <numeric>

#include "lks/decomposition.hpp"

namespace lks {

namespace {

// Smallest integer degree strictly above gamma*k.
std::size_t degree_needed(const Rational& gamma, Vertex k) { return static_cast<std::size_t>(floor_int(gamma * k) + 1); }

bool dense_enough(std::size_t edges, std::size_t a, std::size_t b, const Rational& gamma) {
  return Rational(edges) > gamma * a * b;
}

DenseSpot make_spot(const Graph& g, VertexList a, VertexList b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  DenseSpot d{std::move(a), std::move(b), {}};
  const auto in_b = indicator(g.n(), d.side_b);
  for (Vertex u : d.side_a) {
    for (Vertex w : g.neighbors(u)) {
      if (in_b[w]) d.edges.push_back(make_edge(u, w));
    }
  }
  std::sort(d.edges.begin(), d.edges.end());
  return d;
}

std::optional<DenseSpot> try_star(const Graph& g, Vertex v, std::size_t needed, const Rational& gamma) {
  if (needed > 1 || g.degree(v) < needed || gamma >= 1) return std::nullopt;
  return make_spot(g, {v}, VertexList(g.neighbors(v).begin(), g.neighbors(v).end()));
}

std::optional<DenseSpot> try_ball(const Graph& g, Vertex v, std::size_t needed, const Rational& gamma) {
  const Vertex n = g.n();
  std::vector<int> dist(n, -1);
  VertexList ball{v};
  dist[v] = 0;
  for (std::size_t head = 0; head < ball.size(); ++head) {
    const Vertex x = ball[head];
    if (dist[x] == 2) continue;
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        ball.push_back(y);
      }
    }
  }
  std::sort(ball.begin(), ball.end());
  // side + 1 for members, 0 otherwise
  std::vector<int> member(n, 0);
  for (Vertex x : ball) member[x] = dist[x] % 2 + 1;

  // Local max-cut: move a vertex when most of its ball neighbours share its side.
  for (int pass = 0; pass < 4; ++pass) {
    bool changed = false;
    for (Vertex x : ball) {
      if (x == v) continue;
      int same = 0, cross = 0;
      for (Vertex y : g.neighbors(x)) {
        if (!member[y]) continue;
        (member[y] == member[x] ? same : cross) += 1;
      }
      if (same > cross) {
        member[x] = 3 - member[x];
        changed = true;
      }
    }
    if (!changed) break;
  }

  std::vector<std::size_t> cross(n, 0);
  std::size_t size[3] = {0, 0, 0};
  std::size_t edges = 0;
  for (Vertex x : ball) {
    ++size[member[x]];
    for (Vertex y : g.neighbors(x)) {
      if (member[y] && member[y] != member[x]) ++cross[x];
    }
    if (member[x] == 1) edges += cross[x];
  }
  while (size[1] > 0 && size[2] > 0) {
    Vertex worst = kNoVertex;
    for (Vertex x : ball) {
      if (member[x] && (worst == kNoVertex || cross[x] < cross[worst])) worst = x;
    }
    if (cross[worst] >= needed && dense_enough(edges, size[1], size[2], gamma)) {
      VertexList a, b;
      for (Vertex x : ball) {
        if (member[x] == 1) a.push_back(x);
        if (member[x] == 2) b.push_back(x);
      }
      return make_spot(g, std::move(a), std::move(b));
    }
    for (Vertex y : g.neighbors(worst)) {
      if (member[y] && member[y] != member[worst]) --cross[y];
    }
    edges -= cross[worst];
    --size[member[worst]];
    member[worst] = 0;
  }
  return std::nullopt;
}

}  // namespace

std::string to_string(SpotSearch s) { return s == SpotSearch::kBallFirst ? "ball-first" : "star-first"; }

SpotSearch parse_spot_search(const std::string& name) {
  if (name == "ball-first") return SpotSearch::kBallFirst;
  if (name == "star-first") return SpotSearch::kStarFirst;
  throw Error("bad-option", "unknown spot search \"" + name + "\"");
}

bool is_dense_spot(const Graph& g, const DenseSpot& d, Vertex k, const Rational& gamma) {
  if (d.side_a.empty() || d.side_b.empty() || d.edges.empty()) return false;
  if (sorted_unique(d.side_a).size() != d.side_a.size() || sorted_unique(d.side_b).size() != d.side_b.size()) return false;
  std::vector<int> side(g.n(), 0);
  for (Vertex v : d.side_a) {
    if (v < 0 || v >= g.n()) return false;
    side[v] = 1;
  }
  for (Vertex v : d.side_b) {
    if (v < 0 || v >= g.n() || side[v]) return false;
    side[v] = 2;
  }
  std::vector<std::size_t> deg(g.n(), 0);
  std::vector<Edge> seen;
  for (const auto& [u, w] : d.edges) {
    if (!g.has_edge(u, w) || side[u] == 0 || side[w] == 0 || side[u] == side[w]) return false;
    seen.push_back(make_edge(u, w));
    ++deg[u];
    ++deg[w];
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  const std::size_t needed = degree_needed(gamma, k);
  for (Vertex v : d.side_a) {
    if (deg[v] < needed) return false;
  }
  for (Vertex v : d.side_b) {
    if (deg[v] < needed) return false;
  }
  return dense_enough(d.edges.size(), d.side_a.size(), d.side_b.size(), gamma);
}

std::optional<DenseSpot> find_dense_spot(const Graph& g, Vertex k, const Rational& gamma, SpotSearch order) {
  const std::size_t needed = degree_needed(gamma, k);
  VertexList seeds;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.degree(v) >= needed) seeds.push_back(v);
  }
  std::stable_sort(seeds.begin(), seeds.end(), [&](Vertex x, Vertex y) { return g.degree(x) > g.degree(y); });
  for (Vertex v : seeds) {
    std::optional<DenseSpot> found;
    if (order == SpotSearch::kStarFirst) {
      found = try_star(g, v, needed, gamma);
      if (!found) found = try_ball(g, v, needed, gamma);
    } else {
      found = try_ball(g, v, needed, gamma);
      if (!found) found = try_star(g, v, needed, gamma);
    }
    if (found) return found;
  }
  return std::nullopt;
}

std::optional<DenseSpot> find_dense_spot_exact(const Graph& g, Vertex k, const Rational& gamma) {
  const std::size_t needed = degree_needed(gamma, k);
  VertexList cand;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.degree(v) >= needed) cand.push_back(v);
  }
  if (cand.size() > kExactSpotLimit) {
    throw Error("exact-budget", std::to_string(cand.size()) + " candidate vertices exceed the exact limit of 14");
  }
  const std::size_t c = cand.size();
  std::vector<std::uint32_t> adj(c, 0);
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      if (g.has_edge(cand[i], cand[j])) adj[i] |= 1u << j;
    }
  }
  const std::uint32_t full = c == 0 ? 0 : (1u << c) - 1;
  std::size_t best_edges = 0;
  std::uint32_t best_a = 0, best_b = 0;
  for (std::uint32_t a = 1; a <= full; ++a) {
    if (static_cast<std::size_t>(std::popcount(a)) < needed) continue;
    const std::uint32_t rest = full & ~a;
    for (std::uint32_t b = rest; b > 0; b = (b - 1) & rest) {
      if (static_cast<std::size_t>(std::popcount(b)) < needed) continue;
      const std::uint32_t both = a | b;
      if (both & (~both + 1) & b) continue;  // (a, b) and (b, a) are the same spot
      std::size_t edges = 0;
      bool ok = true;
      for (std::size_t i = 0; i < c && ok; ++i) {
        if (a >> i & 1u) {
          const std::size_t d = std::popcount(adj[i] & b);
          ok = d >= needed;
          edges += d;
        } else if (b >> i & 1u) {
          ok = static_cast<std::size_t>(std::popcount(adj[i] & a)) >= needed;
        }
      }
      if (ok && edges > best_edges && dense_enough(edges, std::popcount(a), std::popcount(b), gamma)) {
        best_edges = edges;
        best_a = a;
        best_b = b;
      }
    }
  }
  if (best_edges == 0) return std::nullopt;
  VertexList sa, sb;
  for (std::size_t i = 0; i < c; ++i) {
    if (best_a >> i & 1u) sa.push_back(cand[i]);
    if (best_b >> i & 1u) sb.push_back(cand[i]);
  }
  return make_spot(g, std::move(sa), std::move(sb));
}

std::vector<DenseSpot> extract_dense_spots(const Graph& g, Vertex k, const Rational& gamma, SpotSearch order) {
  std::vector<DenseSpot> spots;
  Graph work = g;
  const std::size_t needed = degree_needed(gamma, k);
  while (true) {
    std::optional<DenseSpot> found = find_dense_spot(work, k, gamma, order);
    if (!found) {
      std::size_t candidates = 0;
      for (Vertex v = 0; v < work.n(); ++v) candidates += work.degree(v) >= needed;
      if (candidates <= kExactSpotLimit) found = find_dense_spot_exact(work, k, gamma);
    }
    if (!found) break;
    work = work.without_edges(found->edges);
    spots.push_back(std::move(*found));
  }
  return spots;
}

}  // namespace lks
