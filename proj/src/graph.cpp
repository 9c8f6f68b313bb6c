#include "lks/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace lks {

Graph::Graph(Vertex n, std::span<const Edge> edges) {
  if (n < 0) throw Error("bad-graph", "negative vertex count");
  adjacency_.resize(n);
  edges_.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error("bad-graph", "vertex id out of range in edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    if (u == v) throw Error("bad-graph", "self-loop at " + std::to_string(u));
    edges_.push_back(make_edge(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw Error("bad-graph", "duplicate edge (" + std::to_string(dup->first) + "," + std::to_string(dup->second) + ")");
  }
  for (const auto& [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n() || v >= n()) return false;
  const auto& a = adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u] : adjacency_[v];
  const Vertex target = adjacency_[u].size() <= adjacency_[v].size() ? v : u;
  return std::binary_search(a.begin(), a.end(), target);
}

std::size_t Graph::min_degree() const {
  std::size_t best = adjacency_.empty() ? 0 : adjacency_[0].size();
  for (const auto& nb : adjacency_) best = std::min(best, nb.size());
  return best;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& nb : adjacency_) best = std::max(best, nb.size());
  return best;
}

std::size_t Graph::degree_into(Vertex v, const std::vector<char>& members) const {
  std::size_t count = 0;
  for (Vertex u : adjacency_[v]) count += members[u] ? 1 : 0;
  return count;
}

Graph Graph::without_edges(std::span<const Edge> removed) const {
  std::vector<Edge> drop(removed.begin(), removed.end());
  for (auto& e : drop) e = make_edge(e.first, e.second);
  std::sort(drop.begin(), drop.end());
  std::vector<Edge> kept;
  kept.reserve(edges_.size());
  std::set_difference(edges_.begin(), edges_.end(), drop.begin(), drop.end(), std::back_inserter(kept));
  return Graph(n(), kept);
}

Graph Graph::induced_on(const std::vector<char>& keep) const {
  std::vector<Edge> kept;
  for (const auto& [u, v] : edges_) {
    if (keep[u] && keep[v]) kept.emplace_back(u, v);
  }
  return Graph(n(), kept);
}

std::vector<char> indicator(Vertex n, std::span<const Vertex> members) {
  std::vector<char> flag(n, 0);
  for (Vertex v : members) flag[v] = 1;
  return flag;
}

BipartitePair::BipartitePair(const Graph& host, VertexList side_a, VertexList side_b)
    : host_(&host), side_a_(sorted_unique(std::move(side_a))), side_b_(sorted_unique(std::move(side_b))) {
  for (Vertex v : side_a_) {
    if (v < 0 || v >= host.n()) throw Error("bad-pair", "vertex out of range");
  }
  for (Vertex v : side_b_) {
    if (v < 0 || v >= host.n()) throw Error("bad-pair", "vertex out of range");
  }
  VertexList common;
  std::set_intersection(side_a_.begin(), side_a_.end(), side_b_.begin(), side_b_.end(), std::back_inserter(common));
  if (!common.empty()) throw Error("bad-pair", "sides share vertex " + std::to_string(common.front()));
}

std::size_t BipartitePair::cross_edges() const {
  const auto in_b = indicator(host_->n(), side_b_);
  std::size_t count = 0;
  for (Vertex a : side_a_) count += host_->degree_into(a, in_b);
  return count;
}

Rational density(const BipartitePair& pair) {
  if (pair.side_a().empty() || pair.side_b().empty()) throw Error("empty-side", "density of a pair with an empty side");
  return Rational(pair.cross_edges(), pair.side_a().size() * pair.side_b().size());
}

double density_value(const BipartitePair& pair) {
  if (pair.side_a().empty() || pair.side_b().empty()) throw Error("empty-side", "density of a pair with an empty side");
  return static_cast<double>(pair.cross_edges()) /
         static_cast<double>(pair.side_a().size() * pair.side_b().size());
}

std::size_t min_degree_across(const BipartitePair& pair) {
  if (pair.side_a().empty() || pair.side_b().empty()) throw Error("empty-side", "min degree of a pair with an empty side");
  const Graph& g = pair.host();
  const auto in_a = indicator(g.n(), pair.side_a());
  const auto in_b = indicator(g.n(), pair.side_b());
  std::size_t best = g.n();
  for (Vertex a : pair.side_a()) best = std::min(best, g.degree_into(a, in_b));
  for (Vertex b : pair.side_b()) best = std::min(best, g.degree_into(b, in_a));
  return best;
}

RootedTree::RootedTree(Vertex n, std::span<const Edge> edges, Vertex root) : graph_(n, edges), root_(root) {
  if (n < 1) throw Error("not-a-tree", "a tree needs at least one vertex");
  if (root < 0 || root >= n) throw Error("not-a-tree", "root out of range");
  if (graph_.num_edges() != static_cast<std::size_t>(n - 1)) {
    throw Error("not-a-tree", "edge count " + std::to_string(graph_.num_edges()) + " != n-1");
  }
  parent_.assign(n, kNoVertex);
  children_.assign(n, {});
  depth_.assign(n, -1);
  depth_[root] = 0;
  std::deque<Vertex> queue{root};
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    bfs_order_.push_back(v);
    for (Vertex u : graph_.neighbors(v)) {
      if (depth_[u] >= 0) continue;
      depth_[u] = depth_[v] + 1;
      parent_[u] = v;
      children_[v].push_back(u);
      queue.push_back(u);
    }
  }
  if (bfs_order_.size() != static_cast<std::size_t>(n)) throw Error("not-a-tree", "graph is disconnected");
}

}  // namespace lks
