#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lks/types.hpp"

namespace lks {

// Undirected simple graph on vertex ids 0..n-1. Immutable after construction;
// neighbor lists are kept sorted so iteration order is deterministic.
class Graph {
 public:
  Graph() = default;
  // Throws Error("bad-graph") on loops, duplicate edges or out-of-range ids.
  Graph(Vertex n, std::span<const Edge> edges);
  Graph(Vertex n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  Vertex n() const { return static_cast<Vertex>(adjacency_.size()); }
  std::size_t num_edges() const { return edges_.size(); }

  // Edges with first < second, sorted lexicographically.
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool has_edge(Vertex u, Vertex v) const;

  std::size_t min_degree() const;
  std::size_t max_degree() const;

  // Number of neighbors of v inside `members` (a 0/1 indicator over vertices).
  std::size_t degree_into(Vertex v, const std::vector<char>& members) const;

  // Same vertex set, the given edges removed (edges absent from the graph are
  // ignored).
  Graph without_edges(std::span<const Edge> removed) const;
  // Same vertex set, only edges with both ends flagged in `keep`.
  Graph induced_on(const std::vector<char>& keep) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.edges_ == b.edges_ && a.n() == b.n(); }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
};

// 0/1 indicator vector over the vertices of a graph with n vertices.
std::vector<char> indicator(Vertex n, std::span<const Vertex> members);

// A pair of disjoint vertex sets (U, W) in a host graph. Density and cross
// degrees only count host edges with one end in each side.
class BipartitePair {
 public:
  BipartitePair(const Graph& host, VertexList side_a, VertexList side_b);

  const Graph& host() const { return *host_; }
  const VertexList& side_a() const { return side_a_; }
  const VertexList& side_b() const { return side_b_; }

  std::size_t cross_edges() const;

 private:
  const Graph* host_;
  VertexList side_a_;
  VertexList side_b_;
};

// |F| / (|U||W|); Error("empty-side") if either side is empty.
Rational density(const BipartitePair& pair);
double density_value(const BipartitePair& pair);

// Minimum over both sides of the degree into the opposite side.
std::size_t min_degree_across(const BipartitePair& pair);

// Rooted tree given by a parent array; the root's parent is kNoVertex.
class RootedTree {
 public:
  RootedTree() = default;
  // Throws Error("not-a-tree") unless the edges form a spanning tree on 0..n-1.
  RootedTree(Vertex n, std::span<const Edge> edges, Vertex root);

  Vertex n() const { return static_cast<Vertex>(parent_.size()); }
  std::size_t num_edges() const { return parent_.empty() ? 0 : parent_.size() - 1; }
  Vertex root() const { return root_; }
  Vertex parent(Vertex v) const { return parent_[v]; }
  std::span<const Vertex> children(Vertex v) const { return children_[v]; }
  std::span<const Vertex> neighbors(Vertex v) const { return graph_.neighbors(v); }
  std::size_t degree(Vertex v) const { return graph_.degree(v); }

  const Graph& as_graph() const { return graph_; }
  const std::vector<Edge>& edges() const { return graph_.edges(); }
  // Vertices in breadth-first order from the root (children by id).
  const VertexList& bfs_order() const { return bfs_order_; }
  // Bipartition class (0 or 1) of every vertex; the root has class 0.
  int side(Vertex v) const { return depth_[v] % 2; }
  int depth(Vertex v) const { return depth_[v]; }

  RootedTree rerooted(Vertex new_root) const { return RootedTree(n(), graph_.edges(), new_root); }

 private:
  Graph graph_;
  Vertex root_ = 0;
  VertexList parent_;
  std::vector<VertexList> children_;
  VertexList bfs_order_;
  std::vector<int> depth_;
};

}  // namespace lks
