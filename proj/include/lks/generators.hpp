#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lks/graph.hpp"
#include "lks/types.hpp"

namespace lks {

Graph complete_graph(Vertex n);
// Sides are 0..a-1 and a..a+b-1.
Graph complete_bipartite(Vertex a, Vertex b);
// Vertex i is joined to i +- d (mod n) for every d in offsets.
Graph circulant(Vertex n, const std::vector<Vertex>& offsets);
// Vertex ids of graphs[i] are shifted by the total order of graphs[0..i).
Graph disjoint_union(const std::vector<Graph>& graphs);
Graph gen_gnp(Vertex n, double p, std::uint64_t seed);
// Random bipartite graph, sides 0..a-1 and a..a+b-1, each cross edge with
// probability p.
Graph gen_random_bipartite(Vertex a, Vertex b, double p, std::uint64_t seed);
// Sides A = 0..2m-1 and B = 2m..4m-1, complete between the first halves and
// between the second halves, nothing else.
Graph gen_half_split(Vertex m);
// G(n, p) topped up with random edges until every degree is >= min_degree.
Graph gen_random_min_degree(Vertex n, Vertex min_degree, double p, std::uint64_t seed);

// K_{k+1} minus all edges inside the last n/2 + 1 vertices. The clique side
// is 0..n/2-2; everything from n/2-1 on is the independent set.
// Error("n-parity") unless k is odd and >= 3.
Graph gen_extremal_lks(Vertex k);

// LKS-style host: a core of ceil((1+eps)n/2) vertices (ids 0..) with
// G(core, p) topped up to minimum degree ceil((1+eps)k) inside the core, and
// every other vertex joined to between 1 and k-1 random core vertices.
// Error("infeasible") when the core cannot reach that degree.
Graph gen_lks_host(Vertex n, Vertex k, const Rational& eps, double p, std::uint64_t seed);
VertexList extremal_lks_independent_set(Vertex k);

// Layered graph with a big set of 5n/9 vertices and a small set of 4n/9.
struct Figure2Instance {
  Graph graph;
  VertexList big;    // ids 0..5n/9-1
  VertexList small;  // ids 5n/9..n-1
  Vertex big_big_degree = 0;    // realized 0.7k
  Vertex big_small_degree = 0;  // realized 0.4k
  Vertex small_big_degree = 0;  // realized 0.5k
  // True when the big-small edges form disjoint complete bipartite blocks.
  bool block_construction = false;
};

// Error("infeasible") when n is not a multiple of 9 or the rounded degrees
// admit no simple realization.
Figure2Instance gen_figure2(Vertex n, Vertex k, std::uint64_t seed = 0);

enum class TreeKind { kPath, kStar, kCaterpillar, kBroom, kRandom };

TreeKind parse_tree_kind(const std::string& name);
std::string to_string(TreeKind kind);

// A tree with exactly k edges rooted at 0. Random trees are uniform over
// labeled trees (Pruefer decoding). Error("bad-k") for k <= 0.
RootedTree gen_tree(TreeKind kind, Vertex k, std::uint64_t seed = 0);

// One representative per isomorphism class of trees with `order` vertices.
std::vector<RootedTree> all_free_trees(Vertex order);

// Isomorphism-invariant encoding of a free tree.
std::string canonical_form(const Graph& tree);

struct Census {
  std::size_t count_big = 0;
  bool satisfies = false;
};

// count_big = #{v : deg(v) >= ceil((1+eps)k)}; satisfies iff count_big >= (1+eps)n/2.
Census lks_degree_census(const Graph& g, Vertex k, const Rational& eps);

}  // namespace lks
