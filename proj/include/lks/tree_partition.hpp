#pragma once

#include <string>
#include <vector>

#include "lks/graph.hpp"
#include "lks/io.hpp"
#include "lks/types.hpp"

namespace lks {

// A piece of the tree hanging off the cut set W.
struct Subtree {
  VertexList vertices;            // sorted
  std::vector<Edge> attachments;  // (W-vertex, subtree-vertex) tree edges
  bool internal = false;          // exactly two attachments
};

// Cut set W = W_A u W_B and the subtree families T_A, T_B.
struct TreePartition {
  VertexList w_a;
  VertexList w_b;
  std::vector<Subtree> trees_a;
  std::vector<Subtree> trees_b;

  std::size_t cut_size() const { return w_a.size() + w_b.size(); }
};

// Splits a tree with k edges into small subtrees around a cut set W:
//  (a) every subtree has fewer than tau*k vertices;
//  (b) no tree edge joins two different subtrees;
//  (c) |W| < 100/tau;
//  (d) W_A and W_B lie in opposite bipartition classes;
//  (e) every T_B tree attaches to exactly one W-vertex, which is in W_B;
//  (f) every T_A tree attaches to at most two W-vertices, all in W_A;
//  (g) the T_B trees hold fewer than k/2 vertices in total.
//
// Branches are chopped bottom-up once they reach tau*k vertices, W is closed
// under lowest common ancestors (so no piece touches more than two cut
// vertices), pieces touching both classes get a cut vertex next to the lower
// attachment, and the A/B orientation is chosen to satisfy (g).
//
// Errors: "tau-too-small" when tau*k < 2, "bad-tau" unless 0 < tau < 1,
// "edge-count" when the tree does not have k edges.
TreePartition partition_tree(const RootedTree& t, const Rational& tau, Vertex k);

struct PartitionViolation {
  std::string item;  // "a".."g", or "structure"
  std::string witness;
};

struct PartitionReport {
  bool pass = true;
  std::vector<PartitionViolation> violations;
};

// Rechecks every property from the tree itself; never trusts the stored
// attachment lists beyond comparing them with the real ones.
PartitionReport check_partition(const RootedTree& t, const TreePartition& p, const Rational& tau, Vertex k);

Json partition_to_json(const TreePartition& p);
TreePartition partition_from_json(const Json& j);

}  // namespace lks
