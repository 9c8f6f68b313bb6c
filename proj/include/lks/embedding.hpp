#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lks/decomposition.hpp"
#include "lks/graph.hpp"
#include "lks/io.hpp"
#include "lks/regularity.hpp"
#include "lks/schedule.hpp"
#include "lks/tree_partition.hpp"
#include "lks/types.hpp"

namespace lks {

// ---------------------------------------------------------------- state

enum class Tag : std::uint8_t { kNone, kGreedy, kAvoiding, kExpander, kRegular, kHub };
std::string to_string(Tag t);

// Partial injective map from tree vertices to host vertices.
class EmbeddingState {
 public:
  EmbeddingState() = default;
  EmbeddingState(Vertex tree_n, Vertex host_n);

  Vertex image(Vertex x) const { return mapping_[x]; }
  bool is_mapped(Vertex x) const { return mapping_[x] != kNoVertex; }
  bool is_used(Vertex v) const { return used_[v] != 0; }
  Tag tag(Vertex x) const { return log_[x]; }
  std::size_t num_mapped() const { return mapped_; }
  Vertex tree_n() const { return static_cast<Vertex>(mapping_.size()); }
  Vertex host_n() const { return static_cast<Vertex>(used_.size()); }
  const std::vector<Vertex>& mapping() const { return mapping_; }
  const std::vector<char>& used_mask() const { return used_; }
  VertexList used_set() const;

  // Error("state") when x is already mapped or v already used.
  void place(Vertex x, Vertex v, Tag tag);
  void unplace(Vertex x);

  // Raw access for validators and deserialization; no consistency checks.
  static EmbeddingState from_parts(std::vector<Vertex> mapping, std::vector<char> used, std::vector<Tag> log);

 private:
  std::vector<Vertex> mapping_;
  std::vector<char> used_;
  std::vector<Tag> log_;
  std::size_t mapped_ = 0;
};

struct EmbeddingReport {
  bool pass = true;
  std::vector<std::string> violations;  // "<item>: <witness>"
};

// Complete map, injective, every tree edge on a host edge, used set equal to
// the image, one tag per vertex. With require_complete=false unmapped tree
// vertices are allowed and only edges with both ends mapped are checked.
EmbeddingReport validate_embedding(const Graph& g, const RootedTree& t, const EmbeddingState& state,
                                   bool require_complete = true);

// ---------------------------------------------------------------- greedy

struct GreedyResult {
  bool ok = false;
  EmbeddingState state;
  Vertex stuck = kNoVertex;  // tree vertex without an image
};

// BFS order from the root; the root goes to a host vertex of largest degree,
// every other vertex to the unused neighbour of its parent's image of largest
// degree. Always succeeds when min degree >= k. Error("edge-count") when t
// does not have k edges.
GreedyResult embed_greedy_min_degree(const Graph& g, const RootedTree& t, Vertex k);

// ---------------------------------------------------------------- oracle

enum class OracleVerdict { kYes, kNo, kTimeout };
std::string to_string(OracleVerdict v);

struct OracleResult {
  OracleVerdict verdict = OracleVerdict::kNo;
  std::vector<Vertex> mapping;  // tree vertex -> host vertex when kYes
  std::uint64_t nodes = 0;
};

// Backtracking over a DFS order of t from its centroid, children by
// decreasing subtree size. A host vertex is a candidate for x only if it has
// at least as many unused neighbours as x has children, and degree >= deg(x).
OracleResult oracle_contains(const Graph& g, const RootedTree& t,
                             std::chrono::milliseconds time_cap = std::chrono::milliseconds(10000));

// ---------------------------------------------------------------- global structure

struct GlobalStructure {
  VertexList big_l;                // deg >= (1+eps)k
  VertexList x_set;
  VertexList y_set;
  std::vector<RegularPair> matching;
  VertexList q_set;                // derived
  std::size_t cut_degree = 0;      // threshold used for item (i)
};

// ceil(100/tau).
std::size_t literal_cut_degree(const ConstantSchedule& s);

// (Psi u V(G_exp) u frak_A u L u V(M)) minus (X u Y).
VertexList structure_q(Vertex n, const SparseDecomposition& d, const VertexList& big_l,
                       const std::vector<RegularPair>& matching, const VertexList& x, const VertexList& y);

struct StructureOptions {
  std::optional<std::size_t> cut_degree;  // default literal_cut_degree
  bool augment = true;                    // add L-to-rest regular pairs
  int seeds = 64;                         // seed-and-grow attempts
};

struct StructureResult {
  std::optional<GlobalStructure> structure;
  std::string reason;               // on failure
  std::vector<std::string> trace;   // peel log
};

// Heuristic search: M from disjoint regular pairs of G_reg that reach outside
// Psi u V(G_exp) u frak_A u L, plus pairs between L and uncovered vertices
// with clusters of max(1, floor(mu k)) vertices; X/Y from a max-cut split of
// the remaining L, peeled until (i)-(iii) hold; seed-and-grow from single
// X-Y edges when peeling empties a side; the last M pair is dropped and the
// search retried when everything fails.
StructureResult find_global_structure(const Graph& g, const SparseDecomposition& d, Vertex k,
                                      const ConstantSchedule& s, const StructureOptions& options = {});

struct StructureViolation {
  std::string item;  // "i".."iv", "sets", "M", "Q"
  std::string witness;
};

struct StructureReport {
  bool pass = true;
  std::vector<StructureViolation> violations;
};

// Exact recheck of (i) with gs.cut_degree, (ii), (iii), (iv), the regular
// matching (disjoint pairs, clusters of at least max(1, floor(mu k))
// vertices, positive density, eta-regular rechecked exactly up to 14 per side
// and sampled above) and the stored Q.
StructureReport verify_global_structure(const Graph& g, const SparseDecomposition& d, const GlobalStructure& gs,
                                        Vertex k, const ConstantSchedule& s);

// ---------------------------------------------------------------- strategies

// A subtree hanging from an already mapped tree vertex.
struct PieceTask {
  VertexList order;              // BFS from the piece root; parents come first
  Vertex attach = kNoVertex;     // mapped tree vertex the piece hangs from
  Vertex pre_tail = kNoVertex;   // piece vertex adjacent to the tail, if internal
};

// `vertices` must be connected in t with exactly one vertex whose t-parent
// lies outside; `in_w` marks the cut set, whose member below the piece (if
// any) is the tail.
PieceTask make_piece(const RootedTree& t, const VertexList& vertices, const std::vector<char>& in_w);

struct PlacementRules {
  const std::vector<char>* blocked = nullptr;     // host vertices off limits (X u Y)
  const std::vector<char>* return_set = nullptr;  // pre_tail needs an unused neighbour here
};

struct StepResult {
  bool ok = false;
  std::string error;
  Json detail;
};

struct HubCheck {
  std::size_t u_size = 0;
  std::size_t u_cap_psi = 0;
  std::size_t u_minus_psi = 0;
  std::size_t u_tilde = 0;
  Rational lhs;            // |U~| * lambda k / 2
  Rational rhs;            // Omega* k |U \ Psi|
  bool applicable = false; // precondition held and U~ nonempty
  bool holds = true;
};

struct EmbedTrace {
  std::vector<HubCheck> hub;
  std::vector<std::size_t> expander_u_degree;  // U-neighbours of each expander image when placed
  Rational expander_u_bound;                   // rho k / 3
};

// Root on a neighbour of the anchor in frak_A \ U inside a spot D with
// |U n V(D)| <= gamma^2 k, the rest greedily along D's edges.
// Errors: "precondition" (< beta k neighbours in frak_A \ U), "avoiding-exhausted".
StepResult embed_in_dense_spot(EmbeddingState& state, const Graph& g, const SparseDecomposition& d,
                               const RootedTree& t, const PieceTask& piece, Vertex anchor_image,
                               const ConstantSchedule& s, Vertex k, const PlacementRules& rules = {});

// Each vertex on an unused G_exp-neighbour of its parent's image (for the
// root: a G-neighbour of the anchor inside V(G_exp)) with >= rho k/2 unused
// G_exp-neighbours and < rho k/3 G_exp-neighbours in U other than the parent
// image. Errors: "precondition", "expander-stuck" (detail holds the (U, N_v)
// pair), "no-return".
StepResult embed_in_expander(EmbeddingState& state, const Graph& g, const Graph& g_exp, const RootedTree& t,
                             const PieceTask& piece, Vertex anchor_image, const ConstantSchedule& s, Vertex k,
                             const PlacementRules& rules = {}, EmbedTrace* trace = nullptr);

// Levels alternate between the clusters, the root in the cluster the anchor
// sees best; every image keeps >= (d - eta) * free(opposite) unused
// cross-neighbours. Errors: "precondition", "pair-full", "pair-stuck", "no-return".
StepResult embed_in_regular_pair(EmbeddingState& state, const Graph& g, const RegularPair& pair, const RootedTree& t,
                                 const PieceTask& piece, Vertex anchor_image, const Rational& eta, Vertex k,
                                 const PlacementRules& rules = {});

struct HubResult {
  bool ok = false;
  std::string error;  // "hub-precondition", "hub-exhausted"
  VertexList children;
  HubCheck check;
};

// U~ = {u : deg_{G'}(u, U) >= lambda k}; returns child_count unused,
// unblocked G'-neighbours of the anchor outside U~. `g_prime` is the graph
// after the degree-gap deletion, where every vertex outside Psi has degree
// below Omega* k.
HubResult embed_via_hub(const EmbeddingState& state, const Graph& g_prime, const std::vector<char>& in_psi,
                        std::size_t child_count, Vertex anchor_image, const ConstantSchedule& s, Vertex k,
                        const PlacementRules& rules = {}, EmbedTrace* trace = nullptr);

// Whole piece through Psi: the root on the anchor's Psi-neighbour (or via
// embed_via_hub when the anchor is in Psi), children of Psi images via
// embed_via_hub, other vertices on unused neighbours outside U~.
StepResult embed_piece_via_hub(EmbeddingState& state, const Graph& g, const SparseDecomposition& d,
                               const RootedTree& t, const PieceTask& piece, Vertex anchor_image,
                               const ConstantSchedule& s, Vertex k, const PlacementRules& rules = {},
                               EmbedTrace* trace = nullptr);

// ---------------------------------------------------------------- pipeline

struct EmbedOptions {
  DecomposeOptions decompose;
  StructureOptions structure;  // cut_degree defaults to |W| here
};

struct EmbedFailure {
  std::string stage;     // "partition", "structure", "cut-edges", "subtree", ...
  int subtree = -1;
  std::vector<std::string> trail;
  std::string reason;
};

struct EmbedOutcome {
  bool success = false;
  bool fast_path = false;
  bool soundness_breach = false;  // a produced embedding failed validation
  EmbeddingState state;
  std::optional<EmbedFailure> failure;
  EmbedTrace trace;
};

// Fast path: greedy when min degree >= k. Otherwise decompose, partition T
// with tau_T = max(1/4, 2/k), search the global structure with cut degree
// |W|, map W_A into X and W_B into Y along T's cut edges, then embed every
// piece from its anchor: avoiding, expander, regular pair, hub, in that
// order among the applicable ones, with one fallback to the next applicable
// strategy. X u Y only ever hosts cut vertices.
EmbedOutcome embed_tree(const Graph& g, const RootedTree& t, Vertex k, const ConstantSchedule& s,
                        const EmbedOptions& options = {});

// ---------------------------------------------------------------- serialization

Json embedding_to_json(const EmbeddingState& state, bool valid);
EmbeddingState embedding_from_json(const Json& j, Vertex host_n);
Json failure_to_json(const EmbedFailure& f);
Json structure_to_json(const GlobalStructure& gs);
GlobalStructure structure_from_json(const Json& j);
Json hub_check_to_json(const HubCheck& h);

}  // namespace lks
