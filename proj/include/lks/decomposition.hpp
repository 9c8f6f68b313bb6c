#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lks/graph.hpp"
#include "lks/io.hpp"
#include "lks/regularity.hpp"
#include "lks/schedule.hpp"
#include "lks/types.hpp"

namespace lks {

// ---------------------------------------------------------------- degree gap

struct DegreeGap {
  Graph g_prime;
  VertexList psi;  // degree >= omega_star_star * k in g_prime
  Rational omega_star;
  Rational omega_star_star;
  int band = 1;                // Omega_i = 4^i, band i = [4^i k, 4^(i+1) k)
  bool pigeonhole_ok = true;   // the chosen band carried <= eps*k*n degree
  std::vector<Edge> deleted;   // sorted
  int repair_rounds = 0;
  bool within_bound = true;    // |deleted| <= 2 eps k n
};

// Picks the first band i in 1..ceil(1/eps)+1 whose vertices have total degree
// <= eps*k*n (the band of least total degree if none does), deletes all edges
// at those vertices, then keeps deleting the edges of vertices whose degree
// dropped into the band until none is left. Error("gap-repair-diverged")
// after ceil(1/eps)+1 repair rounds.
DegreeGap find_degree_gap(const Graph& g, Vertex k, const ConstantSchedule& s);

// ---------------------------------------------------------------- dense spots

// Bipartite subgraph (side_a, side_b; edges) of a host graph.
struct DenseSpot {
  VertexList side_a;
  VertexList side_b;
  std::vector<Edge> edges;  // sorted, normalized
};

// Which candidate the searcher tries first from each seed vertex: the
// radius-2 ball split by BFS parity, or the star {v} vs N(v).
enum class SpotSearch { kBallFirst, kStarFirst };
std::string to_string(SpotSearch s);
SpotSearch parse_spot_search(const std::string& name);

// Sides disjoint and nonempty, every edge is a host edge across the sides,
// density > gamma and minimum degree > gamma*k over the spot's own edges.
bool is_dense_spot(const Graph& g, const DenseSpot& d, Vertex k, const Rational& gamma);

// Peeling heuristic: seeds by decreasing degree; from each seed the candidate
// pair loses its vertex of least cross degree until the minimum degree
// exceeds gamma*k and the density exceeds gamma, or a side empties.
std::optional<DenseSpot> find_dense_spot(const Graph& g, Vertex k, const Rational& gamma,
                                         SpotSearch order = SpotSearch::kBallFirst);

// Exhaustive search over all disjoint pairs of vertices of degree > gamma*k
// (all cross edges taken). Returns a spot with the most edges.
// Error("exact-budget") when more than 14 such vertices exist.
std::optional<DenseSpot> find_dense_spot_exact(const Graph& g, Vertex k, const Rational& gamma);
inline constexpr std::size_t kExactSpotLimit = 14;

// Greedy edge-disjoint cover: find a spot, remove its edges, repeat. When the
// heuristic finds nothing and at most 14 candidate vertices remain, the exact
// search gets the last word.
std::vector<DenseSpot> extract_dense_spots(const Graph& g, Vertex k, const Rational& gamma,
                                           SpotSearch order = SpotSearch::kBallFirst);

// ---------------------------------------------------------------- expander

// Vertices surviving repeated deletion of vertices of degree < threshold,
// visiting candidates in the given order (0..n-1 when empty).
std::vector<char> min_degree_core(const Graph& g, std::size_t threshold, std::span<const Vertex> order = {});

struct Expander {
  Graph g_exp;
  VertexList vertices;        // survivors (V(G_exp))
  VertexList removed;         // in deletion order
  std::vector<Edge> deleted;  // edges lost by the deletions
};

// g minus the spot edges, cleaned to its ceil(rho*k)-core (id order).
Expander build_expander(const Graph& g, const std::vector<DenseSpot>& spots, Vertex k, const Rational& rho);

// ---------------------------------------------------------------- Venn cells

struct VennCell {
  VertexList vertices;
  std::vector<int> signature;  // sorted codes 2*spot + side (side 0 = side_a)
};

struct VennCells {
  std::vector<VennCell> cells;  // size >= alpha*k, signature order
  std::vector<VennCell> small;  // size < alpha*k
  VertexList small_cells;       // union of the small cells
};

VennCells venn_cells(const Graph& g, const std::vector<DenseSpot>& spots, const Rational& alpha, Vertex k);

// ---------------------------------------------------------------- cell graph

struct CellGraph {
  Graph graph;                                // vertex i = cells[i]
  std::vector<std::vector<Edge>> matchings;   // proper colour classes
  std::size_t max_degree = 0;
};

// Proper edge colouring with at most max_degree+1 colours (Misra-Gries).
// Returns the colour of every edge of g.edges(), same order.
std::vector<int> vizing_edge_coloring(const Graph& g);

// Joins X and Y when some spot has X inside one side and Y inside the other.
CellGraph build_cell_graph(const std::vector<VennCell>& cells, std::size_t num_spots);

// ---------------------------------------------------------------- regularization

struct RegularizeOptions {
  int budget = 20;           // refinement rounds
  int samples = 200;         // sampled tests for clusters above 14 vertices
  std::uint64_t seed = 0;
  std::optional<Rational> target_fraction;  // default eta
  std::size_t min_class = 2;
};

struct RegularizeResult {
  Partition clusters;                 // over all vertices of the host
  std::vector<int> cluster_cell;      // cell of each class
  std::vector<RegularPair> pairs;     // final positive-density regular pairs
  std::vector<int> pair_matching;     // matching each pair sits on
  std::vector<std::vector<Rational>> energy_history;      // [matching][round]
  std::vector<std::vector<Rational>> irregular_history;   // [matching][round]
  int rounds = 0;                     // refinement steps applied
  bool budget_exhausted = false;
};

// `spot_graph` holds the spot edges. Cells are cut into clusters of
// max(1, floor(nu*k)) vertices (remainders exceptional); every round tests
// all cluster pairs on matching edges (exact up to 14 vertices per side,
// sampled above), refines once with all witnesses, and stops when every
// matching has at most the target fraction of irregular pairs.
RegularizeResult regularize_cells(const Graph& spot_graph, const std::vector<VennCell>& cells, const CellGraph& cg,
                                  const ConstantSchedule& s, Vertex k, const RegularizeOptions& options = {});

// ---------------------------------------------------------------- pipeline

struct DecomposeOptions {
  SpotSearch spot_search = SpotSearch::kBallFirst;
  RegularizeOptions regularize;
  int expander_rounds = 32;
};

struct EdgeLedger {
  std::size_t total = 0;
  std::size_t gap_deleted = 0;
  std::size_t psi_edges = 0;
  std::size_t spot_edges = 0;
  std::size_t exp_edges = 0;
  std::size_t core_deleted = 0;
  std::size_t leftover_pair_edges = 0;  // spot edges outside the final regular pairs
  Rational deleted_bound;               // (2 eps + rho) k n
  bool conserved = false;
  bool bound_ok = false;
};

struct SparseDecomposition {
  Vertex n = 0;
  Vertex k = 0;
  ConstantSchedule schedule;  // omega values from the chosen band
  DegreeGap gap;
  VertexList psi;
  std::vector<Edge> psi_edges;
  std::vector<DenseSpot> spots;
  Expander expander;
  VennCells cells;
  CellGraph cell_graph;
  RegularizeResult reg;
  EdgeLedger ledger;
};

SparseDecomposition decompose(const Graph& g, Vertex k, const ConstantSchedule& s, const DecomposeOptions& options = {});

struct AuditReport {
  bool pass = true;
  std::vector<std::string> violations;
};

// Independent recheck of every structural claim of a decomposition.
AuditReport audit_decomposition(const Graph& g, const SparseDecomposition& d);

// ---------------------------------------------------------------- avoiding

struct AvoidingReport {
  bool pass = true;
  Rational bound;                  // beta*k
  std::size_t sets_checked = 0;
  std::size_t worst_count = 0;
  VertexList worst_x;
  VertexList worst_exceptional;    // exceptional vertices for worst_x
  std::vector<std::size_t> counts; // per given X (empty for exhaustive runs)
};

// For each X: vertices v of the small cells with no spot D containing v and
// |X n V(D)| <= gamma^2 k. Pass iff every count is <= beta*k.
// Error("Lambda-violation") when some |X| > Lambda*k.
AvoidingReport check_avoiding(const Graph& g, const std::vector<DenseSpot>& spots, const VertexList& small_cells,
                              const std::vector<VertexList>& x_sets, const ConstantSchedule& s, Vertex k);

// Every X with |X| <= floor(Lambda*k). Error("exhaustive-budget") above 2^24 sets.
AvoidingReport check_avoiding_exhaustive(const Graph& g, const std::vector<DenseSpot>& spots,
                                         const VertexList& small_cells, const ConstantSchedule& s, Vertex k);

// ---------------------------------------------------------------- serialization

Json spot_to_json(const DenseSpot& d);
DenseSpot spot_from_json(const Json& j);
Json decomposition_to_json(const SparseDecomposition& d);
SparseDecomposition decomposition_from_json(const Json& j);
std::string cell_graph_to_dot(const CellGraph& cg);

}  // namespace lks
