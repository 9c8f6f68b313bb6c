#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lks/graph.hpp"
#include "lks/io.hpp"
#include "lks/types.hpp"

namespace lks {

// Disjoint classes plus an exceptional set; together they cover 0..n-1.
struct Partition {
  std::vector<VertexList> classes;  // each sorted
  VertexList exceptional;           // sorted
};

// Throws Error("bad-partition") unless the classes and the exceptional set
// are disjoint and cover exactly 0..n-1.
void validate_partition(const Partition& p, Vertex n);

enum class RegMode { kExact, kSampled, kCertificate };
std::string to_string(RegMode m);

struct RegOptions {
  RegMode mode = RegMode::kExact;
  int samples = 500;       // sampled mode
  std::uint64_t seed = 0;  // sampled mode
};

struct Witness {
  VertexList u;  // subset of side_a
  VertexList w;  // subset of side_b
};

struct RegularityVerdict {
  bool regular = true;
  std::optional<Witness> witness;
  RegMode method = RegMode::kExact;
  Rational eta;
  Rational pair_density;
  Rational witness_density;  // meaningful only with a witness
};

// Largest side accepted by exact mode.
inline constexpr std::size_t kExactSideLimit = 14;

// eta-regularity of (A, B): |d(A,B) - d(U,W)| < eta for all U, W with
// |U| > eta|A| and |W| > eta|B|.
//
// exact: for each U (increasing bitmask over A) and each admissible |W|, the
// W with the largest and smallest d(U,W) are the top and bottom vertices of B
// by degree into U, so testing those two is a complete search. The first
// witness found is returned. Error("exact-budget") when a side exceeds 14.
//
// sampled: `samples` random pairs with |U| drawn from
// [max(floor(eta|A|)+1, ceil(|A|/2)), |A|] and likewise for W. One-sided: a
// witness is always a genuine violation, regular=true is only evidence.
//
// certificate: all but eta|A| vertices of A have relative degree within eta
// of d, and all but eta|A|^2 ordered pairs of A have relative codegree
// within eta of d^2. regular=false then means "not certified", no witness.
RegularityVerdict check_regular_pair(const BipartitePair& pair, const Rational& eta, const RegOptions& options = {});

// True when the witness really violates eta-regularity of the pair.
bool witness_is_valid(const BipartitePair& pair, const Rational& eta, const Witness& w);

// Mean-square energy sum over ordered class pairs (i, j), i == j included,
// of |V_i||V_j|/n^2 * d(V_i, V_j)^2 with d(V_i, V_j) = e(V_i, V_j)/(|V_i||V_j|)
// counting ordered adjacent pairs. Exceptional vertices count as singleton
// classes, so moving vertices into the exceptional set is itself a refinement
// and energy never drops.
Rational energy(const Partition& p, const Graph& g);

// A violation found between classes class_u and class_w.
struct RefineWitness {
  int class_u = 0;
  int class_w = 0;
  VertexList u;
  VertexList w;
};

// Common refinement: each class is cut into the atoms of all witness sets
// touching it; atoms smaller than `min_class` go to the exceptional set.
// Classes keep their order, atoms within a class are ordered by smallest
// vertex. Error("bad-witness") if a witness set is not inside its class.
Partition refine_by_witnesses(const Partition& p, std::span<const RefineWitness> witnesses, std::size_t min_class = 2);

// Positive-density pair of clusters together with its verdict.
struct RegularPair {
  VertexList a;
  VertexList b;
  Rational density;
  RegularityVerdict verdict;
};

Json partition_to_json(const Partition& p);
Partition cluster_partition_from_json(const Json& j);
Json verdict_to_json(const RegularityVerdict& v);
Json regular_pair_to_json(const RegularPair& p);
// Witness sets are restored; the remaining verdict fields come from the pair.
RegularPair regular_pair_from_json(const Json& j);

}  // namespace lks
