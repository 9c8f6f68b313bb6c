#include "lks/regularity.hpp"

#include <numeric>
#include <random>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "lks/generators.hpp"

namespace lks {
namespace {

using ::testing::ElementsAre;

VertexList range(Vertex from, Vertex to) {
  VertexList out(to - from);
  std::iota(out.begin(), out.end(), from);
  return out;
}

TEST(RegularPairTest, CompleteIsRegular) {
  const Graph g = complete_bipartite(8, 8);
  const BipartitePair pair(g, range(0, 8), range(8, 16));
  const RegularityVerdict v = check_regular_pair(pair, Rational(1, 10));
  EXPECT_TRUE(v.regular);
  EXPECT_FALSE(v.witness);
  EXPECT_EQ(v.pair_density, 1);
}

TEST(RegularPairTest, HalfSplitGivesPlantedWitness) {
  const Graph g = gen_half_split(4);
  const BipartitePair pair(g, range(0, 8), range(8, 16));
  const RegularityVerdict v = check_regular_pair(pair, Rational(2, 5));
  ASSERT_FALSE(v.regular);
  ASSERT_TRUE(v.witness);
  EXPECT_THAT(v.witness->u, ElementsAre(0, 1, 2, 3));
  EXPECT_THAT(v.witness->w, ElementsAre(8, 9, 10, 11));
  EXPECT_EQ(v.witness_density, 1);
  EXPECT_EQ(v.pair_density, Rational(1, 2));
  EXPECT_TRUE(witness_is_valid(pair, Rational(2, 5), *v.witness));
}

TEST(RegularPairTest, HalfSplitLargest) {
  // Sides of 12: with eta = 0.45 the smallest admissible subset has 6
  // vertices, so the first witness is the planted half. With eta = 0.4 a
  // 5-vertex part of it already violates and comes first.
  const Graph g = gen_half_split(6);
  const BipartitePair pair(g, range(0, 12), range(12, 24));
  const RegularityVerdict v = check_regular_pair(pair, Rational(9, 20));
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(v.witness->u, range(0, 6));
  EXPECT_EQ(v.witness->w, range(12, 18));
  const RegularityVerdict smaller = check_regular_pair(pair, Rational(2, 5));
  ASSERT_TRUE(smaller.witness);
  EXPECT_EQ(smaller.witness->u, range(0, 5));
}

TEST(RegularPairTest, EtaOneIsVacuous) {
  const Graph g = gen_half_split(4);
  const BipartitePair pair(g, range(0, 8), range(8, 16));
  for (RegMode m : {RegMode::kExact, RegMode::kSampled, RegMode::kCertificate}) {
    EXPECT_TRUE(check_regular_pair(pair, Rational(1), {m}).regular) << to_string(m);
  }
}

TEST(RegularPairTest, ExactBudget) {
  const Graph g = complete_bipartite(15, 3);
  try {
    check_regular_pair(BipartitePair(g, range(0, 15), range(15, 18)), Rational(1, 5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "exact-budget");
  }
}

TEST(RegularPairTest, CertificateSeparatesCompleteFromHalfSplit) {
  const Graph k = complete_bipartite(8, 8);
  EXPECT_TRUE(check_regular_pair(BipartitePair(k, range(0, 8), range(8, 16)), Rational(1, 10), {RegMode::kCertificate}).regular);
  const Graph h = gen_half_split(4);
  const auto v = check_regular_pair(BipartitePair(h, range(0, 8), range(8, 16)), Rational(1, 5), {RegMode::kCertificate});
  EXPECT_FALSE(v.regular);
  EXPECT_FALSE(v.witness);
}

TEST(RegularPairTest, RandomHalfDensitySampledRegular) {
  int regular = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = gen_random_bipartite(64, 64, 0.5, seed);
    const BipartitePair pair(g, range(0, 64), range(64, 128));
    regular += check_regular_pair(pair, Rational(1, 10), {RegMode::kSampled, 500, seed}).regular;
  }
  EXPECT_GE(regular, 99);
}

TEST(RegularPairTest, SampledNeverContradictsExact) {
  std::mt19937_64 rng(5);
  int irregular_seen = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Vertex na = 2 + trial % 9;
    const Vertex nb = 2 + (trial / 9) % 9;
    const Graph g = trial % 3 == 0 ? gen_half_split(1 + trial % 5) : gen_random_bipartite(na, nb, 0.3 + 0.1 * (trial % 5), trial);
    const Vertex split = trial % 3 == 0 ? g.n() / 2 : na;
    const BipartitePair pair(g, range(0, split), range(split, g.n()));
    const Rational eta(1 + trial % 4, 10);
    const auto exact = check_regular_pair(pair, eta);
    const auto sampled = check_regular_pair(pair, eta, {RegMode::kSampled, 200, static_cast<std::uint64_t>(trial)});
    for (const auto* v : {&exact, &sampled}) {
      if (v->witness) {
        ASSERT_TRUE(witness_is_valid(pair, eta, *v->witness));
        EXPECT_GT(Rational(v->witness->u.size()), eta * pair.side_a().size());
        EXPECT_GT(Rational(v->witness->w.size()), eta * pair.side_b().size());
      }
    }
    if (exact.regular) EXPECT_TRUE(sampled.regular) << "trial " << trial;
    irregular_seen += !exact.regular;
  }
  EXPECT_GT(irregular_seen, 20);
}

TEST(EnergyTest, SingletonsOfCompleteGraph) {
  for (Vertex n : {1, 2, 5, 9}) {
    Partition p;
    for (Vertex v = 0; v < n; ++v) p.classes.push_back({v});
    EXPECT_EQ(energy(p, complete_graph(n)), Rational(n - 1, n));
    Partition q;
    q.exceptional = range(0, n);
    EXPECT_EQ(energy(q, complete_graph(n)), Rational(n - 1, n));
  }
}

TEST(EnergyTest, OneClassIsSquaredDensity) {
  const Graph g = gen_gnp(12, 0.4, 3);
  Partition p{{range(0, 12)}, {}};
  const Rational d(2 * g.num_edges(), 144);
  EXPECT_EQ(energy(p, g), d * d);
}

TEST(EnergyTest, RejectsBrokenPartition) {
  const Graph g = complete_graph(3);
  EXPECT_THROW(energy(Partition{{{0, 1}}, {}}, g), Error);
  EXPECT_THROW(energy(Partition{{{0, 1}, {1, 2}}, {}}, g), Error);
}

TEST(RefineTest, EmptyWitnessListIsIdentity) {
  const Partition p{{{0, 1, 2}, {3, 4}}, {5}};
  const Partition q = refine_by_witnesses(p, {});
  EXPECT_EQ(q.classes, p.classes);
  EXPECT_EQ(q.exceptional, p.exceptional);
}

TEST(RefineTest, HalfSplitWitnessRaisesEnergy) {
  const Graph g = gen_half_split(4);
  const Partition p{{range(0, 8), range(8, 16)}, {}};
  const auto v = check_regular_pair(BipartitePair(g, range(0, 8), range(8, 16)), Rational(2, 5));
  ASSERT_TRUE(v.witness);
  const std::vector<RefineWitness> w{{0, 1, v.witness->u, v.witness->w}};
  const Partition q = refine_by_witnesses(p, w);
  EXPECT_EQ(q.classes.size(), 4u);
  EXPECT_EQ(energy(p, g), Rational(1, 8));
  EXPECT_EQ(energy(q, g), Rational(1, 4));
  EXPECT_GT(energy(q, g), energy(p, g));
}

TEST(RefineTest, TwoOverlappingWitnessesGiveFourAtoms) {
  const Partition p{{range(0, 8), range(8, 16)}, {}};
  const std::vector<RefineWitness> w{{0, 1, {0, 1, 2, 3}, {8, 9}}, {0, 1, {2, 3, 4, 5}, {8, 9}}};
  const Partition q = refine_by_witnesses(p, w);
  std::size_t atoms_in_first = 0;
  for (const auto& c : q.classes) atoms_in_first += c.front() < 8;
  EXPECT_EQ(atoms_in_first, 4u);
  EXPECT_THAT(q.classes[0], ElementsAre(0, 1));
  EXPECT_THAT(q.classes[1], ElementsAre(2, 3));
}

TEST(RefineTest, SmallAtomsGoExceptional) {
  const Partition p{{range(0, 5)}, {}};
  const std::vector<RefineWitness> w{{0, 0, {0}, {0, 1, 2}}};
  const Partition q = refine_by_witnesses(p, w);
  EXPECT_THAT(q.exceptional, ElementsAre(0));
  EXPECT_THAT(q.classes, ElementsAre(VertexList{1, 2}, VertexList{3, 4}));
}

TEST(RefineTest, WitnessOutsideClassRejected) {
  const Partition p{{{0, 1}, {2, 3}}, {}};
  const std::vector<RefineWitness> w{{0, 1, {2}, {3}}};
  EXPECT_THROW(refine_by_witnesses(p, w), Error);
}

// Random graphs with random partitions and random witness sets: energy never
// drops (exact rationals).
TEST(RefineTest, EnergyMonotoneOnRandomGraphs) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const Vertex n = 6 + trial % 35;
    const Graph g = gen_gnp(n, 0.15 + 0.05 * (trial % 10), trial);
    std::vector<Vertex> order = range(0, n);
    std::shuffle(order.begin(), order.end(), rng);
    Partition p;
    const int parts = 1 + trial % 4;
    p.classes.resize(parts);
    for (Vertex i = 0; i < n; ++i) p.classes[i % parts].push_back(order[i]);
    for (auto& c : p.classes) std::sort(c.begin(), c.end());
    for (int round = 0; round < 3; ++round) {
      std::vector<RefineWitness> ws;
      for (int w = 0; w < 2 && !p.classes.empty(); ++w) {
        RefineWitness rw;
        rw.class_u = std::uniform_int_distribution<int>(0, p.classes.size() - 1)(rng);
        rw.class_w = std::uniform_int_distribution<int>(0, p.classes.size() - 1)(rng);
        for (Vertex v : p.classes[rw.class_u]) if (rng() % 2) rw.u.push_back(v);
        for (Vertex v : p.classes[rw.class_w]) if (rng() % 2) rw.w.push_back(v);
        ws.push_back(rw);
      }
      const Partition q = refine_by_witnesses(p, ws);
      ASSERT_GE(energy(q, g), energy(p, g)) << "trial " << trial;
      p = q;
    }
  }
}

TEST(RegularityJsonTest, RoundTrip) {
  const Partition p{{{0, 1}, {2, 3}}, {4}};
  const Partition q = cluster_partition_from_json(partition_to_json(p));
  EXPECT_EQ(q.classes, p.classes);
  EXPECT_EQ(q.exceptional, p.exceptional);
  const Graph g = gen_half_split(4);
  const Json j = verdict_to_json(check_regular_pair(BipartitePair(g, range(0, 8), range(8, 16)), Rational(2, 5)));
  EXPECT_EQ(j.at("regular"), false);
  EXPECT_EQ(j.at("witness_density"), "1");
}

}  // namespace
}  // namespace lks
