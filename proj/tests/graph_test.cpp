#include "lks/graph.hpp"

#include <random>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "lks/generators.hpp"

namespace lks {
namespace {

using ::testing::ElementsAre;

TEST(GraphTest, RejectsLoopsAndDuplicates) {
  EXPECT_THROW(Graph(3, {{0, 0}}), Error);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), Error);
  EXPECT_THROW(Graph(3, {{0, 3}}), Error);
}

TEST(GraphTest, AdjacencyIsSortedAndSymmetric) {
  const Graph g(4, {{2, 0}, {0, 1}, {3, 0}, {1, 2}});
  EXPECT_THAT(VertexList(g.neighbors(0).begin(), g.neighbors(0).end()), ElementsAre(1, 2, 3));
  EXPECT_THAT(VertexList(g.neighbors(2).begin(), g.neighbors(2).end()), ElementsAre(0, 1));
  EXPECT_TRUE(g.has_edge(2, 1));
  EXPECT_FALSE(g.has_edge(3, 1));
  EXPECT_EQ(g.num_edges(), 4u);
}

TEST(DensityTest, CompleteBipartiteIsOne) {
  const Graph g = complete_bipartite(3, 4);
  const BipartitePair pair(g, {0, 1, 2}, {3, 4, 5, 6});
  EXPECT_EQ(density(pair), Rational(1));
  EXPECT_EQ(min_degree_across(pair), 3u);
}

TEST(DensityTest, EdgelessIsZero) {
  const Graph g(5, {});
  EXPECT_EQ(density(BipartitePair(g, {0, 1}, {2, 3, 4})), Rational(0));
}

TEST(DensityTest, PathByHand) {
  // a=0, b=1, c=2 on the path a-b-c.
  const Graph g(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(density(BipartitePair(g, {0, 2}, {1})), Rational(1));
  EXPECT_EQ(density(BipartitePair(g, {0}, {1, 2})), Rational(1, 2));
}

TEST(DensityTest, EmptySideIsAnError) {
  const Graph g(3, {{0, 1}});
  try {
    density(BipartitePair(g, {}, {1}));
    FAIL() << "expected empty-side";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "empty-side");
  }
  EXPECT_THROW(min_degree_across(BipartitePair(g, {0}, {})), Error);
}

TEST(DensityTest, OverlappingSidesRejected) {
  const Graph g(3, {{0, 1}});
  EXPECT_THROW(BipartitePair(g, {0, 1}, {1, 2}), Error);
}

TEST(MinDegreeAcrossTest, StarCenterAgainstLeaves) {
  const Graph g = complete_bipartite(1, 6);
  EXPECT_EQ(min_degree_across(BipartitePair(g, {0}, {1, 2, 3, 4, 5, 6})), 1u);
}

TEST(MinDegreeAcrossTest, SixCycleClasses) {
  const Graph c6 = circulant(6, {1});
  EXPECT_EQ(min_degree_across(BipartitePair(c6, {0, 2, 4}, {1, 3, 5})), 2u);
}

// Random pairs: density stays in [0,1], equals 1 exactly for complete pairs,
// and min_degree_across never exceeds the smaller side.
TEST(DensityTest, PropertiesOnRandomPairs) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const Vertex n = 4 + trial % 12;
    const Graph g = gen_gnp(n, 0.2 + 0.6 * (trial % 5) / 4.0, trial);
    VertexList a, b;
    std::uniform_int_distribution<int> side(0, 2);
    for (Vertex v = 0; v < n; ++v) {
      const int s = side(rng);
      if (s == 0) a.push_back(v);
      if (s == 1) b.push_back(v);
    }
    if (a.empty() || b.empty()) continue;
    const BipartitePair pair(g, a, b);
    std::size_t cross = 0;
    for (Vertex u : a) {
      for (Vertex w : b) cross += g.has_edge(u, w) ? 1 : 0;
    }
    const Rational d = density(pair);
    EXPECT_EQ(d, Rational(cross, a.size() * b.size()));
    EXPECT_GE(d, 0);
    EXPECT_LE(d, 1);
    EXPECT_EQ(d == 1, cross == a.size() * b.size());
    EXPECT_LE(min_degree_across(pair), std::min(a.size(), b.size()));
  }
}

TEST(RootedTreeTest, BuildsParentsAndSides) {
  const RootedTree t(5, std::vector<Edge>{{0, 1}, {1, 2}, {1, 3}, {3, 4}}, 0);
  EXPECT_EQ(t.parent(4), 3);
  EXPECT_EQ(t.parent(0), kNoVertex);
  EXPECT_EQ(t.side(2), 0);
  EXPECT_EQ(t.side(1), 1);
  EXPECT_THAT(t.bfs_order(), ElementsAre(0, 1, 2, 3, 4));
  EXPECT_EQ(t.rerooted(4).parent(3), 4);
}

TEST(RootedTreeTest, RejectsNonTrees) {
  EXPECT_THROW(RootedTree(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}}, 0), Error);
  EXPECT_THROW(RootedTree(4, std::vector<Edge>{{0, 1}, {2, 3}}, 0), Error);
}

TEST(RationalTest, ParsesDecimalsExactly) {
  EXPECT_EQ(parse_rational("0.05"), Rational(1, 20));
  EXPECT_EQ(parse_rational("3/4"), Rational(3, 4));
  EXPECT_EQ(parse_rational("1e-3"), Rational(1, 1000));
  EXPECT_EQ(parse_rational("-2"), Rational(-2));
  EXPECT_THROW(parse_rational("abc"), Error);
  EXPECT_EQ(ceil_int(Rational(21, 2)), 11);
  EXPECT_EQ(floor_int(Rational(21, 2)), 10);
  EXPECT_EQ(ceil_int(Rational(-3, 2)), -1);
  EXPECT_EQ(floor_int(Rational(-3, 2)), -2);
}

}  // namespace
}  // namespace lks
