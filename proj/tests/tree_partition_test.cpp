#include "lks/tree_partition.hpp"

#include <random>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "lks/generators.hpp"

namespace lks {
namespace {

bool has_item(const PartitionReport& r, const std::string& item) {
  for (const auto& v : r.violations) {
    if (v.item == item) return true;
  }
  return false;
}

std::string describe(const PartitionReport& r) {
  std::string out;
  for (const auto& v : r.violations) out += v.item + ": " + v.witness + "\n";
  return out;
}

std::size_t covered(const TreePartition& p) {
  std::size_t total = p.cut_size();
  for (const auto& s : p.trees_a) total += s.vertices.size();
  for (const auto& s : p.trees_b) total += s.vertices.size();
  return total;
}

TEST(PartitionTreeTest, PathTwentyQuarter) {
  const RootedTree t = gen_tree(TreeKind::kPath, 20);
  const Rational tau(1, 4);
  const TreePartition p = partition_tree(t, tau, 20);
  const PartitionReport r = check_partition(t, p, tau, 20);
  EXPECT_TRUE(r.pass) << describe(r);
  for (const auto& s : p.trees_a) EXPECT_LT(s.vertices.size(), 5u);
  for (const auto& s : p.trees_b) EXPECT_LT(s.vertices.size(), 5u);
  EXPECT_EQ(covered(p), 21u);
}

TEST(PartitionTreeTest, StarHalf) {
  const RootedTree t = gen_tree(TreeKind::kStar, 12);
  const Rational tau(1, 2);
  const TreePartition p = partition_tree(t, tau, 12);
  EXPECT_TRUE(check_partition(t, p, tau, 12).pass);
  // The center is cut; every leaf left over is a singleton end tree on it.
  EXPECT_THAT(p.w_a, ::testing::Contains(0));
  EXPECT_LE(p.cut_size(), 2u);
  for (const auto* family : {&p.trees_a, &p.trees_b}) {
    for (const auto& s : *family) {
      EXPECT_EQ(s.vertices.size(), 1u);
      ASSERT_EQ(s.attachments.size(), 1u);
      EXPECT_EQ(s.attachments[0].first, 0);
    }
  }
}

TEST(PartitionTreeTest, GuardsAndErrors) {
  const RootedTree t = gen_tree(TreeKind::kPath, 20);
  try {
    partition_tree(t, Rational(1, 20), 20);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "tau-too-small");
  }
  EXPECT_THROW(partition_tree(t, Rational(0), 20), Error);
  EXPECT_THROW(partition_tree(t, Rational(1), 20), Error);
  EXPECT_THROW(partition_tree(t, Rational(1, 2), 19), Error);
}

TEST(CheckPartitionTest, PlantedJoinedSubtrees) {
  const RootedTree t = gen_tree(TreeKind::kPath, 4);
  TreePartition p;
  p.trees_a.push_back({{0, 1}, {}, false});
  p.trees_a.push_back({{2, 3, 4}, {}, false});
  const PartitionReport r = check_partition(t, p, Rational(3, 4), 4);
  EXPECT_FALSE(r.pass);
  ASSERT_TRUE(has_item(r, "b"));
  bool named = false;
  for (const auto& v : r.violations) named |= v.item == "b" && v.witness.find("(1,2)") != std::string::npos;
  EXPECT_TRUE(named) << describe(r);
}

TEST(CheckPartitionTest, PlantedOversizedCut) {
  // ceil(100 / 0.9) = 112: cut every vertex of a 112-vertex path.
  const Rational tau(9, 10);
  const RootedTree t = gen_tree(TreeKind::kPath, 111);
  TreePartition p;
  for (Vertex v = 0; v < t.n(); ++v) (t.side(v) == 0 ? p.w_a : p.w_b).push_back(v);
  const PartitionReport r = check_partition(t, p, tau, 111);
  EXPECT_FALSE(r.pass);
  EXPECT_TRUE(has_item(r, "c"));
  EXPECT_EQ(r.violations.size(), 1u) << describe(r);

  // One vertex fewer is fine as far as (c) goes.
  const RootedTree shorter = gen_tree(TreeKind::kPath, 110);
  TreePartition q;
  for (Vertex v = 0; v < shorter.n(); ++v) (shorter.side(v) == 0 ? q.w_a : q.w_b).push_back(v);
  EXPECT_TRUE(check_partition(shorter, q, tau, 110).pass);
}

TEST(CheckPartitionTest, WrongClassesAndLostVertices) {
  const RootedTree t = gen_tree(TreeKind::kPath, 4);
  TreePartition p;
  p.w_a = {0, 1};
  p.trees_a.push_back({{2, 3, 4}, {{1, 2}}, false});
  EXPECT_TRUE(has_item(check_partition(t, p, Rational(4, 5), 4), "d"));
  p.trees_a[0].vertices = {2, 3};
  EXPECT_TRUE(has_item(check_partition(t, p, Rational(4, 5), 4), "structure"));
}

TEST(CheckPartitionTest, EndTreeOnWrongSide) {
  // Star with the center in W_B and all leaves put into T_A.
  const RootedTree t = gen_tree(TreeKind::kStar, 4);
  TreePartition p;
  p.w_b = {0};
  for (Vertex v = 1; v <= 4; ++v) p.trees_a.push_back({{v}, {{0, v}}, false});
  EXPECT_TRUE(has_item(check_partition(t, p, Rational(1, 2), 4), "f"));
  TreePartition q;
  q.w_b = {0};
  for (Vertex v = 1; v <= 4; ++v) q.trees_b.push_back({{v}, {{0, v}}, false});
  EXPECT_TRUE(has_item(check_partition(t, q, Rational(1, 2), 4), "g"));
}

// Random trees over the full parameter grid; tau values with tau*k < 2 are
// outside the guard and skipped.
TEST(PartitionTreeTest, RandomTreesPassEveryItem) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<Vertex> pick_k(20, 200);
  const std::vector<Rational> taus{Rational(1, 20), Rational(1, 10), Rational(1, 4)};
  const std::vector<TreeKind> kinds{TreeKind::kRandom, TreeKind::kCaterpillar, TreeKind::kBroom, TreeKind::kPath,
                                    TreeKind::kStar};
  int checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Vertex k = pick_k(rng);
    const Rational& tau = taus[trial % 3];
    if (tau * k < 2) continue;
    const TreeKind kind = trial % 10 < 6 ? TreeKind::kRandom : kinds[trial % 5];
    const RootedTree t = gen_tree(kind, k, trial);
    const TreePartition p = partition_tree(t, tau, k);
    const PartitionReport r = check_partition(t, p, tau, k);
    ASSERT_TRUE(r.pass) << "trial " << trial << " k=" << k << "\n" << describe(r);
    ASSERT_EQ(covered(p), static_cast<std::size_t>(k + 1));
    for (const auto& s : p.trees_b) ASSERT_FALSE(s.internal);
    ++checked;
  }
  EXPECT_GT(checked, 900);
}

TEST(PartitionTreeTest, Deterministic) {
  const RootedTree t = gen_tree(TreeKind::kRandom, 80, 9);
  const Rational tau(1, 10);
  EXPECT_EQ(partition_to_json(partition_tree(t, tau, 80)), partition_to_json(partition_tree(t, tau, 80)));
}

TEST(PartitionTreeTest, JsonRoundTrip) {
  const RootedTree t = gen_tree(TreeKind::kCaterpillar, 60, 2);
  const Rational tau(1, 10);
  const TreePartition p = partition_tree(t, tau, 60);
  const TreePartition q = partition_from_json(partition_to_json(p));
  EXPECT_EQ(partition_to_json(q), partition_to_json(p));
  EXPECT_TRUE(check_partition(t, q, tau, 60).pass);
  EXPECT_THROW(partition_from_json(Json::object()), Error);
}

}  // namespace
}  // namespace lks
