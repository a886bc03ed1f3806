#include "arbor/decomp.h"

#include <random>

#include "arbor/error.h"
#include "arbor/generators.h"
#include "arbor/oracle.h"
#include "brute_force.h"
#include "gtest/gtest.h"

namespace arbor {
namespace {

using testing::PathGraph;
using testing::SourcedClique;
using testing::TwoCliques;

TEST(DecomposeTest, CliqueNeedsNoCut) {
  const Graph g = SourcedClique(5);
  const DecompResult r = Decompose(g, EdgeSet::Full(g.m()), Rational(1, 16));
  EXPECT_TRUE(r.cut_edges.Empty());
  const auto phi = BruteForceCutExpansion(g, Scc(g, r.cut_edges), EdgeSet::Full(g.m()));
  ASSERT_TRUE(phi.has_value());
  EXPECT_GE(*phi, Rational(1, 16));
}

TEST(DecomposeTest, TwoCliquesLoseBothBridges) {
  EdgeId forward = -1;
  EdgeId backward = -1;
  const Graph g = TwoCliques(4, &forward, &backward);
  const EdgeSet all = EdgeSet::Full(g.m());
  const DecompResult r = Decompose(g, all, Rational(1, 8));
  EXPECT_TRUE(r.cut_edges.Contains(forward));
  EXPECT_TRUE(r.cut_edges.Contains(backward));
  const Partition p = Scc(g, r.cut_edges);
  EXPECT_EQ(p.size(), 3);
  EXPECT_NE(p.ComponentOf(1), p.ComponentOf(5));
  const auto phi = BruteForceCutExpansion(g, p, all);
  ASSERT_TRUE(phi.has_value());
  EXPECT_GE(*phi, Rational(1, 8));
}

TEST(DecomposeTest, EmptyTerminals) {
  const Graph g = SourcedClique(4);
  EXPECT_TRUE(Decompose(g, EdgeSet(g.m()), Rational(1, 8)).cut_edges.Empty());
}

TEST(DecomposeTest, RejectsBadPhi) {
  const Graph g = SourcedClique(3);
  EXPECT_THROW(Decompose(g, EdgeSet::Full(g.m()), Rational(0)), Error);
  EXPECT_THROW(Decompose(g, EdgeSet::Full(g.m()), Rational(3, 2)), Error);
}

TEST(BuildHierarchyTest, NoEdges) {
  const Graph g = Normalize(3, 0, {});
  const Hierarchy h = BuildHierarchy(g, Rational(1, 8));
  EXPECT_EQ(h.num_levels(), 1);
  EXPECT_TRUE(h.Level(1).Empty());
  for (int i = 0; i <= 1; ++i) EXPECT_EQ(h.PartitionAt(i).size(), 3);
  EXPECT_FALSE(CheckHierarchy(g, h).has_value());
}

TEST(BuildHierarchyTest, CliqueIsOneLevel) {
  const Graph g = SourcedClique(5);
  const Hierarchy h = BuildHierarchy(g, Rational(1, 16));
  EXPECT_EQ(h.num_levels(), 1);
  EXPECT_EQ(h.PartitionAt(1).size(), 2);
}

TEST(BuildHierarchyTest, PathIsOneLevel) {
  const Graph g = PathGraph(3);
  const Hierarchy h = BuildHierarchy(g, Rational(1, 8));
  EXPECT_EQ(h.num_levels(), 1);
  EXPECT_EQ(h.Level(1), EdgeSet::Full(g.m()));
  EXPECT_EQ(h.PartitionAt(1).size(), 3);
}

TEST(BuildHierarchyTest, TwoCliquesHasTwoLevels) {
  EdgeId forward = -1;
  EdgeId backward = -1;
  const Graph g = TwoCliques(4, &forward, &backward);
  const Hierarchy h = BuildHierarchy(g, Rational(1, 8));
  ASSERT_EQ(h.num_levels(), 2);
  EXPECT_TRUE(h.Level(2).Contains(forward));
  EXPECT_TRUE(h.Level(2).Contains(backward));
  EXPECT_EQ(h.PartitionAt(1).size(), 3);
  EXPECT_EQ(h.PartitionAt(2).size(), 2);
  EXPECT_FALSE(CheckHierarchy(g, h).has_value());
}

TEST(BuildHierarchyTest, SameSeedSameHierarchy) {
  GenParams p;
  p.n = 20;
  p.m = 80;
  p.seed = 3;
  const Graph g = RandomGnm(p).ToGraph();
  const Hierarchy a = BuildHierarchy(g, Rational(1, 8), {5, 4});
  const Hierarchy b = BuildHierarchy(g, Rational(1, 8), {5, 4});
  EXPECT_EQ(a.levels, b.levels);
}

TEST(CheckHierarchyTest, DetectsBrokenHierarchies) {
  const Graph g = SourcedClique(3);
  Hierarchy h = BuildHierarchy(g, Rational(1, 8));
  ASSERT_FALSE(CheckHierarchy(g, h).has_value());
  Hierarchy missing = h;
  missing.levels[0].Erase(0);
  EXPECT_TRUE(CheckHierarchy(g, missing).has_value());
  Hierarchy merged = h;
  merged.partitions[1] = Scc(g, EdgeSet(g.m()));
  merged.partitions[1].component_of.assign(g.n(), 0);
  EXPECT_TRUE(CheckHierarchy(g, merged).has_value());
}

TEST(LevelBoundTest, Values) {
  EXPECT_EQ(LevelBound(0), 1);
  EXPECT_EQ(LevelBound(1), 1);
  EXPECT_EQ(LevelBound(2), 2);
  EXPECT_EQ(LevelBound(5), 4);
  EXPECT_EQ(LevelBound(8), 4);
}

// Structural invariants on random graphs, and certified expansion of every
// level where enumeration is feasible.
TEST(HierarchyPropertyTest, InvariantsAndCertifiedExpansion) {
  std::mt19937_64 rng(41);
  const Rational phi(1, 8);
  int certified = 0;
  for (int round = 0; round < 150; ++round) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const Graph g = testing::RandomDigraph(rng, n, static_cast<int>(rng() % 30), 6).Build();
    const Hierarchy h = BuildHierarchy(g, phi, {rng(), 4});
    ASSERT_FALSE(CheckHierarchy(g, h).has_value()) << *CheckHierarchy(g, h);
    bool ok = true;
    for (int i = 1; i <= h.num_levels(); ++i) {
      const auto f = BruteForceCutExpansion(g, h.PartitionAt(i), h.Level(i));
      if (f && *f < phi) ok = false;
    }
    certified += ok;
  }
  EXPECT_GE(certified, 140);
}

}  // namespace
}  // namespace arbor
