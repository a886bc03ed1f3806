#include "arbor/packing.h"

#include <random>
#include <vector>

#include "arbor/error.h"
#include "arbor/generators.h"
#include "arbor/oracle.h"
#include "brute_force.h"
#include "gtest/gtest.h"

namespace arbor {
namespace {

using testing::HierarchyFromLevels;
using testing::PathGraph;
using testing::SourcedClique;

ColorSet Colors(std::initializer_list<int> c) { return ColorSet(c); }

TEST(InitBaseColorsTest, SmallInDegreeGivesCut) {
  const Graph g = PathGraph(3);
  const BaseOutcome out = InitBaseColors(g, 3);
  ASSERT_TRUE(out.cut.has_value());
  EXPECT_FALSE(out.cut->Contains(1));
  EXPECT_EQ(out.cut->Size(), 2);
  EXPECT_EQ(CutValues(g, *out.cut).delta, 1);
}

TEST(InitBaseColorsTest, EveryVertexGetsAllColors) {
  const Graph g = PathGraph(3);
  const BaseOutcome out = InitBaseColors(g, 1);
  ASSERT_FALSE(out.cut.has_value());
  EXPECT_EQ(out.state.vertex_colors[1], Colors({1}));
  EXPECT_EQ(out.state.vertex_colors[2], Colors({1}));
  EXPECT_TRUE(out.state.vertex_colors[0].empty());
  for (const auto& colors : out.state.edge_colors) EXPECT_TRUE(colors.empty());
}

TEST(InitBaseColorsTest, ParallelEdges) {
  const std::vector<RawEdge> raw = {{0, 1, 1}, {0, 1, 1}};
  const Graph g = Normalize(2, 0, raw);
  EXPECT_EQ(InitBaseColors(g, 2).state.vertex_colors[1], Colors({1, 2}));
}

// s = 0; A = {1, 2, 3} and B = {4, 5, 6} bidirected triangles; s -> 1,
// 3 -> 4 and 4 -> 3. E_2 = {4 -> 3, 1 -> 2}; everything is in E_1.
struct MergeFixture {
  Graph g;
  EdgeId s_to_1, a_to_b, b_to_a, one_to_two;
  Hierarchy h;

  MergeFixture() {
    std::vector<RawEdge> raw = {{0, 1, 1}, {3, 4, 1}, {4, 3, 1}};
    for (Vertex base : {1, 4}) {
      for (Vertex u = base; u < base + 3; ++u) {
        for (Vertex v = base; v < base + 3; ++v) {
          if (u != v) raw.push_back({u, v, 1});
        }
      }
    }
    g = Normalize(7, 0, raw);
    s_to_1 = 0;
    a_to_b = 1;
    b_to_a = 2;
    one_to_two = 3;
    EdgeSet top(g.m());
    top.Insert(b_to_a);
    top.Insert(one_to_two);
    h = HierarchyFromLevels(g, {EdgeSet::Full(g.m()), top});
  }
};

TEST(PartitionCriticalTest, FixtureHierarchyIsValid) {
  const MergeFixture f;
  EXPECT_FALSE(CheckHierarchy(f.g, f.h).has_value());
  EXPECT_EQ(f.h.PartitionAt(1).size(), 3);
  EXPECT_EQ(f.h.PartitionAt(2).size(), 2);
}

TEST(PartitionCriticalTest, OutsideEdgesStayInX) {
  const MergeFixture f;
  const CriticalSplit split = PartitionCritical(f.g, f.h, 2, 1);
  EXPECT_EQ(split.x, std::vector<EdgeId>({f.s_to_1}));
  EXPECT_TRUE(split.y.empty());
  EXPECT_TRUE(split.z.empty());
}

TEST(PartitionCriticalTest, MergingEdgeOutsideUpperLevelsIsY) {
  const MergeFixture f;
  const CriticalSplit split = PartitionCritical(f.g, f.h, 2, 4);
  EXPECT_TRUE(split.x.empty());
  EXPECT_EQ(split.y, std::vector<EdgeId>({f.a_to_b}));
  EXPECT_TRUE(split.z.empty());
}

TEST(PartitionCriticalTest, MergingEdgeOfLevelIIsZ) {
  const MergeFixture f;
  const CriticalSplit split = PartitionCritical(f.g, f.h, 2, 3);
  EXPECT_TRUE(split.x.empty());
  EXPECT_TRUE(split.y.empty());
  EXPECT_EQ(split.z, std::vector<EdgeId>({f.b_to_a}));
}

TEST(PartitionCriticalTest, InsideEdgeOfLevelIIsZ) {
  const MergeFixture f;
  const CriticalSplit split = PartitionCritical(f.g, f.h, 2, 2);
  EXPECT_EQ(split.z, std::vector<EdgeId>({f.one_to_two}));
  EXPECT_TRUE(split.x.empty());
  EXPECT_TRUE(split.y.empty());
}

TEST(PartitionCriticalTest, EndToEndOnFixture) {
  const MergeFixture f;
  for (int k = 1; k <= 3; ++k) {
    const PackingResult r = Pack(f.g, f.h, k);
    EXPECT_TRUE(VerifyPacking(f.g, r, k).ok) << "k = " << k;
  }
}

TEST(SplitColorsTest, Empty) {
  const ColorSplit s = SplitColors({}, 1, 1, 1);
  EXPECT_TRUE(s.x.empty() && s.y.empty() && s.z.empty());
}

TEST(SplitColorsTest, ForcedIntoX) {
  const ColorSplit s = SplitColors(Colors({1, 2}), 2, 0, 0);
  EXPECT_EQ(s.x, std::vector<int>({1, 2}));
}

TEST(SplitColorsTest, AscendingFill) {
  const ColorSplit s = SplitColors(Colors({3, 1, 2}), 1, 1, 1);
  EXPECT_EQ(s.x, std::vector<int>({1}));
  EXPECT_EQ(s.y, std::vector<int>({2}));
  EXPECT_EQ(s.z, std::vector<int>({3}));
}

TEST(SplitColorsTest, Overflow) {
  try {
    SplitColors(Colors({1, 2, 3}), 1, 0, 1);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvariantBroken);
  }
}

TEST(ComponentFlowTest, NoBreakpointColors) {
  const Graph g = SourcedClique(3);
  const Hierarchy h = BuildHierarchy(g, Rational(1, 8));
  const ComponentFlowOutcome out = ComponentFlow(g, h, 1, {1, 2, 3}, {}, 2);
  EXPECT_FALSE(out.cut.has_value());
  EXPECT_TRUE(out.paths.empty());
}

TEST(ComponentFlowTest, ThinEntryGivesCut) {
  const Graph g = SourcedClique(3);
  const Hierarchy h = BuildHierarchy(g, Rational(1, 8));
  ASSERT_EQ(h.num_levels(), 1);
  const ComponentFlowOutcome out = ComponentFlow(g, h, 1, {1, 2, 3}, Colors({1, 2}), 2);
  ASSERT_TRUE(out.cut.has_value());
  EXPECT_FALSE(out.cut->Contains(0));
  EXPECT_FALSE(out.cut->Empty());
  EXPECT_LT(CutValues(g, *out.cut).rho, 2);
}

// s -> 1, s -> 2 into a bidirected triangle on 1..3.
Graph DoubleEntryTriangle() {
  const std::vector<RawEdge> raw = {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {2, 1, 1},
                                    {2, 3, 1}, {3, 2, 1}, {1, 3, 1}, {3, 1, 1}};
  return Normalize(4, 0, raw);
}

TEST(ComponentFlowTest, TwoPathsTwoLeaders) {
  const Graph g = DoubleEntryTriangle();
  const Hierarchy h = BuildHierarchy(g, Rational(1, 8));
  ASSERT_EQ(h.num_levels(), 1);
  const ComponentFlowOutcome out = ComponentFlow(g, h, 1, {1, 2, 3}, Colors({1, 2}), 2);
  ASSERT_FALSE(out.cut.has_value());
  ASSERT_EQ(out.paths.size(), 2u);
  EXPECT_EQ(out.colors, std::vector<int>({1, 2}));
  EXPECT_EQ(out.paths[0].start, 1);
  EXPECT_EQ(out.paths[1].start, 2);
}

TEST(ChainDemandTest, Shapes) {
  EXPECT_TRUE(ChainDemand(4, {}).pairs.empty());
  EXPECT_EQ(ChainDemand(4, {7}).pairs, std::vector<DemandPair>({{4, 7}}));
  EXPECT_EQ(ChainDemand(1, {5, 2, 9}).pairs,
            std::vector<DemandPair>({{1, 2}, {2, 5}, {5, 9}}));
  EXPECT_EQ(ChainDemand(2, {5, 2}).pairs, std::vector<DemandPair>({{2, 5}}));
}

TEST(RunLevelTest, NothingMerges) {
  const Graph g = PathGraph(4);
  const Hierarchy h = BuildHierarchy(g, Rational(1, 8));
  ASSERT_EQ(h.num_levels(), 1);
  const BaseOutcome base = InitBaseColors(g, 1);
  const LevelOutcome out = RunLevel(g, h, 1, base.state, Rational(1), {});
  ASSERT_FALSE(out.violating_set.has_value());
  EXPECT_EQ(out.state.vertex_colors, base.state.vertex_colors);
  EXPECT_EQ(out.state.edge_colors, base.state.edge_colors);
  EXPECT_TRUE(out.demand.pairs.empty());
  EXPECT_EQ(out.report.flow_paths, 0);
}

TEST(RunLevelTest, SingleColorOnStronglyConnectedGraph) {
  const Graph g = SourcedClique(3);
  const Hierarchy h = BuildHierarchy(g, Rational(1, 8));
  ASSERT_EQ(h.num_levels(), 1);
  const LevelOutcome out = RunLevel(g, h, 1, InitBaseColors(g, 1).state, Rational(1), {});
  ASSERT_FALSE(out.violating_set.has_value());
  EXPECT_EQ(out.report.flow_paths, 1);
  EXPECT_FALSE(CheckLevelInvariants(g, h, out.state, out.report.bound_factor).has_value());
}

TEST(RunLevelTest, CutPropagates) {
  const Graph g = SourcedClique(3);
  const Hierarchy h = BuildHierarchy(g, Rational(1, 8));
  const LevelOutcome out = RunLevel(g, h, 1, InitBaseColors(g, 2).state, Rational(1), {});
  ASSERT_TRUE(out.violating_set.has_value());
  EXPECT_LT(CutValues(g, *out.violating_set).rho, 2);
  const PackingResult r = Pack(g, h, 2);
  EXPECT_EQ(r.outcome, PackingResult::Outcome::kCut);
  EXPECT_EQ(r.cut_stage, "component_flow");
}

TEST(FinalizeColoringTest, NoVertexColors) {
  const Graph g = PathGraph(3);
  const Hierarchy h = BuildHierarchy(g, Rational(1, 8));
  ColorState top;
  top.level = 1;
  top.k = 1;
  top.edge_colors = {Colors({1}), Colors({1})};
  top.vertex_colors.assign(3, {});
  EXPECT_EQ(FinalizeColoring(g, h, top), top.edge_colors);
}

TEST(FinalizeColoringTest, SingleCriticalEdgeTakesAll) {
  const Graph g = PathGraph(2);
  const Hierarchy h = BuildHierarchy(g, Rational(1, 8));
  ColorState top;
  top.level = h.num_levels();
  top.k = 2;
  top.edge_colors.assign(1, {});
  top.vertex_colors = {{}, Colors({1, 2})};
  EXPECT_EQ(FinalizeColoring(g, h, top)[0], Colors({1, 2}));
}

TEST(FinalizeColoringTest, RoundRobinQuota) {
  const std::vector<RawEdge> raw = {{0, 1, 1}, {0, 1, 1}};
  const Graph g = Normalize(2, 0, raw);
  const Hierarchy h = BuildHierarchy(g, Rational(1, 8));
  ASSERT_EQ(h.num_levels(), 1);
  ColorState top;
  top.level = 1;
  top.k = 4;
  top.edge_colors.assign(2, {});
  top.vertex_colors = {{}, Colors({1, 2, 3, 4})};
  const auto coloring = FinalizeColoring(g, h, top);
  EXPECT_EQ(coloring[0], Colors({1, 3}));
  EXPECT_EQ(coloring[1], Colors({2, 4}));
}

TEST(ExtractArborescencesTest, Path) {
  const Graph g = PathGraph(3);
  const PackingResult r = ExtractArborescences(g, {Colors({1}), Colors({1})}, 1);
  ASSERT_EQ(r.trees.size(), 1u);
  EXPECT_EQ(r.trees[0], std::vector<EdgeId>({0, 1}));
  EXPECT_EQ(r.congestion, 1);
}

TEST(ExtractArborescencesTest, ParallelEdges) {
  const std::vector<RawEdge> raw = {{0, 1, 1}, {0, 1, 1}};
  const Graph g = Normalize(2, 0, raw);
  const PackingResult r = ExtractArborescences(g, {Colors({1}), Colors({2})}, 2);
  EXPECT_EQ(r.trees, std::vector<std::vector<EdgeId>>({{0}, {1}}));
  EXPECT_EQ(r.congestion, 1);
}

TEST(ExtractArborescencesTest, MissingColorIsProperty1Violation) {
  const Graph g = PathGraph(3);
  try {
    ExtractArborescences(g, {Colors({1}), {}}, 1);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kProperty1Violation);
  }
}

TEST(PackTest, KAboveConnectivityGivesCut) {
  const Graph g = PathGraph(3);
  const PackingResult r = Pack(g, 2, Rational(1, 8));
  ASSERT_EQ(r.outcome, PackingResult::Outcome::kCut);
  EXPECT_TRUE(r.cut.Contains(0));
  EXPECT_EQ(r.cut_delta, 1);
}

TEST(PackTest, SingleTreeOnStronglyConnectedGraph) {
  const Graph g = SourcedClique(4);
  const PackingResult r = Pack(g, 1, Rational(1, 8));
  ASSERT_EQ(r.outcome, PackingResult::Outcome::kTrees);
  EXPECT_EQ(r.congestion, 1);
  EXPECT_TRUE(VerifyArborescence(g, r.trees[0]).ok);
}

TEST(PackTest, TwoGluedTrees) {
  // Trees s->1->2->3 and s->2, s->3, 3->1.
  const std::vector<RawEdge> raw = {{0, 1, 1}, {1, 2, 1}, {2, 3, 1},
                                    {0, 2, 1}, {0, 3, 1}, {3, 1, 1}};
  const Graph g = Normalize(4, 0, raw);
  const PackingResult r = Pack(g, 2, Rational(1, 8));
  ASSERT_EQ(r.outcome, PackingResult::Outcome::kTrees);
  const PackingVerdict v = VerifyPacking(g, r, 2);
  EXPECT_TRUE(v.ok) << v.violation;
  const int levels = r.levels;
  const Rational factor = r.level_reports.empty() ? Rational(1) : r.level_reports.back().bound_factor;
  EXPECT_LE(Rational(r.congestion),
            Rational(5 * levels * levels) * factor + Rational(levels + 1));
}

TEST(PackTest, UnreachableVertex) {
  const std::vector<RawEdge> raw = {{0, 1, 1}, {2, 1, 1}};
  const Graph g = Normalize(3, 0, raw);
  const PackingResult r = Pack(g, 1, Rational(1, 8));
  ASSERT_EQ(r.outcome, PackingResult::Outcome::kCut);
  EXPECT_EQ(r.cut_delta, 0);
  EXPECT_EQ(r.cut_stage, "unreachable");
}

TEST(PackTest, RejectsWeightsAndBadK) {
  const std::vector<RawEdge> raw = {{0, 1, 2}};
  const Graph weighted = Normalize(2, 0, raw);
  try {
    Pack(weighted, 1, Rational(1, 8));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kUnsupported);
  }
  EXPECT_THROW(Pack(PathGraph(2), 0, Rational(1, 8)), Error);
}

// Every run passes the packing verifier and returns a cut exactly when k
// exceeds the connectivity; each observed level satisfies Invariants 1-3.
TEST(PackPropertyTest, DichotomyAndLevelInvariants) {
  std::mt19937_64 rng(71);
  for (int round = 0; round < 120; ++round) {
    const int n = 2 + static_cast<int>(rng() % 9);
    GenParams p;
    p.n = n;
    p.m = static_cast<int>(rng() % (4 * n));
    p.k = 1 + static_cast<int>(rng() % 3);
    p.seed = rng();
    const std::string kind = GeneratorKinds()[rng() % GeneratorKinds().size()];
    if (kind == "two_cliques_bridge" && n < 5) continue;
    if (kind == "cycle_plus_chords" && n < 3) continue;
    p.layers = std::max(1, std::min(3, n - 1));
    const Graph g = Generate(kind, p).ToGraph();
    const Hierarchy h = BuildHierarchy(g, Rational(1, 8), {p.seed, 4});
    const Capacity exact = testing::BruteForceRootedMincut(g);
    for (int k : {1, 2, 3, static_cast<int>(exact), static_cast<int>(exact) + 1}) {
      if (k < 1) continue;
      PackOptions options;
      options.seed = p.seed;
      Rational factor(1);
      options.on_level = [&](const LevelOutcome& level) {
        if (level.violating_set) return;
        const auto broken = CheckLevelInvariants(g, h, level.state, level.report.bound_factor);
        EXPECT_FALSE(broken.has_value()) << *broken;
        factor = level.report.bound_factor;
      };
      const PackingResult r = Pack(g, h, k, options);
      const PackingVerdict v = VerifyPacking(g, r, k);
      EXPECT_TRUE(v.ok) << kind << " k=" << k << ": " << v.violation;
      EXPECT_EQ(r.outcome == PackingResult::Outcome::kCut, exact < k);
      if (r.outcome == PackingResult::Outcome::kCut) continue;
      EXPECT_LE(Rational(r.congestion),
                Rational(5 * r.levels * r.levels) * factor + Rational(r.levels + 1));
    }
  }
}

}  // namespace
}  // namespace arbor
