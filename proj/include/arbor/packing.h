#ifndef ARBOR_PACKING_H_
#define ARBOR_PACKING_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "arbor/decomp.h"
#include "arbor/graph.h"
#include "arbor/maxflow.h"
#include "arbor/rational.h"
#include "arbor/routing.h"

namespace arbor {

// Colors are 1..k.
using ColorSet = std::set<int>;

struct ColorState {
  int level = 0;
  int k = 0;
  std::vector<ColorSet> edge_colors;
  // Breakpoint colors; always empty for the source.
  std::vector<ColorSet> vertex_colors;
};

struct BaseOutcome {
  // V \ {v} for the first v whose in-degree is below k.
  std::optional<VertexSet> cut;
  ColorState state;
};

// Level 0: no edge colors, every non-source vertex holds all k colors.
BaseOutcome InitBaseColors(const Graph& g, int k);

// Level-i critical incoming edges of v: in-edges crossing level-i
// components plus in-edges of E_{>i}. Ascending edge ids.
std::vector<EdgeId> CriticalEdges(const Graph& g, const Hierarchy& h, int i,
                                  Vertex v);

struct CriticalSplit {
  std::vector<EdgeId> x;  // K_i(v)
  std::vector<EdgeId> y;  // from C_i \ C_{i-1,v}, not in E_{>i-1}
  std::vector<EdgeId> z;  // the remaining level-i in-edges
};

// Splits K_{i-1}(v) into X/Y/Z for 1 <= i <= L. Throws kInternal if the
// three sets do not partition K_{i-1}(v).
CriticalSplit PartitionCritical(const Graph& g, const Hierarchy& h, int i,
                                Vertex v);

struct ColorSplit {
  std::vector<int> x, y, z;
};

// Fills X, then Y, then Z with ascending colors up to each cap. Throws
// kInvariantBroken when the colors do not fit.
ColorSplit SplitColors(const ColorSet& colors, std::int64_t cap_x,
                       std::int64_t cap_y, std::int64_t cap_z);

struct ComponentFlowOutcome {
  // Nonempty C* inside the component with rho(C*) < k.
  std::optional<VertexSet> cut;
  // paths[j] carries colors[j]; its end is that color's leader.
  std::vector<int> colors;
  std::vector<FlowPath> paths;
};

// One max-flow inside G[C]: supply Delta_i, sink i * deg^-_{E_i}, flow
// bounded by min(k, total sink).
ComponentFlowOutcome ComponentFlow(const Graph& g, const Hierarchy& h, int i,
                                   const std::vector<Vertex>& component,
                                   const ColorSet& z_colors, int k);

// Pairs (w, v_1), (v_1, v_2), ... over breakpoints in ascending id order.
// A leading pair whose endpoints coincide needs no path and is omitted.
Demand ChainDemand(Vertex leader, std::vector<Vertex> breakpoints);

struct LevelReport {
  int level = 0;
  int congestion = 0;
  int demand_pairs = 0;
  int flow_paths = 0;
  // Routing congestion over 3i: the measured kappa/phi of this level.
  Rational routing_factor;
  // max(1, routing factors of levels 1..i); Invariant 3 reads
  // |Gamma_i(e)| <= 5 i^2 * bound_factor.
  Rational bound_factor{1};
  double kappa_observed = 0.0;
  int max_edge_colors = 0;
};

struct LevelOutcome {
  // Set in the cut case: a nonempty C* with rho(C*) < k.
  std::optional<VertexSet> violating_set;
  ColorState state;
  LevelReport report;
  Demand demand;
  std::vector<int> demand_colors;
  RoutingOutcome routing;
};

// Computes level-i colors from level-(i-1) colors (breakpoint split, one
// flow per component, chain routing) and asserts Invariants 1-3.
LevelOutcome RunLevel(const Graph& g, const Hierarchy& h, int i,
                      const ColorState& prev, Rational prev_bound_factor,
                      const RoutingOptions& routing);

// Invariants 1-3 at state.level; Invariant 3 against bound_factor.
std::optional<std::string> CheckLevelInvariants(const Graph& g,
                                                const Hierarchy& h,
                                                const ColorState& state,
                                                Rational bound_factor);

// Gamma_L(e) plus each Gamma_L(v) spread round-robin over K_L(v), at most
// L + 1 colors per edge.
std::vector<ColorSet> FinalizeColoring(const Graph& g, const Hierarchy& h,
                                       const ColorState& top);

struct PackingResult {
  enum class Outcome { kTrees, kCut };

  Outcome outcome = Outcome::kTrees;
  int k = 0;
  // trees[c - 1] is the arborescence of color c.
  std::vector<std::vector<EdgeId>> trees;
  int congestion = 0;
  // Cut case: S contains the source and delta(S) < k.
  VertexSet cut;
  Capacity cut_delta = 0;
  std::string cut_stage;
  int cut_level = -1;
  int levels = 0;
  std::vector<LevelReport> level_reports;
};

// Per color, a DFS from the source over that color's edges (lowest head id
// first). Throws kProperty1Violation if a color does not span.
PackingResult ExtractArborescences(const Graph& g,
                                   const std::vector<ColorSet>& coloring, int k);

struct PackOptions {
  std::uint64_t seed = 1;
  int reroute_sweeps = 3;
  int trials_multiplier = 4;
  std::function<void(const LevelOutcome&)> on_level;
};

// k arborescences with low congestion, or a cut S with delta(S) < k.
// Unit capacities only.
PackingResult Pack(const Graph& g, int k, Rational phi_target,
                   const PackOptions& options = {});
PackingResult Pack(const Graph& g, const Hierarchy& h, int k,
                   const PackOptions& options = {});

// Membership counts of edges across trees.
std::vector<int> TreeLoads(const Graph& g,
                           const std::vector<std::vector<EdgeId>>& trees);

}  // namespace arbor

#endif  // ARBOR_PACKING_H_
