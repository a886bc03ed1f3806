#include "arbor/packing.h"

#include <algorithm>
#include <map>
#include <string>

#include "arbor/error.h"

namespace arbor {

namespace {

std::int64_t EdgeCount(std::size_t n) { return static_cast<std::int64_t>(n); }

int InDegreeIn(const Graph& g, const EdgeSet& edges, Vertex v) {
  int count = 0;
  for (EdgeId e : g.in_edges(v)) count += edges.Contains(e);
  return count;
}

PackingResult CutResult(const Graph& g, int k, VertexSet s, std::string stage,
                        int level) {
  PackingResult r;
  r.outcome = PackingResult::Outcome::kCut;
  r.k = k;
  r.cut_delta = CutValues(g, s).delta;
  r.cut = std::move(s);
  r.cut_stage = std::move(stage);
  r.cut_level = level;
  Check(r.cut.Contains(g.source()), "certifying cut must contain the source");
  Check(r.cut_delta < k, "certifying cut is not smaller than k");
  return r;
}

}  // namespace

BaseOutcome InitBaseColors(const Graph& g, int k) {
  BaseOutcome out;
  out.state.level = 0;
  out.state.k = k;
  out.state.edge_colors.assign(g.m(), {});
  out.state.vertex_colors.assign(g.n(), {});
  for (Vertex v = 0; v < g.n(); ++v) {
    if (v == g.source()) continue;
    if (static_cast<int>(g.in_edges(v).size()) < k) {
      VertexSet s = VertexSet::Full(g.n());
      s.Erase(v);
      out.cut = std::move(s);
      return out;
    }
    for (int c = 1; c <= k; ++c) out.state.vertex_colors[v].insert(c);
  }
  return out;
}

std::vector<EdgeId> CriticalEdges(const Graph& g, const Hierarchy& h, int i,
                                  Vertex v) {
  const Partition& p = h.PartitionAt(i);
  std::vector<EdgeId> out;
  for (EdgeId e : g.in_edges(v)) {
    if (p.ComponentOf(g.tail(e)) != p.ComponentOf(v) || h.Above(e, i)) {
      out.push_back(e);
    }
  }
  return out;
}

CriticalSplit PartitionCritical(const Graph& g, const Hierarchy& h, int i,
                                Vertex v) {
  if (i < 1 || i > h.num_levels()) {
    Fail(ErrorKind::kParameter, "level out of range for critical split");
  }
  const Partition& lower = h.PartitionAt(i - 1);
  const Partition& upper = h.PartitionAt(i);
  CriticalSplit split;
  split.x = CriticalEdges(g, h, i, v);
  const auto in_x = [&](EdgeId e) {
    return std::binary_search(split.x.begin(), split.x.end(), e);
  };
  for (EdgeId e : g.in_edges(v)) {
    const Vertex u = g.tail(e);
    const bool enters_lower = lower.ComponentOf(u) != lower.ComponentOf(v);
    const bool inside_upper = upper.ComponentOf(u) == upper.ComponentOf(v);
    if (enters_lower && inside_upper && !h.Above(e, i - 1)) {
      split.y.push_back(e);
    } else if (h.Level(i).Contains(e) && !in_x(e)) {
      split.z.push_back(e);
    }
  }
  std::vector<EdgeId> joined = split.x;
  joined.insert(joined.end(), split.y.begin(), split.y.end());
  joined.insert(joined.end(), split.z.begin(), split.z.end());
  std::sort(joined.begin(), joined.end());
  Check(std::adjacent_find(joined.begin(), joined.end()) == joined.end() &&
            joined == CriticalEdges(g, h, i - 1, v),
        "E_X, E_Y, E_Z do not partition K_{i-1}(" + std::to_string(v) + ")");
  return split;
}

ColorSplit SplitColors(const ColorSet& colors, std::int64_t cap_x,
                       std::int64_t cap_y, std::int64_t cap_z) {
  if (EdgeCount(colors.size()) > cap_x + cap_y + cap_z) {
    Fail(ErrorKind::kInvariantBroken,
         "breakpoint colors exceed the critical-edge capacity");
  }
  ColorSplit out;
  for (int c : colors) {
    if (EdgeCount(out.x.size()) < cap_x) {
      out.x.push_back(c);
    } else if (EdgeCount(out.y.size()) < cap_y) {
      out.y.push_back(c);
    } else {
      out.z.push_back(c);
    }
  }
  return out;
}

ComponentFlowOutcome ComponentFlow(const Graph& g, const Hierarchy& h, int i,
                                   const std::vector<Vertex>& component,
                                   const ColorSet& z_colors, int k) {
  ComponentFlowOutcome out;
  if (z_colors.empty()) return out;

  const VertexSet inside = VertexSet::Of(g.n(), component);
  FlowProblem p(g);
  p.allowed_edges = EdgeSet(g.m());
  for (EdgeId e = 0; e < g.m(); ++e) {
    if (inside.Contains(g.tail(e)) && inside.Contains(g.head(e))) {
      p.allowed_edges->Insert(e);
    }
  }
  Capacity total_sink = 0;
  for (Vertex v : component) {
    p.source_supply[v] = static_cast<Capacity>(CriticalEdges(g, h, i, v).size());
    p.sink_capacity[v] = static_cast<Capacity>(i) * InDegreeIn(g, h.Level(i), v);
    total_sink += p.sink_capacity[v];
  }
  const Capacity bound = std::min<Capacity>(k, total_sink);
  p.flow_bound = bound;
  const FlowResult r = MaxFlow(p);

  if (r.value < bound) {
    VertexSet cut = r.sink_side;
    cut &= inside;
    Check(!cut.Empty(), "component flow cut is empty");
    Check(CutValues(g, cut).rho < k, "component flow cut is not below k");
    out.cut = std::move(cut);
    return out;
  }
  std::vector<FlowPath> paths = DecomposePaths(g, r);
  Check(paths.size() >= z_colors.size(),
        "flow decomposition yields fewer paths than breakpoint colors");
  out.colors.assign(z_colors.begin(), z_colors.end());
  paths.resize(out.colors.size());
  out.paths = std::move(paths);
  return out;
}

Demand ChainDemand(Vertex leader, std::vector<Vertex> breakpoints) {
  std::sort(breakpoints.begin(), breakpoints.end());
  Demand d;
  Vertex prev = leader;
  for (Vertex v : breakpoints) {
    if (v != prev) d.pairs.push_back({prev, v});
    prev = v;
  }
  return d;
}

std::optional<std::string> CheckLevelInvariants(const Graph& g,
                                                const Hierarchy& h,
                                                const ColorState& state,
                                                Rational bound_factor) {
  const int i = state.level;
  const Partition& p = h.PartitionAt(i);
  const Vertex s = g.source();

  for (int color = 1; color <= state.k; ++color) {
    for (int c = 0; c < p.size(); ++c) {
      if (c == p.ComponentOf(s)) continue;
      std::vector<char> seen(g.n(), 0);
      std::vector<Vertex> stack;
      for (Vertex v : p.components[c]) {
        if (state.vertex_colors[v].contains(color)) {
          seen[v] = 1;
          stack.push_back(v);
        }
      }
      while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        for (EdgeId e : g.out_edges(v)) {
          if (!state.edge_colors[e].contains(color) || seen[g.head(e)]) continue;
          seen[g.head(e)] = 1;
          stack.push_back(g.head(e));
        }
      }
      for (Vertex v : p.components[c]) {
        if (!seen[v]) {
          return "Invariant 1 fails at level " + std::to_string(i) + ": vertex " +
                 std::to_string(v) + " unreachable in color " + std::to_string(color);
        }
      }
    }
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    if (v == s) continue;
    const auto delta = EdgeCount(CriticalEdges(g, h, i, v).size());
    if (EdgeCount(state.vertex_colors[v].size()) > delta * (i + 1)) {
      return "Invariant 2 fails at level " + std::to_string(i) + " for vertex " +
             std::to_string(v);
    }
  }
  const __int128 limit = static_cast<__int128>(5) * i * i * bound_factor.num();
  for (EdgeId e = 0; e < g.m(); ++e) {
    if (static_cast<__int128>(state.edge_colors[e].size()) * bound_factor.den() > limit) {
      return "Invariant 3 fails at level " + std::to_string(i) + " on edge " +
             std::to_string(e);
    }
  }
  return std::nullopt;
}

LevelOutcome RunLevel(const Graph& g, const Hierarchy& h, int i,
                      const ColorState& prev, Rational prev_bound_factor,
                      const RoutingOptions& routing) {
  if (prev.level != i - 1) Fail(ErrorKind::kParameter, "level states out of order");
  const Partition& upper = h.PartitionAt(i);
  const Vertex s = g.source();
  const int source_comp = upper.ComponentOf(s);

  LevelOutcome out;
  ColorState& state = out.state;
  state.level = i;
  state.k = prev.k;
  state.edge_colors = prev.edge_colors;
  state.vertex_colors.assign(g.n(), {});
  out.report.level = i;

  // Step 1: keep X as breakpoints, push Y onto E_Y, hold Z for the flow.
  std::vector<std::vector<int>> z_of(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    if (v == s) continue;
    const CriticalSplit split = PartitionCritical(g, h, i, v);
    const ColorSplit colors = SplitColors(
        prev.vertex_colors[v], EdgeCount(split.x.size()) * i,
        EdgeCount(split.y.size()) * i, EdgeCount(split.z.size()) * i);
    state.vertex_colors[v].insert(colors.x.begin(), colors.x.end());
    for (std::size_t j = 0; j < colors.y.size(); ++j) {
      state.edge_colors[split.y[j % split.y.size()]].insert(colors.y[j]);
    }
    z_of[v] = colors.z;
  }

  // Step 2: one flow per component; color paths, record leaders.
  std::vector<std::map<int, Vertex>> leaders(upper.size());
  for (int c = 0; c < upper.size(); ++c) {
    if (c == source_comp) continue;
    ColorSet z_colors;
    for (Vertex v : upper.components[c]) z_colors.insert(z_of[v].begin(), z_of[v].end());
    ComponentFlowOutcome flow =
        ComponentFlow(g, h, i, upper.components[c], z_colors, state.k);
    if (flow.cut) {
      out.violating_set = std::move(flow.cut);
      return out;
    }
    for (std::size_t j = 0; j < flow.colors.size(); ++j) {
      const int color = flow.colors[j];
      const FlowPath& path = flow.paths[j];
      for (EdgeId e : path.edges) state.edge_colors[e].insert(color);
      state.vertex_colors[path.start].insert(color);
      leaders[c][color] = path.end;
    }
    out.report.flow_paths += static_cast<int>(flow.colors.size());
  }

  // Step 3: chain each leader through its breakpoints and route.
  for (int c = 0; c < upper.size(); ++c) {
    for (const auto& [color, leader] : leaders[c]) {
      std::vector<Vertex> breakpoints;
      for (Vertex v : upper.components[c]) {
        if (std::find(z_of[v].begin(), z_of[v].end(), color) != z_of[v].end()) {
          breakpoints.push_back(v);
        }
      }
      for (const DemandPair& pair : ChainDemand(leader, breakpoints).pairs) {
        out.demand.pairs.push_back(pair);
        out.demand_colors.push_back(color);
      }
    }
  }
  std::vector<std::int64_t> bound(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    bound[v] = std::int64_t{3} * i * InDegreeIn(g, h.Level(i), v);
  }
  const RespectingVerdict verdict = RespectingCheck(out.demand, bound);
  if (!verdict.ok) {
    Fail(ErrorKind::kInvariantBroken,
         "level-" + std::to_string(i) + " demand is not 3i deg-respecting at vertex " +
             std::to_string(verdict.first_violation));
  }
  ValidateDemand(out.demand, upper);
  RoutingOptions level_routing = routing;
  level_routing.seed = routing.seed * 0x2545F4914F6CDD1DULL + i;
  out.routing = Route(g, out.demand, level_routing);
  for (std::size_t j = 0; j < out.routing.paths.size(); ++j) {
    for (EdgeId e : out.routing.paths[j]) {
      state.edge_colors[e].insert(out.demand_colors[j]);
    }
  }

  LevelReport& report = out.report;
  report.congestion = out.routing.congestion;
  report.demand_pairs = static_cast<int>(out.demand.pairs.size());
  report.routing_factor = Rational(report.congestion, 3 * i);
  report.bound_factor =
      std::max({prev_bound_factor, report.routing_factor, Rational(1)});
  report.kappa_observed =
      report.congestion * h.phi_target.ToDouble() / (3.0 * i);
  for (const auto& colors : state.edge_colors) {
    report.max_edge_colors =
        std::max(report.max_edge_colors, static_cast<int>(colors.size()));
  }
  if (auto broken = CheckLevelInvariants(g, h, state, report.bound_factor)) {
    Fail(ErrorKind::kInvariantBroken, *broken);
  }
  return out;
}

std::vector<ColorSet> FinalizeColoring(const Graph& g, const Hierarchy& h,
                                       const ColorState& top) {
  const int levels = h.num_levels();
  std::vector<ColorSet> coloring = top.edge_colors;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (v == g.source() || top.vertex_colors[v].empty()) continue;
    const std::vector<EdgeId> critical = CriticalEdges(g, h, levels, v);
    if (EdgeCount(top.vertex_colors[v].size()) >
        EdgeCount(critical.size()) * (levels + 1)) {
      Fail(ErrorKind::kInvariantBroken,
           "vertex " + std::to_string(v) + " holds more colors than its critical edges take");
    }
    int j = 0;
    for (int color : top.vertex_colors[v]) {
      coloring[critical[j++ % critical.size()]].insert(color);
    }
  }
  for (EdgeId e = 0; e < g.m(); ++e) {
    Check(coloring[e].size() <= top.edge_colors[e].size() + levels + 1,
          "final coloring exceeds |Gamma_L(e)| + L + 1");
  }
  return coloring;
}

std::vector<int> TreeLoads(const Graph& g,
                           const std::vector<std::vector<EdgeId>>& trees) {
  std::vector<int> load(g.m(), 0);
  for (const auto& tree : trees) {
    for (EdgeId e : tree) ++load[e];
  }
  return load;
}

PackingResult ExtractArborescences(const Graph& g,
                                   const std::vector<ColorSet>& coloring, int k) {
  PackingResult result;
  result.k = k;
  for (int color = 1; color <= k; ++color) {
    // Colored out-edges sorted by (head, id).
    std::vector<std::vector<EdgeId>> out(g.n());
    for (EdgeId e = 0; e < g.m(); ++e) {
      if (coloring[e].contains(color)) out[g.tail(e)].push_back(e);
    }
    for (auto& list : out) {
      std::stable_sort(list.begin(), list.end(), [&](EdgeId a, EdgeId b) {
        return g.head(a) < g.head(b);
      });
    }
    std::vector<char> seen(g.n(), 0);
    std::vector<std::pair<Vertex, std::size_t>> stack = {{g.source(), 0}};
    seen[g.source()] = 1;
    std::vector<EdgeId> tree;
    while (!stack.empty()) {
      auto& [v, pos] = stack.back();
      if (pos == out[v].size()) {
        stack.pop_back();
        continue;
      }
      const EdgeId e = out[v][pos++];
      const Vertex w = g.head(e);
      if (seen[w]) continue;
      seen[w] = 1;
      tree.push_back(e);
      stack.push_back({w, 0});
    }
    for (Vertex v = 0; v < g.n(); ++v) {
      if (!seen[v]) {
        Fail(ErrorKind::kProperty1Violation,
             "color " + std::to_string(color) + " does not reach vertex " +
                 std::to_string(v));
      }
    }
    result.trees.push_back(std::move(tree));
  }
  const auto load = TreeLoads(g, result.trees);
  result.congestion = load.empty() ? 0 : *std::max_element(load.begin(), load.end());
  return result;
}

PackingResult Pack(const Graph& g, int k, Rational phi_target,
                   const PackOptions& options) {
  DecompOptions decomp;
  decomp.seed = options.seed;
  decomp.trials_multiplier = options.trials_multiplier;
  if (k < 1) Fail(ErrorKind::kParameter, "k must be at least 1");
  if (!g.unit_capacities()) {
    Fail(ErrorKind::kUnsupported, "arborescence packing needs unit capacities");
  }
  return Pack(g, BuildHierarchy(g, phi_target, decomp), k, options);
}

PackingResult Pack(const Graph& g, const Hierarchy& h, int k,
                   const PackOptions& options) {
  if (k < 1) Fail(ErrorKind::kParameter, "k must be at least 1");
  if (!g.unit_capacities()) {
    Fail(ErrorKind::kUnsupported, "arborescence packing needs unit capacities");
  }
  if (static_cast<int>(h.top_level.size()) != g.m()) {
    Fail(ErrorKind::kParameter, "hierarchy was not built on this graph");
  }
  VertexSet reach = Reachable(g, g.source());
  if (reach.Size() < g.n()) return CutResult(g, k, std::move(reach), "unreachable", 0);

  BaseOutcome base = InitBaseColors(g, k);
  if (base.cut) return CutResult(g, k, std::move(*base.cut), "base", 0);

  ColorState state = std::move(base.state);
  Rational bound_factor(1);
  std::vector<LevelReport> reports;
  RoutingOptions routing{options.seed, options.reroute_sweeps};
  for (int i = 1; i <= h.num_levels(); ++i) {
    LevelOutcome level = RunLevel(g, h, i, state, bound_factor, routing);
    if (options.on_level) options.on_level(level);
    if (level.violating_set) {
      PackingResult r =
          CutResult(g, k, level.violating_set->Complement(), "component_flow", i);
      r.levels = h.num_levels();
      r.level_reports = std::move(reports);
      return r;
    }
    bound_factor = level.report.bound_factor;
    reports.push_back(level.report);
    state = std::move(level.state);
  }

  PackingResult result = ExtractArborescences(g, FinalizeColoring(g, h, state), k);
  result.levels = h.num_levels();
  result.level_reports = std::move(reports);
  const int levels = h.num_levels();
  const __int128 limit =
      static_cast<__int128>(5) * levels * levels * bound_factor.num() +
      static_cast<__int128>(levels + 1) * bound_factor.den();
  Check(static_cast<__int128>(result.congestion) * bound_factor.den() <= limit,
        "tree congestion exceeds the instrumented coloring bound");
  return result;
}

}  // namespace arbor
