#include "arbor/mincut.h"

#include <algorithm>
#include <set>
#include <string>

#include "arbor/error.h"
#include "arbor/maxflow.h"
#include "arbor/random.h"

namespace arbor {

std::vector<Vertex> SampleEndpoints(const Graph& g, const EdgeSet& edges,
                                    int trials, std::mt19937_64& rng) {
  std::vector<EdgeId> ids;
  std::vector<Capacity> prefix;
  Capacity total = 0;
  for (EdgeId e = 0; e < g.m(); ++e) {
    if (!edges.Contains(e)) continue;
    total += g.capacity(e);
    ids.push_back(e);
    prefix.push_back(total);
  }
  if (ids.empty()) Fail(ErrorKind::kParameter, "cannot sample from an empty edge set");
  if (trials < 1) Fail(ErrorKind::kParameter, "trials must be positive");

  std::uniform_int_distribution<Capacity> pick(0, total - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<Vertex> out;
  out.reserve(trials);
  for (int t = 0; t < trials; ++t) {
    const Capacity x = pick(rng);
    const auto it = std::upper_bound(prefix.begin(), prefix.end(), x);
    const EdgeId e = ids[it - prefix.begin()];
    out.push_back(coin(rng) == 0 ? g.tail(e) : g.head(e));
  }
  return out;
}

CutCandidate MincutIntoComponent(const Graph& g, const VertexSet& component,
                                 Vertex v) {
  if (v < 0 || v >= g.n() || !component.Contains(v)) {
    Fail(ErrorKind::kParameter, "vertex " + std::to_string(v) + " not in component");
  }
  if (component.Contains(g.source())) {
    Fail(ErrorKind::kParameter, "component must not contain the source");
  }
  FlowProblem p(g);
  p.allowed_edges = EdgeSet(g.m());
  for (EdgeId e = 0; e < g.m(); ++e) {
    const bool tail_in = component.Contains(g.tail(e));
    const bool head_in = component.Contains(g.head(e));
    if (tail_in && head_in) {
      p.allowed_edges->Insert(e);
    } else if (head_in) {
      p.source_supply[g.head(e)] += g.capacity(e);
    }
  }
  p.sink_capacity[v] = g.total_capacity() + 1;
  const FlowResult r = MaxFlow(p);

  CutCandidate c;
  c.sink_side = r.sink_side;
  c.sink_side &= component;
  c.rho = r.value;
  c.sampled_vertex = v;
  Check(CutValues(g, c.sink_side).rho == c.rho,
        "component cut value does not re-evaluate");
  return c;
}

MincutResult ApproxRootedMincut(const Graph& g, const Hierarchy& h,
                                const MincutOptions& options) {
  if (static_cast<int>(h.top_level.size()) != g.m() ||
      h.partitions.empty() ||
      static_cast<int>(h.partitions[0].component_of.size()) != g.n()) {
    Fail(ErrorKind::kParameter, "hierarchy was not built on this graph");
  }
  if (g.n() < 2) Fail(ErrorKind::kParameter, "graph has no vertex besides the source");

  MincutResult result;
  result.trials_per_component = LogTrials(g.n(), options.trials_multiplier);
  bool have_best = false;
  auto offer = [&](CutCandidate c) {
    ++result.evaluated;
    if (!have_best || c.rho < result.best.rho) {
      result.best = c;
      have_best = true;
    }
    if (options.keep_candidates) result.candidates.push_back(std::move(c));
  };

  // Level 0: every component is a singleton {v} and C_v = {v}.
  const Partition& singletons = h.PartitionAt(0);
  for (Vertex v = 0; v < g.n(); ++v) {
    if (v == g.source()) continue;
    CutCandidate c;
    c.sink_side = VertexSet(g.n());
    c.sink_side.Insert(v);
    c.rho = CutValues(g, c.sink_side).rho;
    c.level = 0;
    c.component = singletons.ComponentOf(v);
    c.sampled_vertex = v;
    offer(std::move(c));
  }

  for (int i = 1; i <= h.num_levels(); ++i) {
    const Partition& p = h.PartitionAt(i);
    const EdgeSet& level_edges = h.Level(i);
    for (int c = 0; c < p.size(); ++c) {
      if (p.ComponentOf(g.source()) == c) continue;
      const VertexSet inside = p.ComponentSet(c);
      EdgeSet local(g.m());
      for (EdgeId e = 0; e < g.m(); ++e) {
        if (level_edges.Contains(e) && inside.Contains(g.tail(e)) &&
            inside.Contains(g.head(e))) {
          local.Insert(e);
        }
      }
      if (local.Empty()) continue;
      auto rng = MakeRng(options.seed, {static_cast<std::uint64_t>(i),
                                        static_cast<std::uint64_t>(c)});
      const auto samples =
          SampleEndpoints(g, local, result.trials_per_component, rng);
      // Repeated samples give identical cuts; evaluate each vertex once.
      std::set<Vertex> seen;
      for (Vertex v : samples) {
        if (!seen.insert(v).second) continue;
        CutCandidate cand = MincutIntoComponent(g, inside, v);
        cand.level = i;
        cand.component = c;
        offer(std::move(cand));
      }
    }
  }
  Check(!result.best.sink_side.Contains(g.source()) && !result.best.sink_side.Empty(),
        "rooted cut candidate is invalid");
  return result;
}

}  // namespace arbor
