#include "brute_force.h"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace arbor::testing {

namespace {

constexpr Capacity kNone = std::numeric_limits<Capacity>::max();

void RequireSmall(int n) {
  if (n > 20) throw std::invalid_argument("enumeration needs n <= 20");
}

bool In(std::uint32_t mask, Vertex v) { return (mask >> v) & 1; }

Capacity Rho(const Graph& g, std::uint32_t mask) {
  Capacity rho = 0;
  for (EdgeId e = 0; e < g.m(); ++e) {
    if (!In(mask, g.tail(e)) && In(mask, g.head(e))) rho += g.capacity(e);
  }
  return rho;
}

}  // namespace

Capacity BruteForceRootedMincut(const Graph& g) {
  RequireSmall(g.n());
  if (g.n() == 1) return -1;
  Capacity best = kNone;
  for (std::uint32_t mask = 1; mask < (1u << g.n()); ++mask) {
    if (In(mask, g.source())) continue;
    best = std::min(best, Rho(g, mask));
  }
  return best;
}

Capacity BruteForceStCut(const Graph& g, Vertex s, Vertex t) {
  RequireSmall(g.n());
  Capacity best = kNone;
  for (std::uint32_t mask = 0; mask < (1u << g.n()); ++mask) {
    if (!In(mask, s) || In(mask, t)) continue;
    const std::uint32_t outside = ((1u << g.n()) - 1) & ~mask;
    best = std::min(best, Rho(g, outside));
  }
  return best;
}

Capacity BruteForceComponentCut(const Graph& g, const VertexSet& component, Vertex v) {
  RequireSmall(g.n());
  std::uint32_t allowed = 0;
  for (Vertex u : component.Members()) allowed |= 1u << u;
  Capacity best = kNone;
  for (std::uint32_t mask = 1; mask < (1u << g.n()); ++mask) {
    if ((mask & ~allowed) != 0 || !In(mask, v)) continue;
    best = std::min(best, Rho(g, mask));
  }
  return best;
}

Capacity BruteForceFlowCut(const FlowProblem& p) {
  const Graph& g = *p.graph;
  RequireSmall(g.n());
  Capacity best = kNone;
  for (std::uint32_t mask = 0; mask < (1u << g.n()); ++mask) {
    Capacity cut = 0;
    for (Vertex v = 0; v < g.n(); ++v) {
      cut += In(mask, v) ? p.sink_capacity[v] : p.source_supply[v];
    }
    for (EdgeId e = 0; e < g.m(); ++e) {
      if (p.allowed_edges && !p.allowed_edges->Contains(e)) continue;
      if (In(mask, g.tail(e)) && !In(mask, g.head(e))) {
        cut += g.capacity(e) * p.capacity_scale;
      }
    }
    best = std::min(best, cut);
  }
  return best;
}

RawGraph RandomDigraph(std::mt19937_64& rng, int n, int m, Capacity max_cap) {
  RawGraph out;
  out.n = n;
  std::uniform_int_distribution<Vertex> vertex(0, n - 1);
  std::uniform_int_distribution<Capacity> cap(1, max_cap);
  for (int j = 0; j < m; ++j) {
    const Vertex t = vertex(rng);
    const Vertex h = vertex(rng);
    out.edges.push_back({t, h, cap(rng)});
  }
  return out;
}

Graph PathGraph(int n) {
  std::vector<RawEdge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, 1});
  return Normalize(n, 0, edges);
}

Graph SourcedClique(int q) {
  std::vector<RawEdge> edges = {{0, 1, 1}};
  for (Vertex u = 1; u <= q; ++u) {
    for (Vertex v = 1; v <= q; ++v) {
      if (u != v) edges.push_back({u, v, 1});
    }
  }
  return Normalize(q + 1, 0, edges);
}

Graph TwoCliques(int q, EdgeId* forward_bridge, EdgeId* backward_bridge) {
  std::vector<RawEdge> edges = {{0, 1, 1}};
  for (Vertex base : {1, q + 1}) {
    for (Vertex u = base; u < base + q; ++u) {
      for (Vertex v = base; v < base + q; ++v) {
        if (u != v) edges.push_back({u, v, 1});
      }
    }
  }
  *forward_bridge = static_cast<EdgeId>(edges.size());
  edges.push_back({q, q + 1, 1});
  *backward_bridge = static_cast<EdgeId>(edges.size());
  edges.push_back({q + 1, q, 1});
  return Normalize(2 * q + 1, 0, edges);
}

Hierarchy HierarchyFromLevels(const Graph& g, std::vector<EdgeSet> levels,
                              Rational phi_target) {
  Hierarchy h;
  h.phi_target = phi_target;
  h.levels = std::move(levels);
  h.achieved_phi.assign(h.levels.size(), phi_target);
  h.top_level.assign(g.m(), 0);
  for (int i = 1; i <= h.num_levels(); ++i) {
    for (EdgeId e : h.Level(i).Members()) h.top_level[e] = i;
  }
  h.partitions.push_back(Partition::Singletons(g.n()));
  for (int i = 1; i <= h.num_levels(); ++i) h.partitions.push_back(Scc(g, h.EdgesAbove(i)));
  return h;
}

}  // namespace arbor::testing
