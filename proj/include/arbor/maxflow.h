#ifndef ARBOR_MAXFLOW_H_
#define ARBOR_MAXFLOW_H_

#include <optional>
#include <vector>

#include "arbor/graph.h"

namespace arbor {

// Multi-source multi-sink flow instance. A virtual super-source feeds each
// vertex v up to source_supply[v]; a virtual super-sink drains up to
// sink_capacity[v]. Neither terminal is ever visible as a vertex id.
struct FlowProblem {
  explicit FlowProblem(const Graph& g)
      : graph(&g), source_supply(g.n(), 0), sink_capacity(g.n(), 0) {}

  const Graph* graph;
  std::vector<Capacity> source_supply;
  std::vector<Capacity> sink_capacity;
  std::optional<Capacity> flow_bound;
  // When set, only these edges carry flow.
  std::optional<EdgeSet> allowed_edges;
  // Every edge capacity is multiplied by this factor.
  Capacity capacity_scale = 1;
};

struct FlowResult {
  Capacity value = 0;
  std::vector<Capacity> edge_flow;
  std::vector<Capacity> source_used;
  std::vector<Capacity> sink_used;
  // Real vertices unreachable from the super-source in the final residual
  // graph. A minimum cut whenever the flow was not stopped by flow_bound.
  VertexSet sink_side;
};

// Exact integral maximum flow by phase-based blocking flows.
FlowResult MaxFlow(const FlowProblem& problem);

// Single source/sink instance with effectively unbounded terminal arcs.
FlowProblem StCutProblem(const Graph& g, Vertex s, Vertex t);

struct FlowPath {
  Vertex start = 0;
  Vertex end = 0;
  std::vector<EdgeId> edges;
};

// Splits an integral flow into `value` unit paths from supply vertices to
// sink vertices; cycles are cancelled. Tracing starts from the lowest-id
// vertex with unused supply and follows the lowest-id edge with remaining
// flow. Throws kInternal when the flow violates conservation.
std::vector<FlowPath> DecomposePaths(const Graph& g, const FlowResult& flow);

}  // namespace arbor

#endif  // ARBOR_MAXFLOW_H_
