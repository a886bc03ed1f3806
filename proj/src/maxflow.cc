#include "arbor/maxflow.h"

#include <algorithm>
#include <limits>
#include <string>

#include "arbor/error.h"

namespace arbor {

namespace {

constexpr Capacity kUnbounded = std::numeric_limits<Capacity>::max() / 4;

class Dinic {
 public:
  explicit Dinic(int nodes) : adj_(nodes), level_(nodes), next_(nodes) {}

  int AddArc(int from, int to, Capacity cap) {
    const int id = static_cast<int>(to_.size());
    to_.push_back(to);
    cap_.push_back(cap);
    adj_[from].push_back(id);
    to_.push_back(from);
    cap_.push_back(0);
    adj_[to].push_back(id + 1);
    return id;
  }

  Capacity Run(int s, int t, Capacity bound) {
    Capacity total = 0;
    while (total < bound && Bfs(s, t)) {
      std::fill(next_.begin(), next_.end(), 0);
      while (total < bound) {
        const Capacity pushed = Dfs(s, t, bound - total);
        if (pushed == 0) break;
        total += pushed;
      }
    }
    return total;
  }

  Capacity Flow(int arc) const { return cap_[arc ^ 1]; }

  std::vector<char> ReachableFrom(int s) const {
    std::vector<char> seen(adj_.size(), 0);
    std::vector<int> stack = {s};
    seen[s] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int arc : adj_[v]) {
        if (cap_[arc] > 0 && !seen[to_[arc]]) {
          seen[to_[arc]] = 1;
          stack.push_back(to_[arc]);
        }
      }
    }
    return seen;
  }

 private:
  bool Bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::vector<int> queue = {s};
    level_[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      for (int arc : adj_[v]) {
        if (cap_[arc] > 0 && level_[to_[arc]] < 0) {
          level_[to_[arc]] = level_[v] + 1;
          queue.push_back(to_[arc]);
        }
      }
    }
    return level_[t] >= 0;
  }

  Capacity Dfs(int v, int t, Capacity limit) {
    if (v == t) return limit;
    for (int& i = next_[v]; i < static_cast<int>(adj_[v].size()); ++i) {
      const int arc = adj_[v][i];
      const int w = to_[arc];
      if (cap_[arc] <= 0 || level_[w] != level_[v] + 1) continue;
      const Capacity pushed = Dfs(w, t, std::min(limit, cap_[arc]));
      if (pushed > 0) {
        cap_[arc] -= pushed;
        cap_[arc ^ 1] += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<std::vector<int>> adj_;
  std::vector<int> to_;
  std::vector<Capacity> cap_;
  std::vector<int> level_;
  std::vector<int> next_;
};

}  // namespace

FlowResult MaxFlow(const FlowProblem& problem) {
  const Graph& g = *problem.graph;
  const int n = g.n();
  const int super_source = n, super_sink = n + 1;
  Dinic dinic(n + 2);

  std::vector<int> edge_arc(g.m(), -1);
  for (EdgeId e = 0; e < g.m(); ++e) {
    if (problem.allowed_edges && !problem.allowed_edges->Contains(e)) continue;
    edge_arc[e] =
        dinic.AddArc(g.tail(e), g.head(e), g.capacity(e) * problem.capacity_scale);
  }
  std::vector<int> source_arc(n, -1), sink_arc(n, -1);
  for (Vertex v = 0; v < n; ++v) {
    if (problem.source_supply[v] > 0) {
      source_arc[v] = dinic.AddArc(super_source, v, problem.source_supply[v]);
    }
    if (problem.sink_capacity[v] > 0) {
      sink_arc[v] = dinic.AddArc(v, super_sink, problem.sink_capacity[v]);
    }
  }

  FlowResult result;
  const Capacity bound = problem.flow_bound.value_or(kUnbounded);
  result.value = bound <= 0 ? 0 : dinic.Run(super_source, super_sink, bound);
  result.edge_flow.assign(g.m(), 0);
  for (EdgeId e = 0; e < g.m(); ++e) {
    if (edge_arc[e] >= 0) result.edge_flow[e] = dinic.Flow(edge_arc[e]);
  }
  result.source_used.assign(n, 0);
  result.sink_used.assign(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (source_arc[v] >= 0) result.source_used[v] = dinic.Flow(source_arc[v]);
    if (sink_arc[v] >= 0) result.sink_used[v] = dinic.Flow(sink_arc[v]);
  }
  const auto reach = dinic.ReachableFrom(super_source);
  result.sink_side = VertexSet(n);
  for (Vertex v = 0; v < n; ++v) {
    if (!reach[v]) result.sink_side.Insert(v);
  }
  return result;
}

FlowProblem StCutProblem(const Graph& g, Vertex s, Vertex t) {
  FlowProblem p(g);
  const Capacity big = g.total_capacity() + 1;
  p.source_supply[s] = big;
  p.sink_capacity[t] = big;
  return p;
}

std::vector<FlowPath> DecomposePaths(const Graph& g, const FlowResult& flow) {
  const int n = g.n();
  std::vector<Capacity> remaining = flow.edge_flow;
  std::vector<Capacity> supply = flow.source_used;
  std::vector<Capacity> sink = flow.sink_used;

  // Out-edges in ascending id order are already the adjacency order.
  std::vector<int> cursor(n, 0);
  auto next_edge = [&](Vertex v) -> EdgeId {
    auto out = g.out_edges(v);
    while (cursor[v] < static_cast<int>(out.size()) &&
           remaining[out[cursor[v]]] == 0) {
      ++cursor[v];
    }
    return cursor[v] < static_cast<int>(out.size()) ? out[cursor[v]] : -1;
  };

  std::vector<FlowPath> paths;
  std::vector<int> position(n, -1);  // index of vertex on the current trace
  for (Vertex start = 0; start < n; ++start) {
    while (supply[start] > 0) {
      std::vector<Vertex> trace = {start};
      std::vector<EdgeId> edges;
      position[start] = 0;
      while (sink[trace.back()] == 0) {
        const Vertex v = trace.back();
        const EdgeId e = next_edge(v);
        if (e < 0) {
          for (Vertex u : trace) position[u] = -1;
          Fail(ErrorKind::kInternal,
               "flow violates conservation at vertex " + std::to_string(v));
        }
        const Vertex w = g.head(e);
        edges.push_back(e);
        if (position[w] >= 0) {
          // Cancel the cycle w -> ... -> v -> w and resume from w.
          const int from = position[w];
          for (std::size_t i = from; i < edges.size(); ++i) --remaining[edges[i]];
          for (std::size_t i = from + 1; i < trace.size(); ++i) position[trace[i]] = -1;
          trace.resize(from + 1);
          edges.resize(from);
          continue;
        }
        position[w] = static_cast<int>(trace.size());
        trace.push_back(w);
      }
      for (EdgeId e : edges) --remaining[e];
      for (Vertex u : trace) position[u] = -1;
      --supply[start];
      --sink[trace.back()];
      paths.push_back({start, trace.back(), std::move(edges)});
    }
  }
  Check(static_cast<Capacity>(paths.size()) == flow.value,
        "path decomposition does not match the flow value");
  return paths;
}

}  // namespace arbor
