#include "arbor/graph.h"

#include <algorithm>
#include <queue>
#include <string>

#include "arbor/error.h"

namespace arbor {

Graph Normalize(int n, Vertex source, std::span<const RawEdge> edges,
                NormalizeReport* report) {
  if (n < 1) Fail(ErrorKind::kMalformedInput, "graph needs at least one vertex");
  if (source < 0 || source >= n) {
    Fail(ErrorKind::kMalformedInput,
         "source " + std::to_string(source) + " out of range");
  }
  Graph g;
  g.n_ = n;
  g.source_ = source;
  g.out_edges_.assign(n, {});
  g.in_edges_.assign(n, {});
  NormalizeReport local;
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    const RawEdge& e = edges[i];
    if (e.tail < 0 || e.tail >= n || e.head < 0 || e.head >= n) {
      Fail(ErrorKind::kMalformedInput,
           "edge " + std::to_string(i) + " has a vertex id out of range");
    }
    if (e.capacity < 1 || e.capacity > kMaxCapacity) {
      Fail(ErrorKind::kMalformedInput,
           "edge " + std::to_string(i) + " has capacity outside [1, 2^40]");
    }
    if (e.tail == e.head) {
      ++local.dropped_self_loops;
      continue;
    }
    if (e.head == source) {
      ++local.dropped_into_source;
      continue;
    }
    const EdgeId id = g.m();
    g.tail_.push_back(e.tail);
    g.head_.push_back(e.head);
    g.capacity_.push_back(e.capacity);
    g.out_edges_[e.tail].push_back(id);
    g.in_edges_[e.head].push_back(id);
    g.max_capacity_ = std::max(g.max_capacity_, e.capacity);
    g.total_capacity_ += e.capacity;
    local.original_index.push_back(i);
  }
  if (report != nullptr) *report = std::move(local);
  return g;
}

std::vector<RawEdge> Graph::Edges() const {
  std::vector<RawEdge> out;
  out.reserve(m());
  for (EdgeId e = 0; e < m(); ++e) out.push_back({tail_[e], head_[e], capacity_[e]});
  return out;
}

Capacity CapacityOf(const Graph& g, const EdgeSet& edges) {
  Capacity total = 0;
  for (EdgeId e = 0; e < g.m(); ++e) {
    if (edges.Contains(e)) total += g.capacity(e);
  }
  return total;
}

VertexSet Partition::ComponentSet(int c) const {
  return VertexSet::Of(static_cast<int>(component_of.size()), components[c]);
}

Partition Partition::Singletons(int n) {
  Partition p;
  p.component_of.resize(n);
  p.components.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    p.component_of[v] = v;
    p.components[v] = {v};
  }
  return p;
}

Partition Scc(const Graph& g, const EdgeSet& removed) {
  const int n = g.n();
  std::vector<int> index(n, -1), low(n, 0), raw_comp(n, -1);
  std::vector<char> on_stack(n, 0);
  std::vector<Vertex> stack;
  int next_index = 0, comp_count = 0;

  // Iterative Tarjan; frames hold (vertex, position in out-edge list).
  std::vector<std::pair<Vertex, int>> frames;
  for (Vertex root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    frames.push_back({root, 0});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      auto out = g.out_edges(v);
      if (pos < static_cast<int>(out.size())) {
        const EdgeId e = out[pos++];
        if (removed.Contains(e)) continue;
        const Vertex w = g.head(e);
        if (index[w] == -1) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const Vertex done = v;
      frames.pop_back();
      if (!frames.empty()) {
        const Vertex parent = frames.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          raw_comp[w] = comp_count;
        } while (w != done);
        ++comp_count;
      }
    }
  }

  // Renumber components by smallest member.
  std::vector<int> relabel(comp_count, -1);
  Partition p;
  p.component_of.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    int& label = relabel[raw_comp[v]];
    if (label == -1) {
      label = p.size();
      p.components.emplace_back();
    }
    p.component_of[v] = label;
    p.components[label].push_back(v);
  }
  return p;
}

std::vector<int> SccTopoOrder(const Graph& g, const Partition& partition,
                              const EdgeSet& removed) {
  const int c = partition.size();
  std::vector<std::vector<int>> succ(c);
  std::vector<int> indegree(c, 0);
  for (EdgeId e = 0; e < g.m(); ++e) {
    if (removed.Contains(e)) continue;
    const int cu = partition.ComponentOf(g.tail(e));
    const int cv = partition.ComponentOf(g.head(e));
    if (cu == cv) continue;
    succ[cu].push_back(cv);
    ++indegree[cv];
  }
  const int source_comp = partition.ComponentOf(g.source());
  auto key = [&](int comp) { return comp == source_comp ? -1 : comp; };
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int comp = 0; comp < c; ++comp) {
    if (indegree[comp] == 0) ready.push(key(comp));
  }
  std::vector<int> order;
  order.reserve(c);
  while (!ready.empty()) {
    const int k = ready.top();
    ready.pop();
    const int comp = k == -1 ? source_comp : k;
    order.push_back(comp);
    for (int next : succ[comp]) {
      if (--indegree[next] == 0) ready.push(key(next));
    }
  }
  Check(static_cast<int>(order.size()) == c,
        "cycle among components: partition is not an SCC condensation");
  return order;
}

CutValue CutValues(const Graph& g, const VertexSet& s) {
  CutValue cut;
  for (EdgeId e = 0; e < g.m(); ++e) {
    const bool in_tail = s.Contains(g.tail(e));
    const bool in_head = s.Contains(g.head(e));
    if (in_tail && !in_head) cut.delta += g.capacity(e);
    if (!in_tail && in_head) cut.rho += g.capacity(e);
  }
  return cut;
}

Capacity Degrees::Volume(const VertexSet& s) const {
  Capacity total = 0;
  for (Vertex v = 0; v < static_cast<int>(in.size()); ++v) {
    if (s.Contains(v)) total += Deg(v);
  }
  return total;
}

Capacity Degrees::Volume(std::span<const Vertex> vertices) const {
  Capacity total = 0;
  for (Vertex v : vertices) total += Deg(v);
  return total;
}

Degrees RestrictedDegrees(const Graph& g, const EdgeSet& f) {
  Degrees d;
  d.in.assign(g.n(), 0);
  d.out.assign(g.n(), 0);
  for (EdgeId e = 0; e < g.m(); ++e) {
    if (!f.Contains(e)) continue;
    d.out[g.tail(e)] += g.capacity(e);
    d.in[g.head(e)] += g.capacity(e);
  }
  return d;
}

VertexSet Reachable(const Graph& g, Vertex from, const EdgeSet* allowed) {
  VertexSet seen(g.n());
  std::vector<Vertex> stack = {from};
  seen.Insert(from);
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (EdgeId e : g.out_edges(v)) {
      if (allowed != nullptr && !allowed->Contains(e)) continue;
      const Vertex w = g.head(e);
      if (!seen.Contains(w)) {
        seen.Insert(w);
        stack.push_back(w);
      }
    }
  }
  return seen;
}

}  // namespace arbor
