#include "arbor/oracle.h"

#include <algorithm>

#include "arbor/error.h"
#include "arbor/maxflow.h"

namespace arbor {

RootedCut ExactRootedMincut(const Graph& g) {
  RootedCut best;
  for (Vertex t = 0; t < g.n(); ++t) {
    if (t == g.source()) continue;
    const FlowResult r = MaxFlow(StCutProblem(g, g.source(), t));
    if (r.value < best.value) {
      best.value = r.value;
      best.sink_side = r.sink_side;
    }
  }
  return best;
}

Capacity ExactGlobalMincut(int n, std::span<const RawEdge> edges) {
  std::vector<RawEdge> reversed;
  for (const RawEdge& e : edges) reversed.push_back({e.head, e.tail, e.capacity});
  Capacity best = kUnboundedCut;
  for (Vertex s = 0; s < n; ++s) {
    best = std::min(best, ExactRootedMincut(Normalize(n, s, edges)).value);
    best = std::min(best, ExactRootedMincut(Normalize(n, s, reversed)).value);
  }
  return best;
}

std::optional<Rational> BruteForceCutExpansion(const Graph& g,
                                               const Partition& partition,
                                               const EdgeSet& terminals) {
  if (g.n() > 16) Fail(ErrorKind::kScale, "cut-expansion enumeration needs n <= 16");
  const Degrees deg = RestrictedDegrees(g, terminals);
  std::optional<Rational> best;
  const std::uint32_t limit = std::uint32_t{1} << g.n();
  std::vector<Capacity> inside(partition.size());
  std::vector<Capacity> total(partition.size(), 0);
  for (Vertex v = 0; v < g.n(); ++v) total[partition.ComponentOf(v)] += deg.Deg(v);

  for (std::uint32_t mask = 1; mask + 1 < limit; ++mask) {
    Capacity delta = 0;
    Capacity rho = 0;
    for (EdgeId e = 0; e < g.m(); ++e) {
      const bool tail_in = (mask >> g.tail(e)) & 1;
      const bool head_in = (mask >> g.head(e)) & 1;
      if (tail_in && !head_in) delta += g.capacity(e);
      if (!tail_in && head_in) rho += g.capacity(e);
    }
    std::fill(inside.begin(), inside.end(), 0);
    for (Vertex v = 0; v < g.n(); ++v) {
      if ((mask >> v) & 1) inside[partition.ComponentOf(v)] += deg.Deg(v);
    }
    for (int c = 0; c < partition.size(); ++c) {
      const Capacity small = std::min(inside[c], total[c] - inside[c]);
      if (small == 0) continue;
      const Rational ratio(std::min(delta, rho), small);
      if (!best || ratio < *best) best = ratio;
    }
  }
  return best;
}

Verdict VerifyArborescence(const Graph& g, std::span<const EdgeId> tree) {
  for (EdgeId e : tree) {
    if (e < 0 || e >= g.m()) return {false, "edge id " + std::to_string(e) + " out of range"};
  }
  if (static_cast<int>(tree.size()) != g.n() - 1) {
    return {false, "size mismatch: " + std::to_string(tree.size()) + " edges for " +
                       std::to_string(g.n()) + " vertices"};
  }
  std::vector<int> indegree(g.n(), 0);
  std::vector<std::vector<Vertex>> children(g.n());
  for (EdgeId e : tree) {
    ++indegree[g.head(e)];
    children[g.tail(e)].push_back(g.head(e));
  }
  if (indegree[g.source()] != 0) return {false, "source has an incoming tree edge"};
  for (Vertex v = 0; v < g.n(); ++v) {
    if (v != g.source() && indegree[v] != 1) {
      return {false, "vertex " + std::to_string(v) + " has in-degree " +
                         std::to_string(indegree[v])};
    }
  }
  std::vector<char> seen(g.n(), 0);
  std::vector<Vertex> stack = {g.source()};
  seen[g.source()] = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : children[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    if (!seen[v]) return {false, "vertex " + std::to_string(v) + " unreachable"};
  }
  return {};
}

PackingVerdict VerifyPacking(const Graph& g, const PackingResult& result, int k) {
  PackingVerdict out;
  const Capacity exact = ExactRootedMincut(g).value;
  out.exact = exact;
  auto fail = [&](std::string why) {
    out.ok = false;
    out.violation = std::move(why);
    return out;
  };
  if (result.outcome == PackingResult::Outcome::kCut) {
    if (result.cut.Universe() != g.n()) return fail("cut is over the wrong vertex set");
    if (!result.cut.Contains(g.source())) return fail("cut does not contain the source");
    const Capacity delta = CutValues(g, result.cut).delta;
    if (delta != result.cut_delta) return fail("reported delta(S) does not re-evaluate");
    if (delta >= k) return fail("delta(S) = " + std::to_string(delta) + " is not below k");
    if (exact >= k) return fail("connectivity " + std::to_string(exact) + " is not below k");
    return out;
  }
  if (static_cast<int>(result.trees.size()) != k) {
    return fail("expected " + std::to_string(k) + " trees");
  }
  for (std::size_t j = 0; j < result.trees.size(); ++j) {
    const Verdict v = VerifyArborescence(g, result.trees[j]);
    if (!v.ok) return fail("tree " + std::to_string(j + 1) + ": " + v.violation);
  }
  const auto load = TreeLoads(g, result.trees);
  out.congestion = load.empty() ? 0 : *std::max_element(load.begin(), load.end());
  if (out.congestion != result.congestion) return fail("reported congestion does not match");
  if (g.n() > 1 && static_cast<__int128>(exact) * out.congestion < k) {
    return fail("connectivity " + std::to_string(exact) + " is below k / congestion");
  }
  return out;
}

}  // namespace arbor
