#include "arbor/routing.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

#include "arbor/error.h"
#include "arbor/random.h"

namespace arbor {

namespace {

constexpr int kMaxLengthExponent = 20;

std::int64_t EdgeLength(int load) {
  return std::int64_t{1} << std::min(load, kMaxLengthExponent);
}

// Dijkstra with deterministic tie-breaking; positive lengths make every
// shortest path simple.
std::vector<EdgeId> ShortestPath(const Graph& g, Vertex src, Vertex dst,
                                 const std::vector<int>& load) {
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> dist(g.n(), kInf);
  std::vector<EdgeId> via(g.n(), -1);
  using Item = std::pair<std::int64_t, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[src] = 0;
  queue.push({0, src});
  while (!queue.empty()) {
    auto [d, v] = queue.top();
    queue.pop();
    if (d != dist[v]) continue;
    if (v == dst) break;
    for (EdgeId e : g.out_edges(v)) {
      const Vertex w = g.head(e);
      const std::int64_t nd = d + EdgeLength(load[e]);
      if (nd < dist[w]) {
        dist[w] = nd;
        via[w] = e;
        queue.push({nd, w});
      }
    }
  }
  if (dist[dst] == kInf) {
    Fail(ErrorKind::kRoutingInfeasible,
         "no path for demand pair (" + std::to_string(src) + ", " +
             std::to_string(dst) + ")");
  }
  std::vector<EdgeId> path;
  for (Vertex v = dst; v != src; v = g.tail(via[v])) path.push_back(via[v]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

void ValidateDemand(const Demand& demand, const Partition& components) {
  for (const auto& [src, dst] : demand.pairs) {
    if (src == dst) {
      Fail(ErrorKind::kParameter,
           "demand pair with equal endpoints at " + std::to_string(src));
    }
    if (components.ComponentOf(src) != components.ComponentOf(dst)) {
      Fail(ErrorKind::kParameter, "demand pair (" + std::to_string(src) + ", " +
                                      std::to_string(dst) +
                                      ") crosses components");
    }
  }
}

RespectingVerdict RespectingCheck(const Demand& demand,
                                  std::span<const std::int64_t> bound) {
  std::vector<std::int64_t> participation(bound.size(), 0);
  for (const auto& [src, dst] : demand.pairs) {
    ++participation[src];
    ++participation[dst];
  }
  for (std::size_t v = 0; v < bound.size(); ++v) {
    if (participation[v] > bound[v]) {
      return {false, static_cast<Vertex>(v), participation[v], bound[v]};
    }
  }
  return {};
}

std::vector<int> PathLoads(const Graph& g,
                           const std::vector<std::vector<EdgeId>>& paths) {
  std::vector<int> load(g.m(), 0);
  for (const auto& path : paths) {
    for (EdgeId e : path) ++load[e];
  }
  return load;
}

RoutingOutcome Route(const Graph& g, const Demand& demand,
                     const RoutingOptions& options) {
  const int count = static_cast<int>(demand.pairs.size());
  RoutingOutcome out;
  out.paths.resize(count);
  out.load.assign(g.m(), 0);

  std::vector<int> order(count);
  std::iota(order.begin(), order.end(), 0);
  auto rng = MakeRng(options.seed, {0x726f757465ULL});
  std::shuffle(order.begin(), order.end(), rng);

  auto add = [&](int j, int delta) {
    for (EdgeId e : out.paths[j]) out.load[e] += delta;
  };
  for (int j : order) {
    out.paths[j] = ShortestPath(g, demand.pairs[j].src, demand.pairs[j].dst, out.load);
    add(j, +1);
  }

  auto peak_load = [&] {
    return out.load.empty() ? 0 : *std::max_element(out.load.begin(), out.load.end());
  };
  RoutingOutcome best = out;
  int best_peak = peak_load();
  for (int sweep = 0; sweep < options.reroute_sweeps; ++sweep) {
    const int peak = peak_load();
    if (peak <= 1) break;
    std::vector<char> hot(g.m(), 0);
    for (EdgeId e = 0; e < g.m(); ++e) hot[e] = out.load[e] == peak;
    for (int j : order) {
      const bool crosses = std::any_of(out.paths[j].begin(), out.paths[j].end(),
                                       [&](EdgeId e) { return hot[e]; });
      if (!crosses) continue;
      add(j, -1);
      out.paths[j] =
          ShortestPath(g, demand.pairs[j].src, demand.pairs[j].dst, out.load);
      add(j, +1);
    }
    if (peak_load() < best_peak) {
      best = out;
      best_peak = peak_load();
    }
  }
  best.congestion = best.load.empty()
                        ? 0
                        : *std::max_element(best.load.begin(), best.load.end());
  return best;
}

}  // namespace arbor
