#ifndef ARBOR_ROUTING_H_
#define ARBOR_ROUTING_H_

#include <cstdint>
#include <span>
#include <vector>

#include "arbor/graph.h"

namespace arbor {

struct DemandPair {
  Vertex src = 0;
  Vertex dst = 0;

  friend bool operator==(const DemandPair&, const DemandPair&) = default;
};

// Integral demand: a multiset of ordered vertex pairs.
struct Demand {
  std::vector<DemandPair> pairs;
};

// Throws kParameter unless every pair has distinct endpoints in one
// component of `components`.
void ValidateDemand(const Demand& demand, const Partition& components);

struct RespectingVerdict {
  bool ok = true;
  Vertex first_violation = -1;
  std::int64_t participation = 0;
  std::int64_t bound = 0;
};

// Checks sum_u D(u, v) + D(v, u) <= bound[v] for every v.
RespectingVerdict RespectingCheck(const Demand& demand,
                                  std::span<const std::int64_t> bound);

struct RoutingOptions {
  std::uint64_t seed = 1;
  int reroute_sweeps = 3;
};

struct RoutingOutcome {
  // paths[j] serves demand.pairs[j], as a simple edge sequence src -> dst.
  std::vector<std::vector<EdgeId>> paths;
  std::vector<int> load;
  int congestion = 0;
};

// Sequential congestion-aware routing in all of g: pairs are routed in
// seeded random order along shortest paths under length 2^min(load, 20),
// then edges at maximum load are relieved by `reroute_sweeps` passes that
// reroute every path crossing them. Throws kRoutingInfeasible when some
// destination is unreachable.
RoutingOutcome Route(const Graph& g, const Demand& demand,
                     const RoutingOptions& options = {});

// Loads recomputed from the path list.
std::vector<int> PathLoads(const Graph& g,
                           const std::vector<std::vector<EdgeId>>& paths);

}  // namespace arbor

#endif  // ARBOR_ROUTING_H_
