#ifndef ARBOR_ORACLE_H_
#define ARBOR_ORACLE_H_

#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arbor/graph.h"
#include "arbor/packing.h"
#include "arbor/rational.h"

namespace arbor {

inline constexpr Capacity kUnboundedCut = std::numeric_limits<Capacity>::max();

struct RootedCut {
  // kUnboundedCut when the source is the only vertex.
  Capacity value = kUnboundedCut;
  // Sink side T of the minimizing s-t cut; rho(T) == value.
  VertexSet sink_side;
};

// min over t != s of maxflow(s, t).
RootedCut ExactRootedMincut(const Graph& g);

// Minimum cut separating some vertex from some other vertex in either
// direction: the smaller rooted minimum of g and of its reverse, taken over
// every root. `edges` uses 0-based ids; self-loops are ignored.
Capacity ExactGlobalMincut(int n, std::span<const RawEdge> edges);

// Largest phi such that for every component C of `partition` and every
// vertex set T,
//   min(delta(T), rho(T)) >= phi * min(vol_C(T), vol_C(V \ T)),
// vol_C counting terminal-edge degrees inside C. nullopt when no
// constraint binds. Throws kScale for n > 16.
std::optional<Rational> BruteForceCutExpansion(const Graph& g,
                                               const Partition& partition,
                                               const EdgeSet& terminals);

struct Verdict {
  bool ok = true;
  std::string violation;
};

Verdict VerifyArborescence(const Graph& g, std::span<const EdgeId> tree);

struct PackingVerdict {
  bool ok = true;
  std::string violation;
  Capacity exact = 0;
  int congestion = 0;
};

// Trees: every tree spans, the reported congestion matches, and the exact
// rooted connectivity is at least k / congestion. Cut: S holds the source,
// delta(S) < k, and the exact rooted connectivity is below k.
PackingVerdict VerifyPacking(const Graph& g, const PackingResult& result, int k);

}  // namespace arbor

#endif  // ARBOR_ORACLE_H_
