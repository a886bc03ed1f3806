#ifndef ARBOR_MINCUT_H_
#define ARBOR_MINCUT_H_

#include <cstdint>
#include <random>
#include <vector>

#include "arbor/decomp.h"
#include "arbor/graph.h"

namespace arbor {

// A rooted cut (V \ sink_side, sink_side) with the source outside sink_side.
struct CutCandidate {
  VertexSet sink_side;
  Capacity rho = 0;
  int level = 0;
  int component = 0;
  Vertex sampled_vertex = 0;
};

// Picks an edge of `edges` with probability proportional to capacity, then
// one of its endpoints by a fair coin, `trials` times.
std::vector<Vertex> SampleEndpoints(const Graph& g, const EdgeSet& edges,
                                    int trials, std::mt19937_64& rng);

// Minimum of rho(T) over v in T subset of `component`. Everything outside
// the component is contracted into the super-source.
CutCandidate MincutIntoComponent(const Graph& g, const VertexSet& component,
                                 Vertex v);

struct MincutOptions {
  std::uint64_t seed = 1;
  int trials_multiplier = 4;
  bool keep_candidates = false;
};

struct MincutResult {
  CutCandidate best;
  std::vector<CutCandidate> candidates;  // only with keep_candidates
  int trials_per_component = 0;
  int evaluated = 0;
};

// Sampling-based rooted minimum cut over an expander hierarchy of g. Level
// 0 scans every singleton; level i >= 1 samples endpoints of the level-i
// edges inside each component and keeps the best component-local cut.
MincutResult ApproxRootedMincut(const Graph& g, const Hierarchy& h,
                                const MincutOptions& options = {});

}  // namespace arbor

#endif  // ARBOR_MINCUT_H_
