#ifndef ARBOR_GENERATORS_H_
#define ARBOR_GENERATORS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "arbor/graph.h"

namespace arbor {

struct GenParams {
  int n = 10;
  int m = 30;
  int k = 2;
  int layers = 3;
  int chords = 3;
  int bridges = 1;
  Capacity max_cap = 1;
  std::uint64_t seed = 1;
};

// Raw generator output; the source (vertex 0) never has incoming arcs.
struct GeneratedGraph {
  int n = 0;
  Vertex source = 0;
  std::vector<RawEdge> edges;

  Graph ToGraph() const { return Normalize(n, source, edges); }
};

// m uniform arcs over n vertices.
GeneratedGraph RandomGnm(const GenParams& p);
// Layered DAG: the source alone in layer 0; every other vertex gets an arc
// from an earlier layer, then forward arcs up to m in total.
GeneratedGraph DagLayered(const GenParams& p);
// Source feeding one complete digraph on (n - 1) / 2 vertices, joined to a
// second one by `bridges` arcs in each direction.
GeneratedGraph TwoCliquesBridge(const GenParams& p);
// Directed cycle over the non-source vertices, entered once from the
// source, with `chords` random extra arcs.
GeneratedGraph CyclePlusChords(const GenParams& p);
// k random spanning arborescences from the source, glued as parallel arcs,
// plus max(0, m - k(n - 1)) random extra arcs. Unit capacities; the rooted
// connectivity is at least k.
GeneratedGraph KnownPacking(const GenParams& p);

const std::vector<std::string>& GeneratorKinds();
// Throws kParameter for an unknown kind or invalid parameters.
GeneratedGraph Generate(const std::string& kind, const GenParams& p);

}  // namespace arbor

#endif  // ARBOR_GENERATORS_H_
