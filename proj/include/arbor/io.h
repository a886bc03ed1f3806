#ifndef ARBOR_IO_H_
#define ARBOR_IO_H_

#include <string>
#include <string_view>
#include <vector>

#include "arbor/graph.h"

namespace arbor {

// Graph text format, 1-based ids:
//   c <comment>
//   p dmc <n> <m> <s>
//   a <tail> <head> [<cap>]     (exactly m arc lines, cap defaults to 1)
struct ParsedGraph {
  Graph graph;
  NormalizeReport report;
  int declared_arcs = 0;
};

// Throws ParseError (with the offending line) on malformed text.
ParsedGraph ParseGraph(std::string_view text);

std::string SerializeGraph(const Graph& g);
std::string SerializeGraph(int n, Vertex source, const std::vector<RawEdge>& edges,
                           const std::vector<std::string>& comments = {});

// Reads a whole file; throws kMalformedInput when it cannot be opened.
std::string ReadFile(const std::string& path);

}  // namespace arbor

#endif  // ARBOR_IO_H_
