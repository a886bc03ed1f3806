#ifndef ARBOR_TOOLS_REPORT_H_
#define ARBOR_TOOLS_REPORT_H_

#include <string>
#include <vector>

#include "arbor/decomp.h"
#include "arbor/io.h"
#include "arbor/mincut.h"
#include "arbor/oracle.h"
#include "arbor/packing.h"
#include "json.hpp"

namespace arbor::tools {

using Json = nlohmann::ordered_json;

// Maps normalized ids to the 1-based ids of the input text and back.
class IdMap {
 public:
  explicit IdMap(const ParsedGraph& parsed);

  int EdgeOut(EdgeId e) const { return original_[e] + 1; }
  // -1 for ids that do not name a kept arc.
  EdgeId EdgeIn(std::int64_t id) const;
  static int VertexOut(Vertex v) { return v + 1; }

 private:
  std::vector<int> original_;
  std::vector<EdgeId> inverse_;
};

Json ErrorJson(const std::string& kind, const std::string& message);

Json HierarchyJson(const Graph& g, const IdMap& ids, const Hierarchy& h);
Json MincutJson(const MincutResult& result, int levels);
Json ExactMincutJson(const RootedCut& cut);
Json PackingJson(const IdMap& ids, const PackingResult& result);
Json LevelReportJson(const LevelReport& report);

Json VertexList(const VertexSet& set);
std::string RatioString(Capacity value, Capacity exact);

// Checks a result document produced by hierarchy, mincut or pack against
// the input graph; returns the verification report.
Json VerifyDocument(const Graph& g, const IdMap& ids, const Json& doc);

}  // namespace arbor::tools

#endif  // ARBOR_TOOLS_REPORT_H_
