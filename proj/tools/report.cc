#include "report.h"

#include <algorithm>

#include "arbor/error.h"

namespace arbor::tools {

IdMap::IdMap(const ParsedGraph& parsed)
    : original_(parsed.report.original_index),
      inverse_(parsed.declared_arcs, -1) {
  for (EdgeId e = 0; e < static_cast<EdgeId>(original_.size()); ++e) {
    inverse_[original_[e]] = e;
  }
}

EdgeId IdMap::EdgeIn(std::int64_t id) const {
  if (id < 1 || id > static_cast<std::int64_t>(inverse_.size())) return -1;
  return inverse_[id - 1];
}

Json ErrorJson(const std::string& kind, const std::string& message) {
  return Json{{"error", Json{{"kind", kind}, {"message", message}}}};
}

Json VertexList(const VertexSet& set) {
  Json out = Json::array();
  for (Vertex v : set.Members()) out.push_back(IdMap::VertexOut(v));
  return out;
}

std::string RatioString(Capacity value, Capacity exact) {
  if (exact == 0) return value == 0 ? "1" : "inf";
  return Rational(value, exact).ToString();
}

Json HierarchyJson(const Graph& g, const IdMap& ids, const Hierarchy& h) {
  Json levels = Json::array();
  for (int i = 1; i <= h.num_levels(); ++i) {
    Json edges = Json::array();
    for (EdgeId e : h.Level(i).Members()) edges.push_back(ids.EdgeOut(e));
    levels.push_back({{"level", i},
                      {"capacity", CapacityOf(g, h.Level(i))},
                      {"achieved_phi", h.achieved_phi[i - 1].ToString()},
                      {"edges", std::move(edges)}});
  }
  Json partitions = Json::array();
  for (int i = 0; i <= h.num_levels(); ++i) {
    Json comps = Json::array();
    for (const auto& comp : h.PartitionAt(i).components) {
      Json members = Json::array();
      for (Vertex v : comp) members.push_back(IdMap::VertexOut(v));
      comps.push_back(std::move(members));
    }
    partitions.push_back({{"level", i}, {"components", std::move(comps)}});
  }
  return Json{{"vertices", g.n()},
              {"edges", g.m()},
              {"source", IdMap::VertexOut(g.source())},
              {"phi_target", h.phi_target.ToString()},
              {"num_levels", h.num_levels()},
              {"level_bound", LevelBound(g.total_capacity())},
              {"levels", std::move(levels)},
              {"partitions", std::move(partitions)}};
}

Json MincutJson(const MincutResult& result, int levels) {
  return Json{{"method", "approx"},
              {"value", result.best.rho},
              {"cut", VertexList(result.best.sink_side)},
              {"level", result.best.level},
              {"sampled_vertex", IdMap::VertexOut(result.best.sampled_vertex)},
              {"num_levels", levels},
              {"trials_per_component", result.trials_per_component},
              {"evaluated", result.evaluated}};
}

Json ExactMincutJson(const RootedCut& cut) {
  return Json{{"method", "exact"},
              {"value", cut.value},
              {"cut", VertexList(cut.sink_side)}};
}

Json LevelReportJson(const LevelReport& r) {
  return Json{{"level", r.level},
              {"congestion", r.congestion},
              {"demand_pairs", r.demand_pairs},
              {"flow_paths", r.flow_paths},
              {"routing_factor", r.routing_factor.ToString()},
              {"bound_factor", r.bound_factor.ToString()},
              {"kappa_observed", r.kappa_observed},
              {"max_edge_colors", r.max_edge_colors}};
}

Json PackingJson(const IdMap& ids, const PackingResult& result) {
  Json levels = Json::array();
  for (const auto& r : result.level_reports) levels.push_back(LevelReportJson(r));
  if (result.outcome == PackingResult::Outcome::kCut) {
    return Json{{"outcome", "cut"},
                {"k", result.k},
                {"cut", VertexList(result.cut)},
                {"delta", result.cut_delta},
                {"stage", result.cut_stage},
                {"level", result.cut_level},
                {"num_levels", result.levels},
                {"levels", std::move(levels)}};
  }
  Json trees = Json::array();
  for (const auto& tree : result.trees) {
    std::vector<int> out;
    for (EdgeId e : tree) out.push_back(ids.EdgeOut(e));
    std::sort(out.begin(), out.end());
    trees.push_back(out);
  }
  return Json{{"outcome", "trees"},
              {"k", result.k},
              {"congestion", result.congestion},
              {"num_levels", result.levels},
              {"trees", std::move(trees)},
              {"levels", std::move(levels)}};
}

namespace {

class Checker {
 public:
  void Add(std::string violation) { violations_.push_back(std::move(violation)); }
  bool ok() const { return violations_.empty(); }
  Json Violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

std::optional<VertexSet> ReadVertexSet(const Graph& g, const Json& list,
                                       Checker& check) {
  if (!list.is_array()) {
    check.Add("vertex list is not an array");
    return std::nullopt;
  }
  VertexSet set(g.n());
  for (const Json& item : list) {
    if (!item.is_number_integer() || item.get<std::int64_t>() < 1 ||
        item.get<std::int64_t>() > g.n()) {
      check.Add("vertex id " + item.dump() + " out of range");
      return std::nullopt;
    }
    set.Insert(static_cast<Vertex>(item.get<std::int64_t>() - 1));
  }
  return set;
}

std::optional<std::vector<EdgeId>> ReadEdgeList(const IdMap& ids, const Json& list,
                                                Checker& check) {
  if (!list.is_array()) {
    check.Add("edge list is not an array");
    return std::nullopt;
  }
  std::vector<EdgeId> out;
  for (const Json& item : list) {
    const EdgeId e = item.is_number_integer() ? ids.EdgeIn(item.get<std::int64_t>()) : -1;
    if (e < 0) {
      check.Add("edge id " + item.dump() + " does not name a kept arc");
      return std::nullopt;
    }
    out.push_back(e);
  }
  return out;
}

Json VerifyPackingDoc(const Graph& g, const IdMap& ids, const Json& doc, Checker& check) {
  PackingResult r;
  r.k = doc.value("k", 0);
  Json out{{"kind", "packing"}, {"k", r.k}};
  if (r.k < 1) {
    check.Add("k must be a positive integer");
    return out;
  }
  const std::string outcome = doc.value("outcome", "");
  if (outcome == "cut") {
    r.outcome = PackingResult::Outcome::kCut;
    auto cut = ReadVertexSet(g, doc.value("cut", Json()), check);
    if (!cut) return out;
    r.cut = *cut;
    r.cut_delta = doc.value("delta", Capacity{-1});
  } else if (outcome == "trees") {
    r.outcome = PackingResult::Outcome::kTrees;
    for (const Json& tree : doc.value("trees", Json::array())) {
      auto edges = ReadEdgeList(ids, tree, check);
      if (!edges) return out;
      r.trees.push_back(*edges);
    }
    r.congestion = doc.value("congestion", -1);
  } else {
    check.Add("unknown outcome '" + outcome + "'");
    return out;
  }
  const PackingVerdict verdict = VerifyPacking(g, r, r.k);
  out["exact"] = verdict.exact;
  if (!verdict.ok) check.Add(verdict.violation);
  return out;
}

Json VerifyMincutDoc(const Graph& g, const Json& doc, Checker& check) {
  const RootedCut exact = ExactRootedMincut(g);
  Json out{{"kind", "mincut"}, {"exact", exact.value}};
  const Capacity value = doc.value("value", Capacity{-1});
  auto cut = ReadVertexSet(g, doc.value("cut", Json()), check);
  if (!cut) return out;
  if (cut->Empty()) check.Add("cut side is empty");
  if (cut->Contains(g.source())) check.Add("cut side contains the source");
  if (CutValues(g, *cut).rho != value) check.Add("rho(cut) does not equal the value");
  if (value < exact.value) check.Add("value is below the exact rooted minimum cut");
  if (doc.value("method", "") == "exact" && value != exact.value) {
    check.Add("exact value does not match the oracle");
  }
  return out;
}

Json VerifyHierarchyDoc(const Graph& g, const IdMap& ids, const Json& doc,
                        Checker& check) {
  Json out{{"kind", "hierarchy"}};
  Hierarchy h;
  h.phi_target = Rational::Parse(doc.value("phi_target", "1"));
  for (const Json& level : doc.value("levels", Json::array())) {
    auto edges = ReadEdgeList(ids, level.value("edges", Json()), check);
    if (!edges) return out;
    h.levels.push_back(EdgeSet::Of(g.m(), *edges));
  }
  for (const Json& part : doc.value("partitions", Json::array())) {
    Partition p;
    p.component_of.assign(g.n(), -1);
    for (const Json& comp : part.value("components", Json::array())) {
      auto members = ReadVertexSet(g, comp, check);
      if (!members) return out;
      p.components.push_back(members->Members());
      for (Vertex v : p.components.back()) {
        if (p.component_of[v] >= 0) {
          check.Add("vertex " + std::to_string(v + 1) + " in two components");
          return out;
        }
        p.component_of[v] = p.size() - 1;
      }
    }
    if (std::count(p.component_of.begin(), p.component_of.end(), -1) > 0) {
      check.Add("partition does not cover every vertex");
      return out;
    }
    h.partitions.push_back(std::move(p));
  }
  h.top_level.assign(g.m(), 0);
  for (int i = 1; i <= h.num_levels(); ++i) {
    for (EdgeId e : h.Level(i).Members()) h.top_level[e] = i;
  }
  out["num_levels"] = h.num_levels();
  if (auto violation = CheckHierarchy(g, h)) check.Add(*violation);
  return out;
}

}  // namespace

Json VerifyDocument(const Graph& g, const IdMap& ids, const Json& doc) {
  Checker check;
  Json body;
  if (!doc.is_object()) {
    check.Add("result document is not a JSON object");
    body = Json{{"kind", "unknown"}};
  } else if (doc.contains("outcome")) {
    body = VerifyPackingDoc(g, ids, doc, check);
  } else if (doc.contains("partitions")) {
    body = VerifyHierarchyDoc(g, ids, doc, check);
  } else if (doc.contains("value")) {
    body = VerifyMincutDoc(g, doc, check);
  } else {
    check.Add("unrecognized result document");
    body = Json{{"kind", "unknown"}};
  }
  Json out{{"ok", check.ok()}};
  out.update(body);
  out["violations"] = check.Violations();
  return out;
}

}  // namespace arbor::tools
