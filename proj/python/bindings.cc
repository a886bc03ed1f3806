#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <tuple>

#include "arbor/decomp.h"
#include "arbor/error.h"
#include "arbor/generators.h"
#include "arbor/io.h"
#include "arbor/mincut.h"
#include "arbor/oracle.h"
#include "arbor/packing.h"

namespace py = pybind11;

namespace arbor {
namespace {

using EdgeTuple = std::tuple<Vertex, Vertex, Capacity>;

Graph FromEdges(int n, Vertex source, const std::vector<EdgeTuple>& edges) {
  std::vector<RawEdge> raw;
  for (const auto& [t, h, c] : edges) raw.push_back({t, h, c});
  return Normalize(n, source, raw);
}

std::vector<EdgeTuple> EdgeList(const Graph& g) {
  std::vector<EdgeTuple> out;
  for (const RawEdge& e : g.Edges()) out.emplace_back(e.tail, e.head, e.capacity);
  return out;
}

py::dict HierarchyDict(const Hierarchy& h) {
  py::list levels, partitions, phis;
  for (const auto& level : h.levels) levels.append(level.Members());
  for (const auto& p : h.partitions) partitions.append(p.components);
  for (const auto& phi : h.achieved_phi) phis.append(phi.ToString());
  py::dict out;
  out["levels"] = levels;
  out["partitions"] = partitions;
  out["achieved_phi"] = phis;
  out["phi_target"] = h.phi_target.ToString();
  return out;
}

}  // namespace
}  // namespace arbor

PYBIND11_MODULE(_arbor, m) {
  using namespace arbor;
  m.doc() = "Rooted minimum cuts and arborescence packings via expander hierarchies";

  static py::exception<Error> error(m, "ArborError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const std::string message = std::string(ErrorKindName(e.kind())) + ": " + e.what();
      PyErr_SetString(error.ptr(), message.c_str());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def_static("from_edges", &FromEdges, py::arg("n"), py::arg("source"), py::arg("edges"),
                  "Normalized graph from 0-based (tail, head, capacity) triples.")
      .def_static("parse", [](const std::string& text) { return ParseGraph(text).graph; },
                  py::arg("text"))
      .def_property_readonly("n", &Graph::n)
      .def_property_readonly("m", &Graph::m)
      .def_property_readonly("source", &Graph::source)
      .def("edges", &EdgeList)
      .def("serialize", [](const Graph& g) { return SerializeGraph(g); });

  m.def(
      "generate",
      [](const std::string& kind, int n, int m_arcs, int k, int layers, int chords, int bridges,
         Capacity max_cap, std::uint64_t seed) {
        GenParams p{n, m_arcs, k, layers, chords, bridges, max_cap, seed};
        return Generate(kind, p).ToGraph();
      },
      py::arg("kind"), py::arg("n") = 10, py::arg("m") = 30, py::arg("k") = 2,
      py::arg("layers") = 3, py::arg("chords") = 3, py::arg("bridges") = 1,
      py::arg("max_cap") = 1, py::arg("seed") = 1);
  m.def("generator_kinds", &GeneratorKinds);

  m.def(
      "build_hierarchy",
      [](const Graph& g, const std::string& phi, std::uint64_t seed) {
        const Hierarchy h = BuildHierarchy(g, Rational::Parse(phi), {seed, 4});
        py::dict out = HierarchyDict(h);
        const auto violation = CheckHierarchy(g, h);
        out["violation"] = violation ? py::cast(*violation) : py::none();
        return out;
      },
      py::arg("graph"), py::arg("phi") = "1/8", py::arg("seed") = 1);

  m.def(
      "approx_rooted_mincut",
      [](const Graph& g, const std::string& phi, std::uint64_t seed, int trials_mult) {
        const Hierarchy h = BuildHierarchy(g, Rational::Parse(phi), {seed, trials_mult});
        MincutOptions options;
        options.seed = seed;
        options.trials_multiplier = trials_mult;
        const MincutResult r = ApproxRootedMincut(g, h, options);
        py::dict out;
        out["value"] = r.best.rho;
        out["cut"] = r.best.sink_side.Members();
        out["level"] = r.best.level;
        out["num_levels"] = h.num_levels();
        return out;
      },
      py::arg("graph"), py::arg("phi") = "1/8", py::arg("seed") = 1, py::arg("trials_mult") = 4);

  m.def(
      "exact_rooted_mincut",
      [](const Graph& g) {
        const RootedCut c = ExactRootedMincut(g);
        return std::make_pair(c.value, c.sink_side.Members());
      },
      py::arg("graph"));

  py::class_<PackingResult>(m, "PackingResult")
      .def_property_readonly("is_trees",
                             [](const PackingResult& r) {
                               return r.outcome == PackingResult::Outcome::kTrees;
                             })
      .def_readonly("k", &PackingResult::k)
      .def_readonly("trees", &PackingResult::trees)
      .def_readonly("congestion", &PackingResult::congestion)
      .def_property_readonly("cut", [](const PackingResult& r) { return r.cut.Members(); })
      .def_readonly("cut_delta", &PackingResult::cut_delta)
      .def_readonly("cut_stage", &PackingResult::cut_stage)
      .def_readonly("levels", &PackingResult::levels);

  m.def(
      "pack",
      [](const Graph& g, int k, const std::string& phi, std::uint64_t seed) {
        PackOptions options;
        options.seed = seed;
        return Pack(g, k, Rational::Parse(phi), options);
      },
      py::arg("graph"), py::arg("k"), py::arg("phi") = "1/8", py::arg("seed") = 1);

  m.def(
      "verify_arborescence",
      [](const Graph& g, const std::vector<EdgeId>& tree) {
        const Verdict v = VerifyArborescence(g, tree);
        return std::make_pair(v.ok, v.violation);
      },
      py::arg("graph"), py::arg("tree"));

  m.def(
      "verify_packing",
      [](const Graph& g, const PackingResult& r, int k) {
        const PackingVerdict v = VerifyPacking(g, r, k);
        return std::make_pair(v.ok, v.violation);
      },
      py::arg("graph"), py::arg("result"), py::arg("k"));
}
