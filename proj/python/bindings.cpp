// Python bindings for the solver core.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "pumpkin/edgelist.hpp"
#include "pumpkin/generator.hpp"
#include "pumpkin/oracle.hpp"
#include "pumpkin/recognizer.hpp"
#include "pumpkin/solver.hpp"

namespace py = pybind11;
using namespace pumpkin;

namespace {

py::dict stats_to_dict(const SearchStats& stats) {
  py::dict firings;
  for (int code = 0; code < kBranchRuleCount; ++code)
    firings[py::str(RuleId::from_code(code).name())] =
        stats.rule_firings[code];
  py::dict reductions;
  for (int i = 0; i < kReductionRuleCount; ++i)
    reductions[py::str(to_string(static_cast<ReductionRule>(i)))] =
        stats.reductions[i];
  py::dict out;
  out["nodes"] = stats.nodes;
  out["leaves"] = stats.leaves;
  out["max_depth"] = stats.max_depth;
  out["rule_firings"] = firings;
  out["reductions"] = reductions;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact pumpkin vertex deletion solver";

  py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<TooLargeError>(m, "TooLargeError", PyExc_ValueError);
  py::register_exception<MixedDirectEdgeError>(m, "MixedDirectEdgeError",
                                               PyExc_ValueError);

  py::class_<Digraph>(m, "Digraph")
      .def(py::init<VertexId>(), py::arg("n") = 0)
      .def_static("from_edges", &Digraph::from_edges, py::arg("n"),
                  py::arg("edges"))
      .def_property_readonly("capacity", &Digraph::capacity)
      .def_property_readonly("alive_count", &Digraph::alive_count)
      .def_property_readonly("edge_count", &Digraph::edge_count)
      .def("is_alive", &Digraph::is_alive)
      .def("vertices", &Digraph::vertices)
      .def("arcs", &Digraph::arcs)
      .def("out_neighbors", &Digraph::out_neighbors)
      .def("in_neighbors", &Digraph::in_neighbors)
      .def("out_degree", &Digraph::out_degree)
      .def("in_degree", &Digraph::in_degree)
      .def("has_edge", &Digraph::has_edge)
      .def("add_edge", &Digraph::add_edge)
      .def("delete_vertices", &Digraph::delete_vertices)
      .def("reversed", &Digraph::reversed)
      .def("reachable_from", &Digraph::reachable_from)
      .def("bfs_distances",
           [](const Digraph& g, VertexId v) {
             py::dict out;
             const std::vector<int> dist = g.bfs_distances(v);
             for (VertexId u = 0; u < g.capacity(); ++u)
               if (dist[u] >= 0) out[py::int_(u)] = dist[u];
             return out;
           })
      .def("__eq__", [](const Digraph& a, const Digraph& b) { return a == b; })
      .def("__repr__", [](const Digraph& g) {
        std::ostringstream out;
        out << "Digraph(n=" << g.alive_count() << ", m=" << g.edge_count()
            << ")";
        return out.str();
      });

  py::class_<PumpkinVerdict>(m, "PumpkinVerdict")
      .def_readonly("is_pumpkin", &PumpkinVerdict::is_pumpkin)
      .def_property_readonly("violation",
                             [](const PumpkinVerdict& v) -> py::object {
                               if (!v.violation) return py::none();
                               return py::str(to_string(*v.violation));
                             })
      .def_readonly("witness", &PumpkinVerdict::witness)
      .def("__bool__",
           [](const PumpkinVerdict& v) { return v.is_pumpkin; });

  m.def("check_pumpkin", &check_pumpkin, py::arg("g"), py::arg("s"),
        py::arg("t"));
  m.def("is_pumpkin", &is_pumpkin, py::arg("g"), py::arg("s"), py::arg("t"));

  m.def(
      "solve_rpvds",
      [](const Digraph& g, int k, VertexId s, VertexId t) {
        RpvdsResult r = solve_rpvds(Instance(g, k, s, t));
        return py::make_tuple(r.solution ? py::cast(*r.solution) : py::none(),
                              stats_to_dict(r.stats));
      },
      py::arg("g"), py::arg("k"), py::arg("s"), py::arg("t"),
      "Returns (deletion set or None, stats dict).");

  m.def(
      "solve_pvds",
      [](const Digraph& g, int k) {
        PvdsResult r = solve_pvds(g, k);
        if (!r.solution) return py::make_tuple(py::none(), stats_to_dict(r.stats));
        py::tuple found =
            py::make_tuple(*r.source, *r.sink, py::cast(*r.solution));
        return py::make_tuple(found, stats_to_dict(r.stats));
      },
      py::arg("g"), py::arg("k"),
      "Returns ((source, sink, deletion set) or None, stats dict).");

  m.def(
      "brute_force_rpvds",
      [](const Digraph& g, int k, VertexId s, VertexId t) -> py::object {
        OracleResult r = brute_force_rpvds(Instance(g, k, s, t));
        if (!r.answer) return py::none();
        return py::make_tuple(*r.min_size, *r.witness);
      },
      py::arg("g"), py::arg("k"), py::arg("s"), py::arg("t"),
      "Returns (min size, witness) or None.");

  m.def(
      "brute_force_pvds",
      [](const Digraph& g, int k) -> py::object {
        OracleResult r = brute_force_pvds(g, k);
        if (!r.answer) return py::none();
        return py::make_tuple(*r.min_size, *r.witness);
      },
      py::arg("g"), py::arg("k"), "Returns (min size, witness) or None.");

  m.def(
      "make_pumpkin",
      [](const std::vector<int>& lengths) {
        PumpkinGraph p = make_pumpkin(lengths);
        return py::make_tuple(p.g, p.source, p.sink);
      },
      py::arg("path_lengths"), "Returns (graph, source, sink).");

  m.def(
      "make_planted",
      [](const std::vector<int>& lengths, int noise, double edges_per_vertex,
         std::uint64_t seed) {
        Instance inst = make_planted({lengths, noise, edges_per_vertex, seed});
        return py::make_tuple(inst.g, inst.k, inst.s, inst.t);
      },
      py::arg("path_lengths"), py::arg("noise"),
      py::arg("edges_per_vertex") = 2.0, py::arg("seed") = 0,
      "Returns (graph, k, source, sink).");

  m.def("random_digraph", &random_digraph, py::arg("n"), py::arg("p"),
        py::arg("seed"));

  m.def(
      "read_edge_list",
      [](const std::string& text) {
        std::istringstream in(text);
        EdgeListFile file = read_edge_list(in);
        py::dict meta;
        if (file.source) meta["source"] = *file.source;
        if (file.sink) meta["sink"] = *file.sink;
        if (file.planted_k) meta["planted_k"] = *file.planted_k;
        return py::make_tuple(to_digraph(file), meta);
      },
      py::arg("text"), "Parses edge-list text; returns (graph, metadata).");

  m.def(
      "write_edge_list",
      [](const Digraph& g) {
        std::ostringstream out;
        write_edge_list(out, g);
        return out.str();
      },
      py::arg("g"));
}
