// Copyright 2026 The ORP Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Python bindings. Vertices are 0-based here, as in the C++ API; costs are
// floats with math.inf for "no path".

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "orp/cost.h"
#include "orp/detour.h"
#include "orp/errors.h"
#include "orp/graph.h"
#include "orp/korp.h"
#include "orp/oracle.h"
#include "orp/orp.h"
#include "orp/pareto.h"
#include "orp/simulate.h"

namespace py = pybind11;

namespace orp {
namespace {

std::vector<double> Floats(const std::vector<Cost>& costs) {
  std::vector<double> out;
  out.reserve(costs.size());
  for (Cost c : costs) out.push_back(c.value());
  return out;
}

Graph MakeGraph(int n,
                const std::vector<std::tuple<Vertex, Vertex, double>>& edges) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (const auto& [u, v, len] : edges) list.push_back({u, v, Cost(len)});
  return Graph(n, std::move(list));
}

std::unique_ptr<RoutingStrategy> MakeStrategy(const Graph& g, Vertex dest,
                                              const std::string& name, int k) {
  if (name == "optimal") return std::make_unique<OptimalStrategy>(g, dest, k);
  if (name == "greedy") return std::make_unique<GreedyStrategy>(g, dest);
  throw InputError("strategy must be 'optimal' or 'greedy', got '" + name +
                   "'");
}

py::dict WalkDict(const Walk& walk) {
  py::list steps;
  for (const WalkStep& s : walk.steps) {
    py::dict step;
    step["from"] = s.from;
    step["edge"] = s.edge;
    step["to"] = s.to;
    step["failed"] = s.failed;
    steps.append(step);
  }
  py::dict d;
  d["steps"] = steps;
  d["total_cost"] = walk.total_cost.value();
  d["probed_failures"] = walk.probed_failures;
  d["stranded"] = walk.stranded;
  return d;
}

}  // namespace
}  // namespace orp

PYBIND11_MODULE(_orp, m) {
  using namespace orp;
  m.doc() = "Online replacement paths: routing under edge failures that are "
            "discovered on arrival.";

  auto input_error =
      py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", input_error.ptr());
  py::register_exception<DomainError>(m, "DomainError", PyExc_RuntimeError);
  py::register_exception<LimitExceeded>(m, "LimitExceeded",
                                        PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&MakeGraph), py::arg("num_vertices"),
           py::arg("edges") =
               std::vector<std::tuple<Vertex, Vertex, double>>{})
      .def_property_readonly("num_vertices", &Graph::num_vertices)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def("edges",
           [](const Graph& g) {
             std::vector<std::tuple<Vertex, Vertex, double>> out;
             for (const Edge& e : g.edges()) {
               out.emplace_back(e.u, e.v, e.length.value());
             }
             return out;
           })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<orp.Graph n=" + std::to_string(g.num_vertices()) +
               " m=" + std::to_string(g.num_edges()) + ">";
      });

  m.def("parse_graph", py::overload_cast<const std::string&>(&ParseGraph),
        py::arg("text"), "Parse the 'p orp' text format.");
  m.def("write_graph", py::overload_cast<const Graph&>(&WriteGraph),
        py::arg("graph"));

  py::class_<DetourTable>(m, "DetourTable")
      .def_property_readonly("dest", &DetourTable::dest)
      .def_property_readonly("dstar",
                             [](const DetourTable& t) {
                               return Floats(t.tree().dstar);
                             })
      .def_property_readonly(
          "parent_edge",
          [](const DetourTable& t) { return t.tree().parent_edge; })
      .def_property_readonly("contraction_steps",
                             &DetourTable::contraction_steps)
      .def("svalue", [](const DetourTable& t, Vertex u) {
        return t.svalue(u).value();
      })
      .def("swap_edge", &DetourTable::swap_edge)
      .def("query",
           [](const DetourTable& t, const Graph& g, Vertex v, EdgeId e) {
             return t.Query(g, v, e).value();
           },
           py::arg("graph"), py::arg("vertex"), py::arg("edge"))
      .def("to_text",
           [](const DetourTable& t, std::vector<EdgeId> successors) {
             std::ostringstream out;
             WriteDetourTable(t, out, successors);
             return out.str();
           },
           py::arg("successor_edges") = std::vector<EdgeId>{});

  m.def("build_detour_table",
        [](const Graph& g, Vertex dest, std::vector<EdgeId> removed) {
          return BuildDetourTable(g, dest, EdgeSet(std::move(removed)));
        },
        py::arg("graph"), py::arg("dest"),
        py::arg("removed") = std::vector<EdgeId>{});
  m.def("read_detour_table",
        [](const Graph& g, const std::string& text) {
          std::istringstream in(text);
          LoadedTable loaded = ReadDetourTable(g, in);
          return py::make_tuple(std::move(loaded.table),
                                loaded.successor_edges);
        },
        py::arg("graph"), py::arg("text"),
        "Returns (table, successor_edges or None).");

  py::class_<OrpSolution>(m, "OrpSolution")
      .def_readonly("dest", &OrpSolution::dest)
      .def_property_readonly("y",
                             [](const OrpSolution& s) { return Floats(s.y); })
      .def_readonly("successor", &OrpSolution::successor)
      .def_readonly("successor_edge", &OrpSolution::successor_edge)
      .def_readonly("heap_pops", &OrpSolution::heap_pops);

  m.def("solve_orp", &SolveOrp, py::arg("graph"), py::arg("table"));
  m.def("robust_length",
        [](const Graph& g, const DetourTable& t, Vertex source,
           const std::vector<EdgeId>& path) {
          return RobustLength(g, t, source, path).value();
        },
        py::arg("graph"), py::arg("table"), py::arg("source"),
        py::arg("path"));
  m.def("nominal_path", &NominalPath, py::arg("solution"), py::arg("source"));
  m.def("reconstruct_solution",
        [](const Graph& g, const DetourTable& t,
           const std::vector<EdgeId>& successors) {
          return ReconstructSolution(g, t, successors);
        },
        py::arg("graph"), py::arg("table"), py::arg("successor_edges"));

  m.def("solve_korp",
        [](const Graph& g, Vertex dest, int k, int max_k) {
          KorpOptions options;
          options.max_k = max_k;
          const KorpSolution sol = SolveKorp(g, dest, k, options);
          py::dict d;
          d["k"] = sol.k;
          d["y"] = Floats(sol.yk);
          d["successor"] = sol.successor;
          d["successor_edge"] = sol.successor_edge;
          return d;
        },
        py::arg("graph"), py::arg("dest"), py::arg("k"),
        py::arg("max_k") = KorpOptions{}.max_k);

  m.def("solve_pareto",
        [](const Graph& g, const DetourTable& t, Vertex source,
           double bound) {
          const ParetoResult r = SolvePareto(g, t, source, Cost(bound));
          py::dict d;
          d["feasible"] = r.feasible();
          switch (r.status) {
            case ParetoResult::Status::kFeasible:
              d["status"] = "feasible";
              break;
            case ParetoResult::Status::kUnreachable:
              d["status"] = "unreachable";
              break;
            case ParetoResult::Status::kBoundTooTight:
              d["status"] = "bound_too_tight";
              break;
          }
          d["length"] = r.length.value();
          d["robust_length"] = r.robust_length.value();
          d["path"] = r.path;
          return d;
        },
        py::arg("graph"), py::arg("table"), py::arg("source"),
        py::arg("bound"));

  m.def("execute_walk",
        [](const Graph& g, Vertex source, Vertex dest,
           const std::string& strategy, int k, std::vector<EdgeId> failed) {
          auto s = MakeStrategy(g, dest, strategy, k);
          return WalkDict(
              ExecuteWalk(g, *s, source, Scenario(std::move(failed))));
        },
        py::arg("graph"), py::arg("source"), py::arg("dest"),
        py::arg("strategy"), py::arg("k"),
        py::arg("failed") = std::vector<EdgeId>{});
  m.def("evaluate_worst_case",
        [](const Graph& g, Vertex source, Vertex dest,
           const std::string& strategy, int k, std::int64_t max_scenarios) {
          auto s = MakeStrategy(g, dest, strategy, k);
          const WorstCase w = EvaluateWorstCase(g, *s, source, k, max_scenarios);
          py::dict d;
          d["cost"] = w.cost.value();
          d["scenario"] = w.scenario.ids();
          d["scenarios_evaluated"] = w.scenarios_evaluated;
          d["walk"] = WalkDict(w.walk);
          return d;
        },
        py::arg("graph"), py::arg("source"), py::arg("dest"),
        py::arg("strategy"), py::arg("k"),
        py::arg("max_scenarios") = kDefaultScenarioBudget);

  m.def("gen_bad_example",
        [](int k, std::int64_t scale) {
          Instance inst = GenerateBadExample(k, scale);
          return py::make_tuple(std::move(inst.graph), inst.source, inst.dest);
        },
        py::arg("k"), py::arg("M"), "Returns (graph, source, dest).");
  m.def("gen_random",
        [](int n, int edges, std::int64_t max_weight, std::uint64_t seed,
           bool connected) {
          return GenerateRandomGraph({n, edges, max_weight, seed, connected});
        },
        py::arg("n"), py::arg("m"), py::arg("max_weight") = 100,
        py::arg("seed") = 1, py::arg("connected") = true);

  py::module_ oracle_module =
      m.def_submodule("oracle", "Brute-force references.");
  oracle_module.def(
      "brute_svalue",
      [](const Graph& g, Vertex t, Vertex u, EdgeId e) {
        return oracle::BruteSvalue(g, t, u, e).value();
      },
      py::arg("graph"), py::arg("dest"), py::arg("vertex"), py::arg("edge"));
  oracle_module.def(
      "brute_orp_value",
      [](const Graph& g, Vertex s, Vertex t) {
        return oracle::BruteOrpValue(g, s, t).value();
      },
      py::arg("graph"), py::arg("source"), py::arg("dest"));
  oracle_module.def(
      "brute_korp_value",
      [](const Graph& g, Vertex s, Vertex t, int k) {
        return oracle::BruteKorpValue(g, s, t, k).value();
      },
      py::arg("graph"), py::arg("source"), py::arg("dest"), py::arg("k"));
  oracle_module.def("has_two_edge_disjoint_paths",
                    &oracle::HasTwoEdgeDisjointPaths, py::arg("graph"),
                    py::arg("source"), py::arg("dest"));
}
