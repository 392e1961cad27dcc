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

#include "cli.h"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "orp/cost.h"
#include "orp/detour.h"
#include "orp/errors.h"
#include "orp/graph.h"
#include "orp/korp.h"
#include "orp/oracle.h"
#include "orp/orp.h"
#include "orp/pareto.h"
#include "orp/simulate.h"

namespace orp::cli {
namespace {

using Json = nlohmann::ordered_json;

// Bad flag values and unreadable files; reported with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Single-line JSON with ", " and ": " separators.
void WriteJson(const Json& j, std::ostream& out) {
  if (j.is_object()) {
    out << '{';
    bool first = true;
    for (const auto& [key, value] : j.items()) {
      if (!first) out << ", ";
      first = false;
      out << Json(key).dump() << ": ";
      WriteJson(value, out);
    }
    out << '}';
  } else if (j.is_array()) {
    out << '[';
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i > 0) out << ", ";
      WriteJson(j[i], out);
    }
    out << ']';
  } else {
    out << j.dump();
  }
}

Json CostJson(Cost c) {
  if (c.is_infinite()) return "inf";
  const double v = c.value();
  if (v == std::floor(v) && std::fabs(v) < 9007199254740992.0) {
    return static_cast<std::int64_t>(v);
  }
  return v;
}

Json VertexJson(Vertex v) { return v == kNoVertex ? Json() : Json(v + 1); }
Json EdgeJson(EdgeId e) { return e == kNoEdge ? Json() : Json(e); }

Json EdgesJson(std::span<const EdgeId> edges) {
  Json list = Json::array();
  for (EdgeId e : edges) list.push_back(e);
  return list;
}

Graph LoadGraph(const std::string& path, std::istream& in) {
  if (path == "-") return ParseGraph(in);
  std::ifstream file(path);
  if (!file) throw UsageError("cannot open graph file '" + path + "'");
  return ParseGraph(file);
}

Vertex ToVertex(const Graph& g, int one_based, const std::string& flag) {
  if (one_based < 1 || one_based > g.num_vertices()) {
    throw UsageError(flag + " " + std::to_string(one_based) +
                     " is not a vertex in 1.." +
                     std::to_string(g.num_vertices()));
  }
  return one_based - 1;
}

Cost ParseBound(const std::string& text) {
  if (text == "inf") return Cost::Infinity();
  double value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() ||
      !std::isfinite(value) || value < 0) {
    throw UsageError("bound must be a nonnegative number or \"inf\", got '" +
                     text + "'");
  }
  return Cost(value);
}

template <typename T>
std::vector<T> ParseList(const std::string& text, const std::string& flag) {
  std::vector<T> values;
  if (text.empty()) return values;
  std::istringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    T value{};
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() ||
        ptr != token.data() + token.size()) {
      throw UsageError(flag + " expects a comma-separated integer list, got '" +
                       text + "'");
    }
    values.push_back(value);
  }
  return values;
}

struct GraphFlags {
  std::string graph;
  int dest = 0;
  int source = 0;
};

void AddGraphFlag(CLI::App* app, GraphFlags& flags) {
  app->add_option("-g,--graph", flags.graph, "graph file, or - for stdin")
      ->required();
}
void AddDestFlag(CLI::App* app, GraphFlags& flags) {
  app->add_option("-t,--dest", flags.dest, "destination vertex (1-based)")
      ->required();
}

std::optional<Vertex> OptionalSource(const Graph& g, const CLI::App* app,
                                     const GraphFlags& flags) {
  if (app->count("--source") == 0) return std::nullopt;
  return ToVertex(g, flags.source, "--source");
}

Json PotentialJson(Vertex dest, std::span<const Cost> y,
                   std::optional<Vertex> source,
                   const std::function<Json(Vertex)>& record) {
  Json doc;
  doc["dest"] = dest + 1;
  Json ys = Json::array();
  Json vertices = Json::array();
  for (Vertex v = 0; v < static_cast<Vertex>(y.size()); ++v) {
    if (source && *source != v) continue;
    ys.push_back(CostJson(y[v]));
    vertices.push_back(record(v));
  }
  doc["y"] = std::move(ys);
  doc["vertices"] = std::move(vertices);
  return doc;
}

int Solve(const GraphFlags& flags, const CLI::App* app,
          const std::string& save_table, const std::string& load_table,
          std::istream& in, std::ostream& out, std::ostream& err) {
  const Graph g = LoadGraph(flags.graph, in);
  const Vertex t = ToVertex(g, flags.dest, "-t");
  const std::optional<Vertex> source = OptionalSource(g, app, flags);

  std::optional<DetourTable> table;
  OrpSolution sol;
  if (!load_table.empty()) {
    std::ifstream file(load_table);
    if (!file) throw UsageError("cannot open table file '" + load_table + "'");
    LoadedTable loaded = ReadDetourTable(g, file);
    if (loaded.table.dest() != t) {
      throw UsageError("table was built for destination " +
                       std::to_string(loaded.table.dest() + 1));
    }
    table.emplace(std::move(loaded.table));
    sol = loaded.successor_edges
              ? ReconstructSolution(g, *table, *loaded.successor_edges)
              : SolveOrp(g, *table);
  } else {
    table.emplace(BuildDetourTable(g, t));
    sol = SolveOrp(g, *table);
  }
  if (!save_table.empty()) {
    std::ofstream file(save_table);
    if (!file) throw UsageError("cannot write table file '" + save_table + "'");
    WriteDetourTable(*table, file, sol.successor_edge);
  }

  Json doc = PotentialJson(t, sol.y, source, [&](Vertex v) {
    Json record;
    record["id"] = v + 1;
    record["y"] = CostJson(sol.y[v]);
    record["successor"] = VertexJson(sol.successor[v]);
    record["successorEdge"] = EdgeJson(sol.successor_edge[v]);
    record["swapEdge"] = EdgeJson(table->swap_edge(v));
    return record;
  });
  int code = kExitOk;
  if (source) {
    if (sol.y[*source].is_finite()) {
      doc["path"] = EdgesJson(NominalPath(sol, *source));
    } else {
      err << "orp: no robust path from vertex " << *source + 1 << "\n";
      code = kExitDomain;
    }
  }
  WriteJson(doc, out);
  out << "\n";
  return code;
}

int Svalues(const GraphFlags& flags, bool brute, std::istream& in,
            std::ostream& out) {
  const Graph g = LoadGraph(flags.graph, in);
  const Vertex t = ToVertex(g, flags.dest, "-t");
  Json doc;
  doc["dest"] = t + 1;
  std::optional<DetourTable> table;
  if (!brute) {
    table.emplace(BuildDetourTable(g, t));
    Json vertices = Json::array();
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      Json record;
      record["id"] = v + 1;
      record["dstar"] = CostJson(table->tree().dstar[v]);
      record["parentEdge"] = EdgeJson(table->tree().parent_edge[v]);
      record["swapEdge"] = EdgeJson(table->swap_edge(v));
      record["svalue"] = CostJson(table->svalue(v));
      vertices.push_back(std::move(record));
    }
    doc["vertices"] = std::move(vertices);
  }
  Json queries = Json::array();
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    for (const Incidence& inc : g.incident(v)) {
      const Cost s = brute ? oracle::BruteSvalue(g, t, v, inc.edge)
                           : table->Query(g, v, inc.edge);
      queries.push_back(Json{{"vertex", v + 1}, {"edge", inc.edge},
                             {"s", CostJson(s)}});
    }
  }
  doc["queries"] = std::move(queries);
  WriteJson(doc, out);
  out << "\n";
  return kExitOk;
}

int Korp(const GraphFlags& flags, const CLI::App* app, int k, int max_k,
         bool brute, std::istream& in, std::ostream& out, std::ostream& err) {
  const Graph g = LoadGraph(flags.graph, in);
  const Vertex t = ToVertex(g, flags.dest, "-t");
  const std::optional<Vertex> source = OptionalSource(g, app, flags);
  if (k < 0) throw UsageError("-k must be nonnegative");

  Json doc;
  std::vector<Cost> yk;
  if (brute) {
    yk = oracle::BruteKorpValues(g, t, k);
    doc = PotentialJson(t, yk, source, [&](Vertex v) {
      return Json{{"id", v + 1}, {"y", CostJson(yk[v])}};
    });
  } else {
    KorpOptions options;
    options.max_k = max_k;
    const KorpSolution sol = SolveKorp(g, t, k, options);
    yk = sol.yk;
    doc = PotentialJson(t, yk, source, [&](Vertex v) {
      Json record;
      record["id"] = v + 1;
      record["y"] = CostJson(sol.yk[v]);
      record["successor"] = VertexJson(sol.successor[v]);
      record["successorEdge"] = EdgeJson(sol.successor_edge[v]);
      return record;
    });
  }
  doc["k"] = k;
  int code = kExitOk;
  if (source && yk[*source].is_infinite()) {
    err << "orp: no robust path from vertex " << *source + 1 << " with k = "
        << k << "\n";
    code = kExitDomain;
  }
  WriteJson(doc, out);
  out << "\n";
  return code;
}

int OracleOrp(const GraphFlags& flags, const CLI::App* app, std::istream& in,
              std::ostream& out, std::ostream& err) {
  const Graph g = LoadGraph(flags.graph, in);
  const Vertex t = ToVertex(g, flags.dest, "-t");
  const std::optional<Vertex> source = OptionalSource(g, app, flags);
  std::vector<Cost> y(g.num_vertices(), Cost::Infinity());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!source || *source == v) y[v] = oracle::BruteOrpValue(g, v, t);
  }
  const Json doc = PotentialJson(t, y, source, [&](Vertex v) {
    return Json{{"id", v + 1}, {"y", CostJson(y[v])}};
  });
  WriteJson(doc, out);
  out << "\n";
  if (source && y[*source].is_infinite()) {
    err << "orp: no robust path from vertex " << *source + 1 << "\n";
    return kExitDomain;
  }
  return kExitOk;
}

int Pareto(const GraphFlags& flags, const std::string& bound_text,
           std::istream& in, std::ostream& out, std::ostream& err) {
  const Graph g = LoadGraph(flags.graph, in);
  const Vertex s = ToVertex(g, flags.source, "-s");
  const Vertex t = ToVertex(g, flags.dest, "-t");
  const Cost bound = ParseBound(bound_text);
  const ParetoResult result =
      SolvePareto(g, BuildDetourTable(g, t), s, bound);
  Json doc;
  doc["feasible"] = result.feasible();
  if (!result.feasible()) {
    WriteJson(doc, out);
    out << "\n";
    err << "orp: "
        << (result.status == ParetoResult::Status::kUnreachable
                ? "destination unreachable"
                : "no path has robust length within the bound")
        << "\n";
    return kExitDomain;
  }
  doc["length"] = CostJson(result.length);
  doc["robustLength"] = CostJson(result.robust_length);
  doc["path"] = EdgesJson(result.path);
  WriteJson(doc, out);
  out << "\n";
  return kExitOk;
}

Json WalkJson(const Walk& walk) {
  Json steps = Json::array();
  for (const WalkStep& step : walk.steps) {
    steps.push_back(Json{{"from", step.from + 1},
                         {"edge", step.edge},
                         {"to", step.to + 1},
                         {"failed", step.failed}});
  }
  Json doc;
  doc["steps"] = std::move(steps);
  doc["totalCost"] = CostJson(walk.total_cost);
  doc["probedFailures"] = EdgesJson(walk.probed_failures);
  doc["stranded"] = walk.stranded;
  return doc;
}

struct SimulateFlags {
  std::string strategy;
  int k = 0;
  std::string fail;
  bool worst_case = false;
  std::int64_t max_scenarios = kDefaultScenarioBudget;
};

int Simulate(const GraphFlags& flags, const SimulateFlags& sim,
             std::istream& in, std::ostream& out) {
  const Graph g = LoadGraph(flags.graph, in);
  const Vertex s = ToVertex(g, flags.source, "-s");
  const Vertex t = ToVertex(g, flags.dest, "-t");
  if (sim.k < 0) throw UsageError("-k must be nonnegative");
  std::unique_ptr<RoutingStrategy> strategy;
  if (sim.strategy == "optimal") {
    strategy = std::make_unique<OptimalStrategy>(g, t, sim.k);
  } else {
    strategy = std::make_unique<GreedyStrategy>(g, t);
  }

  Json doc;
  doc["strategy"] = sim.strategy;
  doc["k"] = sim.k;
  doc["source"] = s + 1;
  doc["dest"] = t + 1;
  if (sim.worst_case) {
    const WorstCase worst =
        EvaluateWorstCase(g, *strategy, s, sim.k, sim.max_scenarios);
    doc["cost"] = CostJson(worst.cost);
    doc["scenario"] = EdgesJson(worst.scenario.ids());
    doc["scenariosEvaluated"] = worst.scenarios_evaluated;
    doc["walk"] = WalkJson(worst.walk);
  } else {
    const Scenario scenario(ParseList<EdgeId>(sim.fail, "--fail"));
    if (static_cast<int>(scenario.size()) > sim.k) {
      throw UsageError("--fail lists " + std::to_string(scenario.size()) +
                       " edges but -k is " + std::to_string(sim.k));
    }
    for (EdgeId e : scenario) {
      if (!g.IsValidEdge(e)) {
        throw UsageError("--fail edge " + std::to_string(e) +
                         " is not an edge id");
      }
    }
    const Walk walk = ExecuteWalk(g, *strategy, s, scenario);
    doc["cost"] = CostJson(walk.total_cost);
    doc["scenario"] = EdgesJson(scenario.ids());
    doc["walk"] = WalkJson(walk);
  }
  WriteJson(doc, out);
  out << "\n";
  return kExitOk;
}

int Disjoint(const GraphFlags& flags, std::istream& in, std::ostream& out) {
  const Graph g = LoadGraph(flags.graph, in);
  const Vertex s = ToVertex(g, flags.source, "-s");
  const Vertex t = ToVertex(g, flags.dest, "-t");
  Json doc;
  doc["source"] = s + 1;
  doc["dest"] = t + 1;
  doc["twoEdgeDisjointPaths"] = oracle::HasTwoEdgeDisjointPaths(g, s, t);
  WriteJson(doc, out);
  out << "\n";
  return kExitOk;
}

struct BenchFlags {
  std::string sizes;
  std::uint64_t seed = 1;
  int runs = 5;
  std::int64_t max_weight = 1000;
};

int Bench(const BenchFlags& flags, std::ostream& out, std::ostream& err) {
  const std::vector<std::int64_t> sizes =
      ParseList<std::int64_t>(flags.sizes, "--sizes");
  if (sizes.empty()) throw UsageError("--sizes must list at least one size");
  if (flags.runs < 1) throw UsageError("--runs must be positive");
  Json results = Json::array();
  for (std::int64_t m : sizes) {
    const std::int64_t n = m / 4;
    if (n < 2 || m > (std::int64_t{1} << 30)) {
      throw UsageError("size " + std::to_string(m) + " out of range");
    }
    const Graph g = GenerateRandomGraph({static_cast<int>(n),
                                         static_cast<int>(m),
                                         flags.max_weight, flags.seed, true});
    std::vector<double> seconds;
    std::int64_t dijkstra_pops = 0;
    std::int64_t orp_pops = 0;
    std::int64_t contractions = 0;
    for (int run = 0; run < flags.runs; ++run) {
      const auto start = std::chrono::steady_clock::now();
      ShortestPathTree tree = DijkstraTree(g, 0);
      dijkstra_pops = tree.heap_pops;
      const DetourTable table = BuildDetourTable(g, std::move(tree));
      const OrpSolution sol = SolveOrp(g, table);
      const auto stop = std::chrono::steady_clock::now();
      seconds.push_back(std::chrono::duration<double>(stop - start).count());
      orp_pops = sol.heap_pops;
      contractions = table.contraction_steps();
    }
    std::vector<double> sorted = seconds;
    std::sort(sorted.begin(), sorted.end());
    const double median = sorted[sorted.size() / 2];
    err << "orp: bench m=" << m << " median " << median << " s\n";
    Json record;
    record["m"] = m;
    record["n"] = n;
    record["medianSeconds"] = median;
    record["seconds"] = seconds;
    record["dijkstraHeapPops"] = dijkstra_pops;
    record["orpHeapPops"] = orp_pops;
    record["contractionSteps"] = contractions;
    results.push_back(std::move(record));
  }
  Json doc;
  doc["seed"] = flags.seed;
  doc["runs"] = flags.runs;
  doc["results"] = std::move(results);
  WriteJson(doc, out);
  out << "\n";
  return kExitOk;
}

int GenBadExample(int k, std::int64_t scale, std::ostream& out) {
  const Instance inst = GenerateBadExample(k, scale);
  out << "c bad example k=" << k << " M=" << scale << " source "
      << inst.source + 1 << " dest " << inst.dest + 1 << "\n";
  WriteGraph(inst.graph, out);
  return kExitOk;
}

int GenRandom(const RandomGraphOptions& options, std::ostream& out) {
  const Graph g = GenerateRandomGraph(options);
  out << "c random n=" << options.num_vertices
      << " m=" << options.num_edges << " max-weight=" << options.max_weight
      << " seed=" << options.seed << "\n";
  WriteGraph(g, out);
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app("Online replacement paths: robust routing under edge failures "
               "discovered on arrival.",
               "orp");
  app.require_subcommand(1);

  GraphFlags gf;
  std::string save_table;
  std::string load_table;
  CLI::App* solve = app.add_subcommand("solve", "potentials y for one failure");
  AddGraphFlag(solve, gf);
  AddDestFlag(solve, gf);
  solve->add_option("--source", gf.source, "report only this vertex");
  auto* save = solve->add_option("--save-table", save_table,
                                 "write the detour table with successors");
  solve->add_option("--load-table", load_table,
                    "reuse a table written by --save-table")
      ->excludes(save);

  CLI::App* svalues = app.add_subcommand("svalues", "detour table s-values");
  AddGraphFlag(svalues, gf);
  AddDestFlag(svalues, gf);

  int k = 0;
  int max_k = KorpOptions{}.max_k;
  CLI::App* korp = app.add_subcommand("korp", "potentials for k failures");
  AddGraphFlag(korp, gf);
  AddDestFlag(korp, gf);
  korp->add_option("-k", k, "failure budget")->required();
  korp->add_option("--source", gf.source, "report only this vertex");
  korp->add_option("--max-k", max_k, "refuse budgets above this");

  std::string bound;
  CLI::App* pareto =
      app.add_subcommand("pareto", "shortest path with robust length <= B");
  AddGraphFlag(pareto, gf);
  pareto->add_option("-s,--source", gf.source, "source vertex")->required();
  AddDestFlag(pareto, gf);
  pareto->add_option("-B,--bound", bound, "bound, a number or inf")
      ->required();

  SimulateFlags sim;
  CLI::App* simulate =
      app.add_subcommand("simulate", "run a routing strategy");
  AddGraphFlag(simulate, gf);
  simulate->add_option("-s,--source", gf.source, "source vertex")->required();
  AddDestFlag(simulate, gf);
  simulate->add_option("--strategy", sim.strategy)
      ->required()
      ->check(CLI::IsMember({"optimal", "greedy"}));
  simulate->add_option("-k", sim.k, "failure budget")->required();
  auto* fail = simulate->add_option("--fail", sim.fail,
                                    "failed edge ids, comma-separated");
  simulate->add_flag("--worst-case", sim.worst_case,
                     "maximize over all scenarios of at most k failures")
      ->excludes(fail);
  simulate->add_option("--max-scenarios", sim.max_scenarios,
                       "refuse worst-case runs above this many scenarios");

  CLI::App* gen = app.add_subcommand("gen", "write a graph file");
  gen->require_subcommand(1);
  int bad_k = 1;
  std::int64_t bad_scale = 1;
  CLI::App* bad = gen->add_subcommand("bad-example", "greedy lower bound");
  bad->add_option("-k", bad_k)->required();
  bad->add_option("-M", bad_scale)->required();
  RandomGraphOptions random;
  CLI::App* rand = gen->add_subcommand("random", "seeded random graph");
  rand->add_option("-n", random.num_vertices)->required();
  rand->add_option("-m", random.num_edges)->required();
  rand->add_option("--max-weight", random.max_weight);
  rand->add_option("--seed", random.seed);
  bool disconnected = false;
  rand->add_flag("--disconnected", disconnected,
                 "skip the spanning tree");

  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "brute-force references for debugging");
  oracle_cmd->require_subcommand(1);
  CLI::App* o_svalues = oracle_cmd->add_subcommand("svalues", "");
  AddGraphFlag(o_svalues, gf);
  AddDestFlag(o_svalues, gf);
  CLI::App* o_korp = oracle_cmd->add_subcommand("korp", "");
  AddGraphFlag(o_korp, gf);
  AddDestFlag(o_korp, gf);
  o_korp->add_option("-k", k)->required();
  o_korp->add_option("--source", gf.source);
  CLI::App* o_orp = oracle_cmd->add_subcommand("orp", "");
  AddGraphFlag(o_orp, gf);
  AddDestFlag(o_orp, gf);
  o_orp->add_option("--source", gf.source);
  CLI::App* o_disjoint = oracle_cmd->add_subcommand("disjoint", "");
  AddGraphFlag(o_disjoint, gf);
  o_disjoint->add_option("-s,--source", gf.source)->required();
  AddDestFlag(o_disjoint, gf);

  BenchFlags bench_flags;
  CLI::App* bench = app.add_subcommand("bench", "time dijkstra+detour+solve");
  bench->add_option("--sizes", bench_flags.sizes, "edge counts")->required();
  bench->add_option("--seed", bench_flags.seed)->required();
  bench->add_option("--runs", bench_flags.runs);
  bench->add_option("--max-weight", bench_flags.max_weight);

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve) {
      return Solve(gf, solve, save_table, load_table, in, out, err);
    }
    if (*svalues) return Svalues(gf, false, in, out);
    if (*korp) return Korp(gf, korp, k, max_k, false, in, out, err);
    if (*pareto) return Pareto(gf, bound, in, out, err);
    if (*simulate) return Simulate(gf, sim, in, out);
    if (*bad) return GenBadExample(bad_k, bad_scale, out);
    if (*rand) {
      random.connected = !disconnected;
      return GenRandom(random, out);
    }
    if (*o_svalues) return Svalues(gf, true, in, out);
    if (*o_korp) return Korp(gf, o_korp, k, 0, true, in, out, err);
    if (*o_orp) return OracleOrp(gf, o_orp, in, out, err);
    if (*o_disjoint) return Disjoint(gf, in, out);
    if (*bench) return Bench(bench_flags, out, err);
  } catch (const DomainError& e) {
    err << "orp: " << e.what() << "\n";
    return kExitDomain;
  } catch (const LimitExceeded& e) {
    err << "orp: " << e.what() << "\n";
    return kExitDomain;
  } catch (const ParseError& e) {
    err << "orp: parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InputError& e) {
    err << "orp: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "orp: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "orp: no subcommand\n";
  return kExitUsage;
}

}  // namespace orp::cli
