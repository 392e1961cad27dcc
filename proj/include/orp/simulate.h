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

// Executing routing strategies against failure scenarios, worst-case
// evaluation, the greedy shortest-path strategy, and instance generators.

#ifndef ORP_SIMULATE_H_
#define ORP_SIMULATE_H_

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "orp/cost.h"
#include "orp/graph.h"
#include "orp/korp.h"

namespace orp {

// A failure scenario is the set of failed edges, fixed before the walk.
using Scenario = EdgeSet;

struct WalkStep {
  Vertex from = kNoVertex;
  EdgeId edge = kNoEdge;
  Vertex to = kNoVertex;
  // The probe found the edge failed; from == to and nothing is paid.
  bool failed = false;
};

struct Walk {
  std::vector<WalkStep> steps;
  Cost total_cost;
  std::vector<EdgeId> probed_failures;
  // The strategy had no way to reach the destination; total_cost is
  // infinite.
  bool stranded = false;
};

// Runs `strategy` from s with no known failures. Failed probes add the edge
// to the known set and leave the walk in place at no cost. Throws
// DomainError when the strategy picks an edge not incident to the current
// vertex, halts away from the destination, or the walk exceeds
// (|scenario| + 1) * n + m steps. Throws InputError for invalid scenario ids.
Walk ExecuteWalk(const Graph& g, RoutingStrategy& strategy, Vertex s,
                 const Scenario& scenario);

struct WorstCase {
  Cost cost;
  // Lexicographically smallest maximizing scenario.
  Scenario scenario;
  Walk walk;
  std::int64_t scenarios_evaluated = 0;
};

inline constexpr std::int64_t kDefaultScenarioBudget = 1'000'000;

// Exact maximum of the walk cost over every scenario of at most k edges.
// Throws LimitExceeded (naming the count) when there are more than
// `max_scenarios` scenarios.
WorstCase EvaluateWorstCase(const Graph& g, RoutingStrategy& strategy,
                            Vertex s, int k,
                            std::int64_t max_scenarios = kDefaultScenarioBudget);

// Number of edge subsets of size at most k, saturating at INT64_MAX.
std::int64_t CountScenarios(int num_edges, int k);

// Always heads along a shortest path of the graph minus the known failures.
class GreedyStrategy : public RoutingStrategy {
 public:
  GreedyStrategy(const Graph& g, Vertex dest);
  Decision Decide(const EdgeSet& known_failed, Vertex v) override;
  Vertex dest() const override { return dest_; }

 private:
  const Graph* graph_;
  Vertex dest_;
  std::map<EdgeSet, ShortestPathTree> trees_;
};

struct Instance {
  Graph graph;
  Vertex source = kNoVertex;
  Vertex dest = kNoVertex;
};

// The tight instance for the greedy strategy: k + 1 parallel s-t edges of
// length M + 1, a chain s, u_1, ..., u_k with len(s u_1) = M and
// len(u_i u_{i+1}) = 2^i M, and zero-length edges u_i t.
// Vertex ids: s = 0, t = 1, u_i = i + 1. Edge ids: the parallel edges, then
// the chain from s, then the spokes u_1 t ... u_k t.
Instance GenerateBadExample(int k, std::int64_t m_scale);

struct RandomGraphOptions {
  int num_vertices = 2;
  int num_edges = 1;
  std::int64_t max_weight = 100;
  std::uint64_t seed = 1;
  // Start from a random spanning tree (requires m >= n - 1).
  bool connected = true;
};

// Seeded and reproducible. Extra edges join uniformly random distinct
// endpoints, so parallel edges occur. Weights are uniform in [0, max_weight].
Graph GenerateRandomGraph(const RandomGraphOptions& options);

}  // namespace orp

#endif  // ORP_SIMULATE_H_
