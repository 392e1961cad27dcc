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

#include "orp/simulate.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <utility>

#include "orp/errors.h"

namespace orp {

Walk ExecuteWalk(const Graph& g, RoutingStrategy& strategy, Vertex s,
                 const Scenario& scenario) {
  if (!g.IsValidVertex(s)) {
    throw InputError("source " + std::to_string(s) + " out of range");
  }
  for (EdgeId e : scenario) {
    if (!g.IsValidEdge(e)) {
      throw InputError("scenario edge " + std::to_string(e) + " out of range");
    }
  }
  const Vertex t = strategy.dest();
  const std::int64_t step_cap =
      static_cast<std::int64_t>(scenario.size() + 1) * g.num_vertices() +
      g.num_edges();

  Walk walk;
  walk.total_cost = Cost::Zero();
  EdgeSet known;
  Vertex at = s;
  while (at != t) {
    if (static_cast<std::int64_t>(walk.steps.size()) >= step_cap) {
      throw DomainError("step cap exceeded after " + std::to_string(step_cap) +
                        " steps");
    }
    const Decision decision = strategy.Decide(known, at);
    if (decision.kind == Decision::Kind::kStranded) {
      walk.stranded = true;
      walk.total_cost = Cost::Infinity();
      return walk;
    }
    if (decision.kind == Decision::Kind::kHalt) {
      throw DomainError("strategy halted at vertex " + std::to_string(at) +
                        " away from the destination");
    }
    const EdgeId e = decision.edge;
    if (!g.IsIncident(e, at)) {
      throw DomainError("strategy chose edge " + std::to_string(e) +
                        " not incident to vertex " + std::to_string(at));
    }
    if (scenario.contains(e)) {
      walk.steps.push_back({at, e, at, true});
      if (!known.contains(e)) {
        known = known.With(e);
        walk.probed_failures.push_back(e);
      }
      continue;
    }
    const Vertex next = g.Opposite(e, at);
    walk.steps.push_back({at, e, next, false});
    walk.total_cost += g.length(e);
    at = next;
  }
  return walk;
}

std::int64_t CountScenarios(int num_edges, int k) {
  constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
  std::int64_t total = 0;
  std::int64_t binom = 1;  // C(m, i)
  for (int i = 0; i <= std::min(k, num_edges); ++i) {
    if (i > 0) {
      // C(m, i) = C(m, i - 1) * (m - i + 1) / i, exact in 128 bits.
      const __int128 next =
          static_cast<__int128>(binom) * (num_edges - i + 1) / i;
      if (next > kMax) return kMax;
      binom = static_cast<std::int64_t>(next);
    }
    if (total > kMax - binom) return kMax;
    total += binom;
  }
  return total;
}

WorstCase EvaluateWorstCase(const Graph& g, RoutingStrategy& strategy,
                            Vertex s, int k, std::int64_t max_scenarios) {
  if (k < 0) throw InputError("failure parameter must be nonnegative");
  const std::int64_t count = CountScenarios(g.num_edges(), k);
  if (count > max_scenarios) {
    throw LimitExceeded("worst-case evaluation needs " +
                        std::to_string(count) + " scenarios, budget is " +
                        std::to_string(max_scenarios));
  }
  WorstCase worst;
  worst.cost = Cost(-1.0);
  const int m = g.num_edges();
  std::vector<EdgeId> current;
  // Lexicographic order; only a strictly worse cost replaces the incumbent.
  auto visit = [&](auto&& self) -> void {
    Scenario scenario(current);
    Walk walk = ExecuteWalk(g, strategy, s, scenario);
    ++worst.scenarios_evaluated;
    if (walk.total_cost > worst.cost) {
      worst.cost = walk.total_cost;
      worst.scenario = std::move(scenario);
      worst.walk = std::move(walk);
    }
    if (static_cast<int>(current.size()) == k) return;
    const EdgeId start = current.empty() ? 0 : current.back() + 1;
    for (EdgeId e = start; e < m; ++e) {
      current.push_back(e);
      self(self);
      current.pop_back();
    }
  };
  visit(visit);
  return worst;
}

GreedyStrategy::GreedyStrategy(const Graph& g, Vertex dest)
    : graph_(&g), dest_(dest) {
  if (!g.IsValidVertex(dest)) {
    throw InputError("destination " + std::to_string(dest) + " out of range");
  }
}

Decision GreedyStrategy::Decide(const EdgeSet& known_failed, Vertex v) {
  if (!graph_->IsValidVertex(v)) {
    throw InputError("vertex " + std::to_string(v) + " out of range");
  }
  if (v == dest_) return Decision::Halt();
  auto it = trees_.find(known_failed);
  if (it == trees_.end()) {
    it = trees_
             .emplace(known_failed,
                      DijkstraTree(*graph_, dest_, known_failed))
             .first;
  }
  const EdgeId e = it->second.parent_edge[v];
  if (e == kNoEdge) return Decision::Stranded();
  return Decision::Take(e);
}

Instance GenerateBadExample(int k, std::int64_t m_scale) {
  if (k < 1) throw InputError("bad example needs k >= 1");
  if (m_scale < 1) throw InputError("bad example needs M >= 1");
  if (k > 40) throw InputError("bad example chain lengths overflow for k > 40");
  const Vertex s = 0;
  const Vertex t = 1;
  auto chain = [](int i) { return static_cast<Vertex>(i + 1); };  // u_i
  const double scale = static_cast<double>(m_scale);
  std::vector<Edge> edges;
  for (int i = 0; i <= k; ++i) edges.push_back({s, t, Cost(scale + 1)});
  edges.push_back({s, chain(1), Cost(scale)});
  for (int i = 1; i < k; ++i) {
    edges.push_back({chain(i), chain(i + 1),
                     Cost(static_cast<double>(std::int64_t{1} << i) * scale)});
  }
  for (int i = 1; i <= k; ++i) edges.push_back({chain(i), t, Cost::Zero()});
  return {Graph(k + 2, std::move(edges)), s, t};
}

Graph GenerateRandomGraph(const RandomGraphOptions& options) {
  const int n = options.num_vertices;
  const int m = options.num_edges;
  if (n < 1) throw InputError("random graph needs at least one vertex");
  if (m < 0) throw InputError("negative edge count");
  if (options.max_weight < 0) throw InputError("negative maximum weight");
  if (options.connected && m < n - 1) {
    throw InputError("a connected graph on " + std::to_string(n) +
                     " vertices needs at least " + std::to_string(n - 1) +
                     " edges");
  }
  if (n == 1 && m > 0) {
    throw InputError("a single vertex admits no edges without self-loops");
  }

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::int64_t> weight(0, options.max_weight);
  std::uniform_int_distribution<Vertex> any_vertex(0, n - 1);
  std::vector<Edge> edges;
  edges.reserve(m);
  if (options.connected) {
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (int i = 1; i < n; ++i) {
      std::uniform_int_distribution<int> earlier(0, i - 1);
      edges.push_back({order[earlier(rng)], order[i], Cost::Zero()});
    }
  }
  while (static_cast<int>(edges.size()) < m) {
    const Vertex u = any_vertex(rng);
    Vertex v = any_vertex(rng);
    if (u == v) continue;
    edges.push_back({u, v, Cost::Zero()});
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  for (Edge& e : edges) {
    if (rng() & 1) std::swap(e.u, e.v);
    e.length = Cost(static_cast<double>(weight(rng)));
  }
  return Graph(n, std::move(edges));
}

}  // namespace orp
