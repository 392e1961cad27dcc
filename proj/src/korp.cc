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

#include "orp/korp.h"

#include <functional>
#include <memory>
#include <optional>
#include <queue>
#include <string>

#include "orp/detour.h"
#include "orp/errors.h"

namespace orp {

KorpSolver::KorpSolver(const Graph& g, Vertex dest, KorpOptions options)
    : graph_(&g), dest_(dest), options_(options) {
  if (!g.IsValidVertex(dest)) {
    throw InputError("destination " + std::to_string(dest) + " out of range");
  }
}

const KorpSolution& KorpSolver::Solve(int k, const EdgeSet& removed) {
  if (k < 0) throw InputError("failure parameter must be nonnegative");
  if (k > options_.max_k) {
    throw LimitExceeded("failure parameter " + std::to_string(k) +
                        " exceeds the cap of " +
                        std::to_string(options_.max_k));
  }
  for (EdgeId e : removed) {
    if (!graph_->IsValidEdge(e)) {
      throw InputError("removed edge " + std::to_string(e) + " out of range");
    }
  }
  return SolveLevel(k, removed);
}

const KorpSolution& KorpSolver::SolveLevel(int k, const EdgeSet& removed) {
  auto key = std::make_pair(k, removed);
  if (auto it = memo_.find(key); it != memo_.end()) return *it->second;

  const Graph& g = *graph_;
  const int n = g.num_vertices();
  auto sol = std::make_unique<KorpSolution>();
  sol->k = k;
  sol->dest = dest_;
  sol->removed = removed;

  if (k == 0) {
    ShortestPathTree tree = DijkstraTree(g, dest_, removed);
    sol->yk = std::move(tree.dstar);
    sol->successor_edge = std::move(tree.parent_edge);
    sol->successor = std::move(tree.parent);
    return *memo_.emplace(std::move(key), std::move(sol)).first->second;
  }

  // y_{k-1}(v, E \ e) for v an endpoint of e.
  std::function<Cost(Vertex, EdgeId)> detour;
  std::optional<DetourTable> table;
  if (k == 1 && options_.level_one ==
                    KorpOptions::LevelOneDetours::kDetourTable) {
    table.emplace(BuildDetourTable(g, dest_, removed));
    detour = [&](Vertex v, EdgeId e) { return table->Query(g, v, e); };
  } else {
    detour = [&](Vertex v, EdgeId e) {
      return SolveLevel(k - 1, removed.With(e)).yk[v];
    };
  }

  sol->yk.assign(n, Cost::Infinity());
  sol->successor_edge.assign(n, kNoEdge);
  sol->successor.assign(n, kNoVertex);
  const bool filtered = !removed.empty();
  std::vector<char> settled(n, 0);
  using Entry = std::pair<Cost, Vertex>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  sol->yk[dest_] = Cost::Zero();
  heap.emplace(Cost::Zero(), dest_);
  while (!heap.empty()) {
    const auto [yu, u] = heap.top();
    heap.pop();
    if (settled[u] || yu != sol->yk[u]) continue;
    settled[u] = 1;
    for (const Incidence& inc : g.incident(u)) {
      const Vertex v = inc.other;
      if (settled[v]) continue;
      if (filtered && removed.contains(inc.edge)) continue;
      const Cost candidate =
          Max(inc.length + yu, detour(v, inc.edge));
      if (candidate < sol->yk[v]) {
        sol->yk[v] = candidate;
        sol->successor[v] = u;
        sol->successor_edge[v] = inc.edge;
        heap.emplace(candidate, v);
      }
    }
  }
  return *memo_.emplace(std::move(key), std::move(sol)).first->second;
}

KorpSolution SolveKorp(const Graph& g, Vertex dest, int k,
                       const KorpOptions& options) {
  KorpSolver solver(g, dest, options);
  return solver.Solve(k);
}

OptimalStrategy::OptimalStrategy(const Graph& g, Vertex dest, int k,
                                 KorpOptions options)
    : solver_(g, dest, options), k_(k) {
  if (k < 0) throw InputError("failure parameter must be nonnegative");
  if (k > options.max_k) {
    throw LimitExceeded("failure parameter " + std::to_string(k) +
                        " exceeds the cap of " + std::to_string(options.max_k));
  }
}

Decision OptimalStrategy::Decide(const EdgeSet& known_failed, Vertex v) {
  if (!solver_.graph().IsValidVertex(v)) {
    throw InputError("vertex " + std::to_string(v) + " out of range");
  }
  if (known_failed.size() > k_) {
    throw DomainError("budget exceeded: " +
                      std::to_string(known_failed.size()) +
                      " known failures with k = " + std::to_string(k_));
  }
  if (v == solver_.dest()) return Decision::Halt();
  const KorpSolution& sol = solver_.Solve(k_ - known_failed.size(),
                                          known_failed);
  if (sol.yk[v].is_infinite()) return Decision::Stranded();
  return Decision::Take(sol.successor_edge[v]);
}

}  // namespace orp
