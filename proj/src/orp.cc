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

#include "orp/orp.h"

#include <functional>
#include <queue>
#include <string>
#include <utility>

#include "orp/errors.h"

namespace orp {

OrpSolution SolveOrp(const Graph& g, const DetourTable& table) {
  const int n = g.num_vertices();
  const Vertex t = table.dest();
  const EdgeSet& removed = table.tree().removed;
  const bool filtered = !removed.empty();

  OrpSolution sol;
  sol.dest = t;
  sol.y.assign(n, Cost::Infinity());
  sol.successor.assign(n, kNoVertex);
  sol.successor_edge.assign(n, kNoEdge);
  sol.settle_order.reserve(n);

  std::vector<char> settled(n, 0);
  using Entry = std::pair<Cost, Vertex>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  sol.y[t] = Cost::Zero();
  heap.emplace(Cost::Zero(), t);
  while (!heap.empty()) {
    const auto [yu, u] = heap.top();
    heap.pop();
    ++sol.heap_pops;
    if (settled[u] || yu != sol.y[u]) continue;
    settled[u] = 1;
    sol.settle_order.push_back(u);
    for (const Incidence& inc : g.incident(u)) {
      const Vertex v = inc.other;
      if (settled[v]) continue;
      if (filtered && removed.contains(inc.edge)) continue;
      const Cost candidate =
          Max(inc.length + yu, table.QueryIncident(v, inc.edge));
      if (candidate < sol.y[v]) {
        sol.y[v] = candidate;
        sol.successor[v] = u;
        sol.successor_edge[v] = inc.edge;
        heap.emplace(candidate, v);
      }
    }
  }
  // Vertices never reached keep y = infinity; they are settled last, in id
  // order, so the order covers every vertex.
  for (Vertex v = 0; v < n; ++v) {
    if (!settled[v]) sol.settle_order.push_back(v);
  }
  return sol;
}

Cost RobustLength(const Graph& g, const DetourTable& table, Vertex source,
                  std::span<const EdgeId> path) {
  if (!g.IsValidVertex(source)) {
    throw InputError("source " + std::to_string(source) + " out of range");
  }
  std::vector<char> visited(g.num_vertices(), 0);
  visited[source] = 1;
  Cost prefix = Cost::Zero();
  Cost worst = Cost::Zero();
  Vertex at = source;
  for (EdgeId e : path) {
    if (!g.IsIncident(e, at)) {
      throw InputError("path is not contiguous at edge " + std::to_string(e));
    }
    worst = Max(worst, prefix + table.Query(g, at, e));
    prefix += g.length(e);
    at = g.Opposite(e, at);
    if (visited[at]) throw InputError("path revisits a vertex");
    visited[at] = 1;
  }
  if (at != table.dest()) {
    throw InputError("path does not end at the destination");
  }
  return Max(worst, prefix);
}

std::vector<EdgeId> NominalPath(const OrpSolution& solution, Vertex s) {
  if (s < 0 || s >= static_cast<Vertex>(solution.y.size())) {
    throw InputError("source " + std::to_string(s) + " out of range");
  }
  if (solution.y[s].is_infinite()) throw DomainError("no robust path");
  std::vector<EdgeId> path;
  for (Vertex v = s; v != solution.dest; v = solution.successor[v]) {
    path.push_back(solution.successor_edge[v]);
  }
  return path;
}

OrpSolution ReconstructSolution(const Graph& g, const DetourTable& table,
                                std::span<const EdgeId> successor_edges) {
  const int n = g.num_vertices();
  if (static_cast<int>(successor_edges.size()) != n) {
    throw InputError("expected one successor edge per vertex");
  }
  OrpSolution sol;
  sol.dest = table.dest();
  sol.y.assign(n, Cost::Infinity());
  sol.successor.assign(n, kNoVertex);
  sol.successor_edge.assign(successor_edges.begin(), successor_edges.end());
  if (sol.successor_edge[sol.dest] != kNoEdge) {
    throw InputError("destination has a successor");
  }
  for (Vertex v = 0; v < n; ++v) {
    const EdgeId e = sol.successor_edge[v];
    if (e == kNoEdge) continue;
    if (!g.IsIncident(e, v)) {
      throw InputError("successor edge " + std::to_string(e) +
                       " not incident to vertex " + std::to_string(v));
    }
    sol.successor[v] = g.Opposite(e, v);
  }

  sol.y[sol.dest] = Cost::Zero();
  std::vector<char> state(n, 0);  // 0 new, 1 on chain, 2 done
  state[sol.dest] = 2;
  std::vector<Vertex> chain;
  for (Vertex start = 0; start < n; ++start) {
    Vertex v = start;
    while (state[v] == 0 && sol.successor[v] != kNoVertex) {
      state[v] = 1;
      chain.push_back(v);
      v = sol.successor[v];
    }
    if (state[v] == 1) throw InputError("successor edges contain a cycle");
    if (state[v] == 0) {
      // A chain ending away from the destination carries no robust path.
      state[v] = 2;
      for (Vertex w : chain) {
        sol.successor[w] = kNoVertex;
        sol.successor_edge[w] = kNoEdge;
      }
    }
    while (!chain.empty()) {
      const Vertex w = chain.back();
      chain.pop_back();
      const EdgeId e = sol.successor_edge[w];
      if (e != kNoEdge) {
        sol.y[w] = Max(g.length(e) + sol.y[sol.successor[w]],
                       table.Query(g, w, e));
      }
      state[w] = 2;
    }
  }
  return sol;
}

}  // namespace orp
