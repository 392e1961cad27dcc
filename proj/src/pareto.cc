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

#include "orp/pareto.h"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>
#include <utility>

#include "orp/errors.h"
#include "orp/orp.h"

namespace orp {

ParetoResult SolvePareto(const Graph& g, const DetourTable& table, Vertex s,
                         Cost bound) {
  if (!g.IsValidVertex(s)) {
    throw InputError("source " + std::to_string(s) + " out of range");
  }
  if (bound < Cost::Zero()) throw InputError("bound must be nonnegative");
  const Vertex t = table.dest();
  const EdgeSet& removed = table.tree().removed;
  const bool filtered = !removed.empty();
  const int n = g.num_vertices();

  ParetoResult result;
  if (table.tree().dstar[s].is_infinite()) {
    result.status = ParetoResult::Status::kUnreachable;
    return result;
  }

  std::vector<Cost> d(n, Cost::Infinity());
  std::vector<EdgeId> via(n, kNoEdge);
  std::vector<char> settled(n, 0);
  using Entry = std::pair<Cost, Vertex>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  d[s] = Cost::Zero();
  heap.emplace(Cost::Zero(), s);
  while (!heap.empty()) {
    const auto [du, u] = heap.top();
    heap.pop();
    if (settled[u] || du != d[u]) continue;
    settled[u] = 1;
    if (u == t) break;
    for (const Incidence& inc : g.incident(u)) {
      const Vertex v = inc.other;
      if (settled[v]) continue;
      if (filtered && removed.contains(inc.edge)) continue;
      const Cost candidate = du + inc.length;
      if (!(candidate <= d[v])) continue;
      if (!(du + table.QueryIncident(u, inc.edge) <= bound)) continue;
      const bool improved = candidate < d[v];
      d[v] = candidate;
      via[v] = inc.edge;
      if (improved) heap.emplace(candidate, v);
    }
  }

  if (!settled[t] || !(d[t] <= bound)) {
    result.status = ParetoResult::Status::kBoundTooTight;
    return result;
  }
  for (Vertex v = t; v != s;) {
    result.path.push_back(via[v]);
    v = g.Opposite(via[v], v);
  }
  std::reverse(result.path.begin(), result.path.end());
  result.status = ParetoResult::Status::kFeasible;
  result.length = d[t];
  result.robust_length = RobustLength(g, table, s, result.path);
  return result;
}

}  // namespace orp
