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

#include "orp/oracle.h"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <string>

#include "orp/errors.h"

namespace orp::oracle {
namespace {

void CheckVertex(const Graph& g, Vertex v) {
  if (!g.IsValidVertex(v)) {
    throw InputError("vertex " + std::to_string(v) + " out of range");
  }
}

std::vector<char> RemovedMask(const Graph& g, std::span<const EdgeId> removed) {
  std::vector<char> mask(g.num_edges(), 0);
  for (EdgeId e : removed) {
    if (!g.IsValidEdge(e)) {
      throw InputError("edge " + std::to_string(e) + " out of range");
    }
    mask[e] = 1;
  }
  return mask;
}

// Val of `path` given precomputed distance arrays per failed edge.
Cost RobustLengthFromTables(const Graph& g, Vertex source,
                            std::span<const EdgeId> path,
                            const std::vector<std::vector<Cost>>& avoiding) {
  Cost prefix = Cost::Zero();
  Cost worst = Cost::Zero();
  Vertex at = source;
  for (EdgeId e : path) {
    worst = Max(worst, prefix + avoiding[e][at]);
    prefix += g.length(e);
    at = g.Opposite(e, at);
  }
  return Max(worst, prefix);
}

}  // namespace

std::vector<Cost> DistancesTo(const Graph& g, Vertex t,
                              std::span<const EdgeId> removed) {
  CheckVertex(g, t);
  const std::vector<char> mask = RemovedMask(g, removed);
  std::vector<Cost> dist(g.num_vertices(), Cost::Infinity());
  std::vector<char> queued(g.num_vertices(), 0);
  std::deque<Vertex> queue;
  dist[t] = Cost::Zero();
  queue.push_back(t);
  queued[t] = 1;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    queued[u] = 0;
    for (const Edge& edge : g.edges()) {
      if (mask[&edge - g.edges().data()]) continue;
      Vertex v;
      if (edge.u == u) {
        v = edge.v;
      } else if (edge.v == u) {
        v = edge.u;
      } else {
        continue;
      }
      const Cost candidate = dist[u] + edge.length;
      if (candidate < dist[v]) {
        dist[v] = candidate;
        if (!queued[v]) {
          queued[v] = 1;
          queue.push_back(v);
        }
      }
    }
  }
  return dist;
}

Cost BruteSvalue(const Graph& g, Vertex t, Vertex u, EdgeId e) {
  CheckVertex(g, u);
  const EdgeId removed[] = {e};
  return DistancesTo(g, t, removed)[u];
}

Cost BruteRobustLength(const Graph& g, Vertex t, Vertex source,
                       std::span<const EdgeId> path) {
  Cost prefix = Cost::Zero();
  Cost worst = Cost::Zero();
  Vertex at = source;
  for (EdgeId e : path) {
    if (!g.IsIncident(e, at)) {
      throw InputError("path is not contiguous at edge " + std::to_string(e));
    }
    worst = Max(worst, prefix + BruteSvalue(g, t, at, e));
    prefix += g.length(e);
    at = g.Opposite(e, at);
  }
  if (at != t) throw InputError("path does not end at the destination");
  return Max(worst, prefix);
}

std::vector<PathProfile> EnumeratePathProfiles(const Graph& g, Vertex s,
                                               Vertex t) {
  CheckVertex(g, s);
  CheckVertex(g, t);
  if (g.num_vertices() > kMaxPathEnumerationVertices) {
    throw LimitExceeded("path enumeration is limited to " +
                        std::to_string(kMaxPathEnumerationVertices) +
                        " vertices, graph has " +
                        std::to_string(g.num_vertices()));
  }
  std::vector<std::vector<Cost>> avoiding(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const EdgeId removed[] = {e};
    avoiding[e] = DistancesTo(g, t, removed);
  }

  std::vector<PathProfile> profiles;
  std::vector<EdgeId> path;
  std::vector<char> on_path(g.num_vertices(), 0);
  // Recursive DFS; depth is bounded by the vertex guard.
  auto dfs = [&](auto&& self, Vertex at, Cost length) -> void {
    if (at == t) {
      profiles.push_back(
          {path, length, RobustLengthFromTables(g, s, path, avoiding)});
      return;
    }
    on_path[at] = 1;
    for (const Incidence& inc : g.incident(at)) {
      if (on_path[inc.other]) continue;
      path.push_back(inc.edge);
      self(self, inc.other, length + g.length(inc.edge));
      path.pop_back();
    }
    on_path[at] = 0;
  };
  dfs(dfs, s, Cost::Zero());
  return profiles;
}

Cost BruteOrpValue(const Graph& g, Vertex s, Vertex t) {
  Cost best = Cost::Infinity();
  for (const PathProfile& p : EnumeratePathProfiles(g, s, t)) {
    best = Min(best, p.robust_length);
  }
  return best;
}

std::vector<Cost> BruteKorpValues(const Graph& g, Vertex t, int k) {
  CheckVertex(g, t);
  if (k < 0) throw InputError("failure parameter must be nonnegative");
  const int n = g.num_vertices();
  const int m = g.num_edges();

  // All removed sets of size <= k, in lexicographic order.
  std::vector<std::vector<EdgeId>> sets = {{}};
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (static_cast<int>(sets[i].size()) == k) continue;
    const EdgeId start = sets[i].empty() ? 0 : sets[i].back() + 1;
    for (EdgeId e = start; e < m; ++e) {
      std::vector<EdgeId> next = sets[i];
      next.push_back(e);
      sets.push_back(std::move(next));
      if (static_cast<long long>(sets.size()) * n > kMaxKorpStates) {
        throw LimitExceeded("k-ORP oracle state space exceeds " +
                            std::to_string(kMaxKorpStates) + " states");
      }
    }
  }
  std::map<std::vector<EdgeId>, int> index;
  for (int i = 0; i < static_cast<int>(sets.size()); ++i) index[sets[i]] = i;

  // extended[i][e]: index of sets[i] + {e}, or -1 if e is in sets[i] or the
  // budget is spent.
  std::vector<std::vector<int>> extended(sets.size(), std::vector<int>(m, -1));
  for (int i = 0; i < static_cast<int>(sets.size()); ++i) {
    if (static_cast<int>(sets[i].size()) == k) continue;
    for (EdgeId e = 0; e < m; ++e) {
      if (std::find(sets[i].begin(), sets[i].end(), e) != sets[i].end()) {
        continue;
      }
      std::vector<EdgeId> next = sets[i];
      next.insert(std::upper_bound(next.begin(), next.end(), e), e);
      extended[i][e] = index.at(next);
    }
  }

  std::vector<std::vector<Cost>> value(
      sets.size(), std::vector<Cost>(n, Cost::Infinity()));
  for (auto& row : value) row[t] = Cost::Zero();

  // Jacobi sweeps of the min-max operator.
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::vector<Cost>> next = value;
    for (int i = 0; i < static_cast<int>(sets.size()); ++i) {
      const std::vector<EdgeId>& removed = sets[i];
      for (Vertex v = 0; v < n; ++v) {
        if (v == t) continue;
        Cost best = Cost::Infinity();
        for (EdgeId e = 0; e < m; ++e) {
          const Edge& edge = g.edge(e);
          if (edge.u != v && edge.v != v) continue;
          if (std::find(removed.begin(), removed.end(), e) != removed.end()) {
            continue;
          }
          const Vertex u = edge.u == v ? edge.v : edge.u;
          Cost outcome = edge.length + value[i][u];
          if (extended[i][e] >= 0) {
            outcome = Max(outcome, value[extended[i][e]][v]);
          }
          best = Min(best, outcome);
        }
        if (best != next[i][v]) {
          next[i][v] = best;
          changed = true;
        }
      }
    }
    value = std::move(next);
  }
  return value[0];
}

Cost BruteKorpValue(const Graph& g, Vertex s, Vertex t, int k) {
  CheckVertex(g, s);
  return BruteKorpValues(g, t, k)[s];
}

bool HasTwoEdgeDisjointPaths(const Graph& g, Vertex s, Vertex t) {
  CheckVertex(g, s);
  CheckVertex(g, t);
  if (s == t) return true;
  // flow[e] in {-1, 0, 1}: net flow from edge.u to edge.v.
  std::vector<int> flow(g.num_edges(), 0);
  for (int round = 0; round < 2; ++round) {
    std::vector<EdgeId> via(g.num_vertices(), kNoEdge);
    std::vector<char> seen(g.num_vertices(), 0);
    std::queue<Vertex> queue;
    queue.push(s);
    seen[s] = 1;
    while (!queue.empty() && !seen[t]) {
      const Vertex u = queue.front();
      queue.pop();
      for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const Edge& edge = g.edge(e);
        Vertex w;
        int direction;
        if (edge.u == u) {
          w = edge.v;
          direction = 1;
        } else if (edge.v == u) {
          w = edge.u;
          direction = -1;
        } else {
          continue;
        }
        if (seen[w] || flow[e] == direction) continue;
        seen[w] = 1;
        via[w] = e;
        queue.push(w);
      }
    }
    if (!seen[t]) return false;
    for (Vertex w = t; w != s;) {
      const EdgeId e = via[w];
      const Edge& edge = g.edge(e);
      const Vertex u = edge.v == w ? edge.u : edge.v;
      flow[e] += (edge.u == u) ? 1 : -1;
      w = u;
    }
  }
  return true;
}

}  // namespace orp::oracle
