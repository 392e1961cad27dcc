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

// Slow reference implementations. Nothing here calls into the fast solvers;
// only the Graph type is shared.

#ifndef ORP_ORACLE_H_
#define ORP_ORACLE_H_

#include <span>
#include <vector>

#include "orp/cost.h"
#include "orp/graph.h"

namespace orp::oracle {

inline constexpr int kMaxPathEnumerationVertices = 12;
inline constexpr long long kMaxKorpStates = 4'000'000;

// Label-correcting (queue-based Bellman-Ford) distances to t on the graph
// with `removed` deleted.
std::vector<Cost> DistancesTo(const Graph& g, Vertex t,
                              std::span<const EdgeId> removed = {});

// Distance from u to t in the graph without edge e.
Cost BruteSvalue(const Graph& g, Vertex t, Vertex u, EdgeId e);

// Val of a path from `source` given as edge ids; every failure is evaluated
// by a fresh shortest path computation.
Cost BruteRobustLength(const Graph& g, Vertex t, Vertex source,
                       std::span<const EdgeId> path);

struct PathProfile {
  std::vector<EdgeId> edges;
  Cost length;
  Cost robust_length;
};

// Every simple s-t path with its length and robust length (DFS
// enumeration). Throws LimitExceeded for graphs over
// kMaxPathEnumerationVertices vertices.
std::vector<PathProfile> EnumeratePathProfiles(const Graph& g, Vertex s,
                                               Vertex t);

// Minimum robust length over all simple s-t paths.
Cost BruteOrpValue(const Graph& g, Vertex s, Vertex t);

// y_k by value iteration over (vertex, removed set) states from an all
// infinite start until nothing changes.
Cost BruteKorpValue(const Graph& g, Vertex s, Vertex t, int k);
std::vector<Cost> BruteKorpValues(const Graph& g, Vertex t, int k);

// Two augmenting rounds of unit-capacity max flow.
bool HasTwoEdgeDisjointPaths(const Graph& g, Vertex s, Vertex t);

}  // namespace orp::oracle

#endif  // ORP_ORACLE_H_
