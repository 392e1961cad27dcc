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

#ifndef ORP_PARETO_H_
#define ORP_PARETO_H_

#include <vector>

#include "orp/cost.h"
#include "orp/detour.h"
#include "orp/graph.h"

namespace orp {

struct ParetoResult {
  enum class Status {
    kFeasible,
    // No s-t path at all.
    kUnreachable,
    // Paths exist but none has robust length within the bound.
    kBoundTooTight,
  };
  Status status = Status::kUnreachable;
  std::vector<EdgeId> path;
  Cost length = Cost::Infinity();
  Cost robust_length = Cost::Infinity();

  bool feasible() const { return status == Status::kFeasible; }
};

// Shortest s-t path among those with robust length at most `bound`.
//
// Dijkstra from s in which crossing u->v over edge e is allowed only when
// d(u) + s(u, e) <= bound; the label reached at the destination must itself
// be within the bound.
ParetoResult SolvePareto(const Graph& g, const DetourTable& table, Vertex s,
                         Cost bound);

}  // namespace orp

#endif  // ORP_PARETO_H_
