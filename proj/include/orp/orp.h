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

// Single-failure online replacement paths.
//
// The robust length of a v-t path P is the worst arrival cost when at most
// one edge fails and the failure is only discovered by trying to cross it:
//
//   Val(P) = max( len(P), max over edges uu' of P of len(P[v,u]) + s(u, uu') )
//
// where s(u, e) is the distance from u to t avoiding e. The potential y(v) is
// the minimum of Val over all v-t paths.

#ifndef ORP_ORP_H_
#define ORP_ORP_H_

#include <cstdint>
#include <span>
#include <vector>

#include "orp/cost.h"
#include "orp/detour.h"
#include "orp/graph.h"

namespace orp {

struct OrpSolution {
  Vertex dest = kNoVertex;
  std::vector<Cost> y;
  // Next vertex / edge of an optimal nominal path; absent for dest and for
  // vertices with infinite potential.
  std::vector<Vertex> successor;
  std::vector<EdgeId> successor_edge;
  // Vertices in the order their potential became final.
  std::vector<Vertex> settle_order;
  std::int64_t heap_pops = 0;
};

// Label-setting over potentials: settles the vertex with the smallest
// tentative potential (ties to the smaller id) and relaxes each neighbour v
// across edge e = vu to max(len(e) + y(u), s(v, e)). Only strict
// improvements replace a successor. Vertices without a robust path end with
// y = infinity.
OrpSolution SolveOrp(const Graph& g, const DetourTable& table);

// Val of the path `path` (edge ids, in order) from `source` to the table's
// destination. Throws InputError if the edges are not contiguous, the path
// revisits a vertex, or it does not end at the destination.
Cost RobustLength(const Graph& g, const DetourTable& table, Vertex source,
                  std::span<const EdgeId> path);

// Follows successor edges from s. Empty for s == dest. Throws DomainError
// ("no robust path") when y(s) is infinite.
std::vector<EdgeId> NominalPath(const OrpSolution& solution, Vertex s);

// Rebuilds potentials from stored successor edges, evaluating the fixed-point
// relation along each successor chain. Throws InputError if the successor
// edges do not form chains into the destination.
OrpSolution ReconstructSolution(const Graph& g, const DetourTable& table,
                                std::span<const EdgeId> successor_edges);

}  // namespace orp

#endif  // ORP_ORP_H_
