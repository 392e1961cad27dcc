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

// Detour values: for every vertex u, the distance from u to the destination
// once u's own tree edge has failed.
//
// For a non-tree edge vw let c(vw) = d*(v) + d*(w) + len(vw). The best detour
// for the tree edge above u leaves the subtree of u through the non-tree edge
// with the smallest c having exactly one endpoint inside that subtree, and
// its length is c - d*(u). BuildDetourTable scans non-tree edges by
// increasing c and assigns every still-unassigned tree edge on the tree paths
// from both endpoints up to their lowest common ancestor, contracting the
// assigned edges so that each tree edge is walked exactly once.

#ifndef ORP_DETOUR_H_
#define ORP_DETOUR_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "orp/cost.h"
#include "orp/graph.h"

namespace orp {

// c-values indexed by edge id. Tree edges and removed edges hold infinity
// (they are not candidates); so do non-tree edges with an endpoint that
// cannot reach the destination.
std::vector<Cost> ComputeCValues(const Graph& g, const ShortestPathTree& tree);

// Lowest common ancestor in `tree` of the two endpoints of each edge in
// `edges`, computed offline with union-find in O((n + p) alpha(n)). Throws
// InputError if an endpoint is not in the tree. BuildDetourTable does not
// need it; it finds the meeting point while contracting.
std::vector<Vertex> ComputeLcaLabels(const Graph& g,
                                     const ShortestPathTree& tree,
                                     std::span<const EdgeId> edges);

class DetourTable {
 public:
  const ShortestPathTree& tree() const { return tree_; }
  Vertex dest() const { return tree_.dest; }
  int num_vertices() const { return static_cast<int>(svalue_.size()); }

  // Distance to the destination avoiding u's tree edge; infinity when that
  // edge is a bridge towards the destination, or when u is the destination
  // or cannot reach it.
  Cost svalue(Vertex u) const { return svalue_[u]; }
  // Non-tree edge realizing svalue(u), or kNoEdge.
  EdgeId swap_edge(Vertex u) const { return swap_edge_[u]; }
  Cost cvalue(EdgeId e) const { return cvalue_[e]; }

  // Distance from v to the destination in the graph without edge e, which
  // must be incident to v (and not removed). Throws InputError otherwise.
  Cost Query(const Graph& g, Vertex v, EdgeId e) const;
  // Query without the argument checks, for the solvers' inner loops.
  Cost QueryIncident(Vertex v, EdgeId e) const {
    if (v == tree_.dest) return Cost::Zero();
    return tree_.parent_edge[v] == e ? svalue_[v] : tree_.dstar[v];
  }

  // Tree edges walked during contraction; at most n - 1.
  std::int64_t contraction_steps() const { return contraction_steps_; }

 private:
  friend DetourTable BuildDetourTable(const Graph&, ShortestPathTree);
  friend struct DetourTableIo;

  ShortestPathTree tree_;
  std::vector<Cost> svalue_;
  std::vector<EdgeId> swap_edge_;
  std::vector<Cost> cvalue_;
  std::int64_t contraction_steps_ = 0;
};

// Takes the tree by value; the table owns it. Ties in c go to the smaller
// edge id.
DetourTable BuildDetourTable(const Graph& g, ShortestPathTree tree);

// Convenience: DijkstraTree followed by BuildDetourTable.
DetourTable BuildDetourTable(const Graph& g, Vertex dest,
                             const EdgeSet& removed = {});

// Table file:
//   p orptab <n> <dest>                (dest 1-based)
//   <parentEdge> <swapEdge> [<successorEdge>]   one line per vertex, -1 = none
// Exactly n records regardless of the edge count. Detour values are rebuilt
// on load from the tree and the swap edges, bit-identical to the originals.
void WriteDetourTable(const DetourTable& table, std::ostream& out,
                      std::span<const EdgeId> successor_edges = {});

struct LoadedTable {
  DetourTable table;
  // Present when the file carries the third column.
  std::optional<std::vector<EdgeId>> successor_edges;
};
LoadedTable ReadDetourTable(const Graph& g, std::istream& in);

}  // namespace orp

#endif  // ORP_DETOUR_H_
