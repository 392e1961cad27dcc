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

// Undirected weighted multigraph, removed-edge views, and the
// single-destination shortest path tree every solver builds on.

#ifndef ORP_GRAPH_H_
#define ORP_GRAPH_H_

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "orp/cost.h"

namespace orp {

using Vertex = std::int32_t;
using EdgeId = std::int32_t;

inline constexpr Vertex kNoVertex = -1;
inline constexpr EdgeId kNoEdge = -1;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Cost length;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  EdgeId edge;
  Vertex other;
  Cost length;
};

// Immutable after construction. Edge ids are dense (0..m-1) in the order the
// edges were given; parallel edges are distinct edges. Each vertex's
// incidence list is ordered by increasing edge id.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int num_vertices) : Graph(num_vertices, {}) {}
  // Throws InputError on an endpoint out of range, a self-loop, or a negative
  // or non-finite length.
  Graph(int num_vertices, std::vector<Edge> edges);
  Graph(int num_vertices, std::initializer_list<Edge> edges)
      : Graph(num_vertices, std::vector<Edge>(edges)) {}

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  Cost length(EdgeId e) const { return edges_[e].length; }

  std::span<const Incidence> incident(Vertex v) const {
    return {incidences_.data() + offsets_[v],
            incidences_.data() + offsets_[v + 1]};
  }

  bool IsValidVertex(Vertex v) const { return v >= 0 && v < num_vertices_; }
  bool IsValidEdge(EdgeId e) const { return e >= 0 && e < num_edges(); }
  bool IsIncident(EdgeId e, Vertex v) const {
    return IsValidEdge(e) && (edges_[e].u == v || edges_[e].v == v);
  }
  // The endpoint of `e` that is not `v`. `v` must be an endpoint.
  Vertex Opposite(EdgeId e, Vertex v) const {
    return edges_[e].u == v ? edges_[e].v : edges_[e].u;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.num_vertices_ == b.num_vertices_ && a.edges_ == b.edges_;
  }

 private:
  int num_vertices_ = 0;
  std::vector<Edge> edges_;
  // CSR incidence lists.
  std::vector<std::int64_t> offsets_ = {0};
  std::vector<Incidence> incidences_;
};

// A set of edge ids kept sorted and unique. Used for removed-edge views of a
// graph, failure scenarios, and memo keys; ordering is lexicographic on the
// sorted id list.
class EdgeSet {
 public:
  EdgeSet() = default;
  EdgeSet(std::initializer_list<EdgeId> ids)
      : EdgeSet(std::vector<EdgeId>(ids)) {}
  explicit EdgeSet(std::vector<EdgeId> ids);

  bool contains(EdgeId e) const;
  bool empty() const { return ids_.empty(); }
  int size() const { return static_cast<int>(ids_.size()); }
  const std::vector<EdgeId>& ids() const { return ids_; }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  EdgeSet With(EdgeId e) const;

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;
  friend auto operator<=>(const EdgeSet&, const EdgeSet&) = default;

 private:
  std::vector<EdgeId> ids_;
};

// Shortest path tree towards a single destination, on the graph with the
// edges of `removed` deleted.
struct ShortestPathTree {
  Vertex dest = kNoVertex;
  EdgeSet removed;
  // kNoEdge for dest and for vertices that cannot reach dest.
  std::vector<EdgeId> parent_edge;
  std::vector<Vertex> parent;
  std::vector<Cost> dstar;
  // Vertices in the order they were settled; only vertices that reach dest.
  std::vector<Vertex> settle_order;
  std::int64_t heap_pops = 0;

  bool reaches_dest(Vertex v) const { return dstar[v].is_finite(); }
  bool IsTreeEdge(const Graph& g, EdgeId e) const {
    const Edge& ed = g.edge(e);
    return parent_edge[ed.u] == e || parent_edge[ed.v] == e;
  }
};

// Dijkstra from `dest` over the graph minus `removed`. Heap ties go to the
// smaller vertex id. Among tight edges into an unsettled vertex, the parent is
// the lexicographically smallest (settled neighbour id, edge id).
ShortestPathTree DijkstraTree(const Graph& g, Vertex dest,
                              const EdgeSet& removed = {});

// Graph text format:
//   c <comment>
//   p orp <n> <m>
//   e <u> <v> <length>      (1-based endpoints, one line per edge)
// Throws ParseError with the offending line number.
Graph ParseGraph(std::istream& in);
Graph ParseGraph(const std::string& text);
void WriteGraph(const Graph& g, std::ostream& out);
std::string WriteGraph(const Graph& g);

}  // namespace orp

#endif  // ORP_GRAPH_H_
