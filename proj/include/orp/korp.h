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

// Online replacement paths with up to k failed edges, and routing strategies.
//
// With active edge set E, the k-potential satisfies
//
//   y_k(v, E) = min over edges vu in E of
//                 max( len(vu) + y_k(u, E), y_{k-1}(v, E \ vu) )
//
// and y_0 is the ordinary distance to the destination. KorpSolver evaluates
// the recursion top-down, one label-setting pass per (level, removed set),
// memoized on the removed set.

#ifndef ORP_KORP_H_
#define ORP_KORP_H_

#include <cstdint>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "orp/cost.h"
#include "orp/graph.h"

namespace orp {

struct KorpOptions {
  // Largest failure parameter accepted; the recursion costs O(m^k log n).
  int max_k = 3;
  // How level-1 detour values y_0(v, E \ vu) are obtained: from a detour
  // table (O(m log n) per level-1 solve) or from one Dijkstra per edge.
  enum class LevelOneDetours { kDetourTable, kPerEdgeDijkstra };
  LevelOneDetours level_one = LevelOneDetours::kDetourTable;
};

struct KorpSolution {
  int k = 0;
  Vertex dest = kNoVertex;
  EdgeSet removed;
  std::vector<Cost> yk;
  // The minimizing edge of the recursion at each vertex; for k = 0 this is
  // the shortest path tree parent edge.
  std::vector<EdgeId> successor_edge;
  std::vector<Vertex> successor;
};

class KorpSolver {
 public:
  KorpSolver(const Graph& g, Vertex dest, KorpOptions options = {});

  // y_k on the graph minus `removed`. Throws LimitExceeded when k exceeds
  // options.max_k and InputError for a negative k or invalid edge ids.
  const KorpSolution& Solve(int k, const EdgeSet& removed = {});

  const Graph& graph() const { return *graph_; }
  Vertex dest() const { return dest_; }
  const KorpOptions& options() const { return options_; }
  std::size_t memo_size() const { return memo_.size(); }

 private:
  const KorpSolution& SolveLevel(int k, const EdgeSet& removed);

  const Graph* graph_;
  Vertex dest_;
  KorpOptions options_;
  std::map<std::pair<int, EdgeSet>, std::unique_ptr<KorpSolution>> memo_;
};

KorpSolution SolveKorp(const Graph& g, Vertex dest, int k,
                       const KorpOptions& options = {});

// A deterministic routing decision at (known failures, current vertex).
struct Decision {
  enum class Kind { kEdge, kHalt, kStranded };
  Kind kind = Kind::kHalt;
  EdgeId edge = kNoEdge;

  static Decision Take(EdgeId e) { return {Kind::kEdge, e}; }
  static Decision Halt() { return {Kind::kHalt, kNoEdge}; }
  static Decision Stranded() { return {Kind::kStranded, kNoEdge}; }

  friend bool operator==(const Decision&, const Decision&) = default;
};

// Maps (known failed edges, current vertex) to the next edge to probe.
// Implementations may cache internally but the result depends only on the
// arguments. Strategies keep a reference to their graph.
class RoutingStrategy {
 public:
  virtual ~RoutingStrategy() = default;
  virtual Decision Decide(const EdgeSet& known_failed, Vertex v) = 0;
  virtual Vertex dest() const = 0;
};

// Follows the successor edge of the (k - |F'|)-potential on the graph minus
// the known failures F'. Throws DomainError ("budget exceeded") when
// |F'| > k.
class OptimalStrategy : public RoutingStrategy {
 public:
  OptimalStrategy(const Graph& g, Vertex dest, int k,
                  KorpOptions options = {});
  Decision Decide(const EdgeSet& known_failed, Vertex v) override;
  Vertex dest() const override { return solver_.dest(); }
  int k() const { return k_; }

 private:
  KorpSolver solver_;
  int k_;
};

}  // namespace orp

#endif  // ORP_KORP_H_
