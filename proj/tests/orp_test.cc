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

#include <sstream>

#include "gtest/gtest.h"
#include "orp/errors.h"
#include "orp/oracle.h"
#include "orp/simulate.h"
#include "test_graphs.h"

namespace orp {
namespace {

using ::orp::testing::C;
using ::orp::testing::FourEdge;
using ::orp::testing::kA;
using ::orp::testing::kInf;
using ::orp::testing::kS;
using ::orp::testing::kT;
using ::orp::testing::PathGraph;
using ::orp::testing::Triangle;

TEST(SolveOrpTest, Triangle) {
  const Graph g = Triangle();
  const DetourTable table = BuildDetourTable(g, kT);
  const OrpSolution sol = SolveOrp(g, table);
  EXPECT_EQ(sol.y, (std::vector<Cost>{C(2), C(2), C(0)}));
  EXPECT_EQ(sol.successor_edge[kS], 0);
  EXPECT_EQ(sol.successor[kS], kT);
}

TEST(SolveOrpTest, BridgesGiveInfinity) {
  const Graph g = PathGraph();
  const OrpSolution sol = SolveOrp(g, BuildDetourTable(g, kT));
  EXPECT_EQ(sol.y[kS], kInf);
  EXPECT_EQ(sol.y[kA], kInf);
  EXPECT_EQ(sol.y[kT], C(0));
  EXPECT_EQ(sol.settle_order.size(), 3u);
}

TEST(SolveOrpTest, FourEdgeGraph) {
  const Graph g = FourEdge();
  const DetourTable table = BuildDetourTable(g, kT);
  const OrpSolution sol = SolveOrp(g, table);
  EXPECT_EQ(sol.y[kS], C(4));
  // Both nominal paths have robust length 4.
  const EdgeId direct[] = {0};
  const EdgeId via_a[] = {1, 2};
  EXPECT_EQ(RobustLength(g, table, kS, direct), C(4));
  EXPECT_EQ(RobustLength(g, table, kS, via_a), C(4));
}

TEST(RobustLengthTest, Triangle) {
  const Graph g = Triangle();
  const DetourTable table = BuildDetourTable(g, kT);
  const EdgeId direct[] = {0};
  const EdgeId around[] = {1, 2};
  EXPECT_EQ(RobustLength(g, table, kS, direct), C(2));
  EXPECT_EQ(RobustLength(g, table, kS, around), C(3));
  EXPECT_EQ(RobustLength(g, table, kT, {}), C(0));
}

TEST(RobustLengthTest, RejectsBadPaths) {
  const Graph g = Triangle();
  const DetourTable table = BuildDetourTable(g, kT);
  const EdgeId gap[] = {1, 0};
  const EdgeId short_path[] = {1};
  const EdgeId loop[] = {1, 1};
  EXPECT_THROW(RobustLength(g, table, kS, gap), InputError);
  EXPECT_THROW(RobustLength(g, table, kS, short_path), InputError);
  EXPECT_THROW(RobustLength(g, table, kS, loop), InputError);
}

TEST(NominalPathTest, Examples) {
  const Graph g = Triangle();
  const OrpSolution sol = SolveOrp(g, BuildDetourTable(g, kT));
  EXPECT_EQ(NominalPath(sol, kS), (std::vector<EdgeId>{0}));
  EXPECT_TRUE(NominalPath(sol, kT).empty());

  const Graph path = PathGraph();
  const OrpSolution none = SolveOrp(path, BuildDetourTable(path, kT));
  EXPECT_THROW(NominalPath(none, kS), DomainError);
}

TEST(ReconstructSolutionTest, ReproducesPotentials) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Graph g = GenerateRandomGraph({30, 80, 100, seed, true});
    const DetourTable table = BuildDetourTable(g, 0);
    const OrpSolution sol = SolveOrp(g, table);
    const OrpSolution again =
        ReconstructSolution(g, table, sol.successor_edge);
    EXPECT_EQ(again.y, sol.y);
    EXPECT_EQ(again.successor, sol.successor);
  }
}

// Oracle equivalence and the structural invariants of the solution.
TEST(SolveOrpTest, MatchesOracleAndInvariants) {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const int n = 2 + static_cast<int>(seed % 8);
    const int m = n - 1 + static_cast<int>(seed % 7);
    const Graph g =
        GenerateRandomGraph({n, m, seed % 3 == 0 ? 3 : 50, seed, true});
    const Vertex t = static_cast<Vertex>(seed % n);
    const DetourTable table = BuildDetourTable(g, t);
    const OrpSolution sol = SolveOrp(g, table);
    Cost previous = C(0);
    for (Vertex v : sol.settle_order) {
      EXPECT_GE(sol.y[v], previous);
      previous = sol.y[v];
    }
    for (Vertex s = 0; s < n; ++s) {
      ASSERT_EQ(sol.y[s], oracle::BruteOrpValue(g, s, t))
          << "seed " << seed << " s " << s;
      EXPECT_GE(sol.y[s], table.tree().dstar[s]);
      EXPECT_EQ(sol.y[s].is_finite(),
                oracle::HasTwoEdgeDisjointPaths(g, s, t));
      if (sol.y[s].is_infinite() || s == t) continue;
      const EdgeId e = sol.successor_edge[s];
      EXPECT_EQ(sol.y[s], Max(g.length(e) + sol.y[sol.successor[s]],
                              table.Query(g, s, e)));
      const std::vector<EdgeId> path = NominalPath(sol, s);
      const Cost val = RobustLength(g, table, s, path);
      EXPECT_EQ(val, sol.y[s]);
      // Suffixes of the nominal path are no worse.
      Vertex at = s;
      for (std::size_t i = 0; i < path.size(); ++i) {
        at = g.Opposite(path[i], at);
        const std::span<const EdgeId> suffix(path.data() + i + 1,
                                             path.size() - i - 1);
        EXPECT_LE(RobustLength(g, table, at, suffix), val);
      }
    }
  }
}

}  // namespace
}  // namespace orp
