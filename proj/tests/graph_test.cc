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

#include "orp/graph.h"

#include <string>

#include "gtest/gtest.h"
#include "orp/errors.h"
#include "orp/oracle.h"
#include "orp/simulate.h"
#include "test_graphs.h"

namespace orp {
namespace {

using ::orp::testing::C;
using ::orp::testing::kA;
using ::orp::testing::kInf;
using ::orp::testing::kS;
using ::orp::testing::kT;
using ::orp::testing::PathGraph;
using ::orp::testing::Triangle;

TEST(CostTest, SaturatingArithmetic) {
  EXPECT_EQ(C(3) + kInf, kInf);
  EXPECT_LT(C(1e15), kInf);
  EXPECT_EQ(Max(C(2), C(5)), C(5));
  EXPECT_EQ(C(7).ToString(), "7");
  EXPECT_EQ(kInf.ToString(), "inf");
  EXPECT_EQ(C(2.5).ToString(), "2.5");
}

TEST(ParseGraphTest, SingleEdge) {
  const Graph g = ParseGraph("p orp 2 1\ne 1 2 5");
  EXPECT_EQ(g, Graph(2, {{0, 1, C(5)}}));
}

TEST(ParseGraphTest, MultigraphWithComments) {
  const Graph g =
      ParseGraph("c parallel 2-3 edges\np orp 3 4\ne 1 3 4\ne 1 2 1\n"
                 "e 2 3 1\ne 2 3 3\n");
  ASSERT_EQ(g.num_edges(), 4);
  EXPECT_EQ(g.edge(2), (Edge{1, 2, C(1)}));
  EXPECT_EQ(g.edge(3), (Edge{1, 2, C(3)}));
  EXPECT_EQ(g.incident(1).size(), 3u);
}

void ExpectParseError(const std::string& text, std::size_t line,
                      const std::string& fragment) {
  try {
    ParseGraph(text);
    FAIL() << "expected a parse error for: " << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos)
        << e.what();
  }
}

TEST(ParseGraphTest, Errors) {
  ExpectParseError("p orp 2 1\ne 1 2 -1", 2, "negative length at line 2");
  ExpectParseError("p orp 2 1\ne 1 1 3", 2, "self-loop");
  ExpectParseError("p orp 2 1\ne 1 3 3", 2, "endpoint out of range");
  ExpectParseError("p orp two 1\n", 1, "malformed header");
  ExpectParseError("e 1 2 1\n", 1, "edge before header");
  ExpectParseError("p orp 2 1\np orp 2 1\n", 2, "duplicate header");
  ExpectParseError("p orp 2 2\ne 1 2 1\n", 1, "declares 2 edges");
  ExpectParseError("p orp 2 1\ne 1 2 nan\n", 2, "non-finite");
  ExpectParseError("p orp 2 1\ne 1 2 1 9\n", 2, "malformed edge");
}

TEST(WriteGraphTest, RoundTrips) {
  EXPECT_EQ(WriteGraph(Graph(1)), "p orp 1 0\n");
  const Graph tri = Triangle();
  EXPECT_EQ(ParseGraph(WriteGraph(tri)), tri);
  const Instance bad = GenerateBadExample(1, 4);
  const std::string text = WriteGraph(bad.graph);
  EXPECT_EQ(text, "p orp 3 4\ne 1 2 5\ne 1 2 5\ne 1 3 4\ne 3 2 0\n");
  EXPECT_EQ(ParseGraph(text), bad.graph);
  EXPECT_EQ(WriteGraph(ParseGraph(text)), text);
}

TEST(WriteGraphTest, RandomRoundTripIsExact) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Graph g = GenerateRandomGraph({30, 90, 1000, seed, true});
    const std::string text = WriteGraph(g);
    EXPECT_EQ(WriteGraph(ParseGraph(text)), text);
  }
}

TEST(GraphTest, RejectsInvalidEdges) {
  EXPECT_THROW(Graph(2, {{0, 0, C(1)}}), InputError);
  EXPECT_THROW(Graph(2, {{0, 2, C(1)}}), InputError);
  EXPECT_THROW(Graph(2, {{0, 1, C(-1)}}), InputError);
  EXPECT_THROW(Graph(2, {{0, 1, kInf}}), InputError);
}

TEST(EdgeSetTest, SortedUnique) {
  const EdgeSet set({5, 1, 5, 3});
  EXPECT_EQ(set.ids(), (std::vector<EdgeId>{1, 3, 5}));
  EXPECT_TRUE(set.contains(3));
  EXPECT_FALSE(set.contains(2));
  EXPECT_EQ(set.With(2).ids(), (std::vector<EdgeId>{1, 2, 3, 5}));
  EXPECT_LT(EdgeSet({0, 1}), EdgeSet({0, 2}));
  EXPECT_LT(EdgeSet(), EdgeSet({0}));
}

TEST(DijkstraTreeTest, Triangle) {
  const ShortestPathTree tree = DijkstraTree(Triangle(), kT);
  EXPECT_EQ(tree.dstar, (std::vector<Cost>{C(1), C(1), C(0)}));
  EXPECT_EQ(tree.parent_edge[kS], 0);
  EXPECT_EQ(tree.parent_edge[kA], 2);
  EXPECT_EQ(tree.parent_edge[kT], kNoEdge);
}

TEST(DijkstraTreeTest, PathAndDisconnected) {
  const ShortestPathTree tree = DijkstraTree(PathGraph(), kT);
  EXPECT_EQ(tree.dstar[kS], C(2));
  EXPECT_EQ(tree.parent[kS], kA);
  EXPECT_EQ(tree.parent[kA], kT);

  const Graph g(3, {{0, 1, C(2)}});
  const ShortestPathTree split = DijkstraTree(g, 0);
  EXPECT_EQ(split.dstar[2], kInf);
  EXPECT_EQ(split.parent_edge[2], kNoEdge);
  EXPECT_FALSE(split.reaches_dest(2));
}

TEST(DijkstraTreeTest, TieBreaksOnVertexThenEdge) {
  // 0 reaches 3 through 1 or 2 at equal cost; parallel 0-1 edges tie too.
  const Graph g(4, {{2, 3, C(1)}, {1, 3, C(1)}, {0, 2, C(1)}, {0, 1, C(1)},
                    {0, 1, C(1)}});
  const ShortestPathTree tree = DijkstraTree(g, 3);
  EXPECT_EQ(tree.parent[0], 1);
  EXPECT_EQ(tree.parent_edge[0], 3);
}

TEST(DijkstraTreeTest, RemovedEdgesAreSkipped) {
  const ShortestPathTree tree = DijkstraTree(Triangle(), kT, EdgeSet{0});
  EXPECT_EQ(tree.dstar[kS], C(2));
  EXPECT_EQ(tree.parent_edge[kS], 1);
}

// Tree invariants and agreement with the label-correcting oracle.
TEST(DijkstraTreeTest, MatchesOracleOnRandomGraphs) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const Graph g = GenerateRandomGraph({40, 120, seed % 3 == 0 ? 3 : 1000,
                                         seed, seed % 5 != 0});
    const Vertex t = static_cast<Vertex>(seed % 40);
    const ShortestPathTree tree = DijkstraTree(g, t);
    EXPECT_EQ(tree.dstar, oracle::DistancesTo(g, t)) << "seed " << seed;
    EXPECT_EQ(tree.dstar[t], C(0));
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
      if (tree.parent_edge[u] != kNoEdge) {
        EXPECT_EQ(tree.dstar[u], g.length(tree.parent_edge[u]) +
                                     tree.dstar[tree.parent[u]]);
      } else if (u != t) {
        EXPECT_EQ(tree.dstar[u], kInf);
      }
    }
    for (const Edge& e : g.edges()) {
      EXPECT_LE(tree.dstar[e.u], e.length + tree.dstar[e.v]);
      EXPECT_LE(tree.dstar[e.v], e.length + tree.dstar[e.u]);
    }
    const ShortestPathTree again = DijkstraTree(g, t);
    EXPECT_EQ(again.parent_edge, tree.parent_edge);
  }
}

}  // namespace
}  // namespace orp
