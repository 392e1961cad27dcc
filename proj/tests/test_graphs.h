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

// Small hand-checkable instances shared by the unit tests.

#ifndef ORP_TESTS_TEST_GRAPHS_H_
#define ORP_TESTS_TEST_GRAPHS_H_

#include <cstdint>

#include "orp/cost.h"
#include "orp/graph.h"

namespace orp::testing {

inline Cost C(double v) { return Cost(v); }
inline const Cost kInf = Cost::Infinity();

// Triangle s=0, a=1, t=2 with unit edges st=0, sa=1, at=2.
inline constexpr Vertex kS = 0;
inline constexpr Vertex kA = 1;
inline constexpr Vertex kT = 2;
inline Graph Triangle() {
  return Graph(3, {{kS, kT, C(1)}, {kS, kA, C(1)}, {kA, kT, C(1)}});
}

// Path s=0 - a=1 - t=2, edges sa=0, at=1.
inline Graph PathGraph() { return Graph(3, {{kS, kA, C(1)}, {kA, kT, C(1)}}); }

// st(4)=0, sa(1)=1, at(1)=2, at'(3)=3.
inline Graph FourEdge() {
  return Graph(3, {{kS, kT, C(4)}, {kS, kA, C(1)}, {kA, kT, C(1)},
                   {kA, kT, C(3)}});
}

// Parallel s=0 - t=1 edges with the given lengths.
inline Graph Parallel(std::initializer_list<double> lengths) {
  std::vector<Edge> edges;
  for (double l : lengths) edges.push_back({0, 1, C(l)});
  return Graph(2, std::move(edges));
}

}  // namespace orp::testing

#endif  // ORP_TESTS_TEST_GRAPHS_H_
