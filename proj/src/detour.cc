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

#include "orp/detour.h"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include "orp/disjoint_sets.h"
#include "orp/errors.h"

namespace orp {
namespace {

// c(e) for a candidate edge. Building and loading a table both go through
// here so that reloaded detour values are bit-identical.
Cost EdgeKey(const Graph& g, const std::vector<Cost>& dstar, EdgeId e) {
  const Edge& edge = g.edge(e);
  return dstar[edge.u] + dstar[edge.v] + edge.length;
}

std::vector<Cost> CValuesFor(const Graph& g, const ShortestPathTree& tree) {
  std::vector<Cost> c(g.num_edges(), Cost::Infinity());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (tree.IsTreeEdge(g, e)) continue;
    if (!tree.removed.empty() && tree.removed.contains(e)) continue;
    c[e] = EdgeKey(g, tree.dstar, e);
  }
  return c;
}

// Children of each tree vertex in CSR form, ordered by vertex id.
struct Children {
  std::vector<int> offsets;
  std::vector<Vertex> items;

  explicit Children(const ShortestPathTree& tree) {
    const int n = static_cast<int>(tree.parent.size());
    offsets.assign(n + 1, 0);
    for (Vertex v = 0; v < n; ++v) {
      if (tree.parent[v] != kNoVertex) ++offsets[tree.parent[v] + 1];
    }
    for (int v = 0; v < n; ++v) offsets[v + 1] += offsets[v];
    items.resize(offsets[n]);
    std::vector<int> fill(offsets.begin(), offsets.end() - 1);
    for (Vertex v = 0; v < n; ++v) {
      if (tree.parent[v] != kNoVertex) items[fill[tree.parent[v]]++] = v;
    }
  }
};

}  // namespace

std::vector<Cost> ComputeCValues(const Graph& g, const ShortestPathTree& tree) {
  return CValuesFor(g, tree);
}

std::vector<Vertex> ComputeLcaLabels(const Graph& g,
                                     const ShortestPathTree& tree,
                                     std::span<const EdgeId> edges) {
  const int n = g.num_vertices();
  const int p = static_cast<int>(edges.size());

  // Each query is attached to both endpoints.
  std::vector<int> offsets(n + 1, 0);
  for (EdgeId e : edges) {
    if (!g.IsValidEdge(e)) {
      throw InputError("LCA query for invalid edge " + std::to_string(e));
    }
    const Edge& edge = g.edge(e);
    if (!tree.reaches_dest(edge.u) || !tree.reaches_dest(edge.v)) {
      throw InputError("LCA query for edge " + std::to_string(e) +
                       " with an endpoint outside the tree");
    }
    ++offsets[edge.u + 1];
    ++offsets[edge.v + 1];
  }
  for (int v = 0; v < n; ++v) offsets[v + 1] += offsets[v];
  std::vector<int> query_at(offsets[n]);
  {
    std::vector<int> fill(offsets.begin(), offsets.end() - 1);
    for (int q = 0; q < p; ++q) {
      const Edge& edge = g.edge(edges[q]);
      query_at[fill[edge.u]++] = q;
      query_at[fill[edge.v]++] = q;
    }
  }

  // Offline Tarjan: a post-order walk where finished subtrees are merged
  // into their parent's set.
  const Children children(tree);
  std::vector<Vertex> lca(p, kNoVertex);
  DisjointSets sets(n);
  std::vector<Vertex> ancestor(n, kNoVertex);
  std::vector<char> finished(n, 0);
  // (vertex, index of the next child to descend into)
  std::vector<std::pair<Vertex, int>> stack;
  stack.emplace_back(tree.dest, children.offsets[tree.dest]);
  ancestor[tree.dest] = tree.dest;
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    if (next < children.offsets[v + 1]) {
      const Vertex c = children.items[next++];
      ancestor[c] = c;
      stack.emplace_back(c, children.offsets[c]);
      continue;
    }
    const Vertex done = v;
    stack.pop_back();
    finished[done] = 1;
    for (int i = offsets[done]; i < offsets[done + 1]; ++i) {
      const int q = query_at[i];
      const Edge& edge = g.edge(edges[q]);
      const Vertex other = edge.u == done ? edge.v : edge.u;
      if (finished[other]) lca[q] = ancestor[sets.Find(other)];
    }
    if (!stack.empty()) {
      const Vertex up = stack.back().first;
      ancestor[sets.Union(up, done)] = up;
    }
  }
  return lca;
}

Cost DetourTable::Query(const Graph& g, Vertex v, EdgeId e) const {
  if (!g.IsValidVertex(v)) {
    throw InputError("vertex " + std::to_string(v) + " out of range");
  }
  if (!g.IsIncident(e, v)) {
    throw InputError("edge " + std::to_string(e) + " is not incident to vertex " +
                     std::to_string(v));
  }
  if (!tree_.removed.empty() && tree_.removed.contains(e)) {
    throw InputError("edge " + std::to_string(e) + " is removed in this view");
  }
  return QueryIncident(v, e);
}

DetourTable BuildDetourTable(const Graph& g, ShortestPathTree tree) {
  const int n = g.num_vertices();
  DetourTable table;
  table.cvalue_ = CValuesFor(g, tree);
  table.svalue_.assign(n, Cost::Infinity());
  table.swap_edge_.assign(n, kNoEdge);

  std::vector<std::pair<Cost, EdgeId>> keyed;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (table.cvalue_[e].is_finite()) keyed.emplace_back(table.cvalue_[e], e);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<EdgeId> order(keyed.size());
  for (std::size_t i = 0; i < keyed.size(); ++i) order[i] = keyed[i].second;
  keyed = {};
  // Tree depth, filled parents-first along the settle order.
  std::vector<int> depth(n, 0);
  for (Vertex v : tree.settle_order) {
    if (tree.parent[v] != kNoVertex) depth[v] = depth[tree.parent[v]] + 1;
  }

  // Contracted tree: every vertex maps to its super-vertex through `sets`;
  // top[rep] is the super-vertex's vertex closest to the root, whose tree
  // edge is the super-vertex's (uncontracted) edge upwards.
  DisjointSets sets(n);
  std::vector<Vertex> top(n);
  for (Vertex v = 0; v < n; ++v) top[v] = v;
  int super_vertices = static_cast<int>(tree.settle_order.size());

  // Both endpoints climb until they meet at the super-vertex holding their
  // lowest common ancestor. The side with the deeper top cannot contain
  // that ancestor, so its upward edge is on the cycle closed by e.
  for (std::size_t i = 0; i < order.size() && super_vertices > 1; ++i) {
    const EdgeId e = order[i];
    const Cost c = table.cvalue_[e];
    int a = sets.Find(g.edge(e).u);
    int b = sets.Find(g.edge(e).v);
    while (a != b) {
      if (depth[top[a]] < depth[top[b]]) std::swap(a, b);
      const Vertex u = top[a];
      table.svalue_[u] = c - tree.dstar[u];
      table.swap_edge_[u] = e;
      ++table.contraction_steps_;
      const int upper = sets.Find(tree.parent[u]);
      const Vertex upper_top = top[upper];
      const bool b_is_upper = b == upper;
      a = sets.Union(a, upper);
      top[a] = upper_top;
      if (b_is_upper) b = a;
      --super_vertices;
    }
  }
  table.tree_ = std::move(tree);
  return table;
}

DetourTable BuildDetourTable(const Graph& g, Vertex dest,
                             const EdgeSet& removed) {
  return BuildDetourTable(g, DijkstraTree(g, dest, removed));
}

struct DetourTableIo {
  static void Write(const DetourTable& table, std::ostream& out,
                    std::span<const EdgeId> successor_edges) {
    const int n = table.num_vertices();
    if (!successor_edges.empty() &&
        static_cast<int>(successor_edges.size()) != n) {
      throw InputError("successor column must have one entry per vertex");
    }
    out << "p orptab " << n << ' ' << table.dest() + 1 << '\n';
    for (Vertex v = 0; v < n; ++v) {
      out << table.tree_.parent_edge[v] << ' ' << table.swap_edge_[v];
      if (!successor_edges.empty()) out << ' ' << successor_edges[v];
      out << '\n';
    }
  }

  static LoadedTable Read(const Graph& g, std::istream& in);
};

namespace {

bool ParseIntToken(std::istringstream& line, long long& out) {
  std::string token;
  if (!(line >> token)) return false;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

}  // namespace

LoadedTable DetourTableIo::Read(const Graph& g, std::istream& in) {
  const int n = g.num_vertices();
  std::string line;
  std::size_t line_no = 0;
  long long header_n = 0;
  long long dest = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string kind;
    if (!(tokens >> kind) || kind == "c") continue;
    std::string format;
    if (kind != "p" || !(tokens >> format) || format != "orptab" ||
        !ParseIntToken(tokens, header_n) || !ParseIntToken(tokens, dest) ||
        (tokens >> kind)) {
      throw ParseError(line_no, "malformed table header");
    }
    have_header = true;
    break;
  }
  if (!have_header) throw ParseError(line_no, "missing table header");
  if (header_n != n) {
    throw ParseError(line_no, "table has " + std::to_string(header_n) +
                                  " vertices, graph has " + std::to_string(n));
  }
  if (dest < 1 || dest > n) throw ParseError(line_no, "destination out of range");

  std::vector<EdgeId> parent_edge;
  std::vector<EdgeId> swap_edge;
  std::vector<EdgeId> successor;
  std::vector<std::size_t> record_line;
  int columns = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::vector<std::string> words;
    for (std::string word; tokens >> word;) words.push_back(word);
    if (words.empty() || words[0] == "c") continue;
    std::vector<long long> values;
    for (const std::string& word : words) {
      long long value = 0;
      auto [ptr, ec] =
          std::from_chars(word.data(), word.data() + word.size(), value);
      if (ec != std::errc() || ptr != word.data() + word.size()) {
        throw ParseError(line_no, "malformed table record");
      }
      values.push_back(value);
    }
    if (values.size() != 2 && values.size() != 3) {
      throw ParseError(line_no, "malformed table record");
    }
    if (columns == 0) columns = static_cast<int>(values.size());
    if (static_cast<int>(values.size()) != columns) {
      throw ParseError(line_no, "inconsistent column count");
    }
    for (long long id : values) {
      if (id < -1 || id >= g.num_edges()) {
        throw ParseError(line_no, "edge id out of range");
      }
    }
    if (static_cast<int>(parent_edge.size()) == n) {
      throw ParseError(line_no, "more records than vertices");
    }
    parent_edge.push_back(static_cast<EdgeId>(values[0]));
    swap_edge.push_back(static_cast<EdgeId>(values[1]));
    if (columns == 3) successor.push_back(static_cast<EdgeId>(values[2]));
    record_line.push_back(line_no);
  }
  if (static_cast<int>(parent_edge.size()) != n) {
    throw ParseError(line_no, "expected " + std::to_string(n) +
                                  " records, found " +
                                  std::to_string(parent_edge.size()));
  }

  ShortestPathTree tree;
  tree.dest = static_cast<Vertex>(dest - 1);
  tree.parent_edge = parent_edge;
  tree.parent.assign(n, kNoVertex);
  tree.dstar.assign(n, Cost::Infinity());
  if (parent_edge[tree.dest] != kNoEdge) {
    throw ParseError(record_line[tree.dest], "destination has a parent edge");
  }
  for (Vertex v = 0; v < n; ++v) {
    const EdgeId e = parent_edge[v];
    if (e == kNoEdge) continue;
    if (!g.IsIncident(e, v)) {
      throw ParseError(record_line[v], "parent edge not incident to vertex");
    }
    tree.parent[v] = g.Opposite(e, v);
  }
  // Distances along parent chains, in the same summation order as the
  // shortest path computation.
  tree.dstar[tree.dest] = Cost::Zero();
  std::vector<char> state(n, 0);  // 0 new, 1 on chain, 2 done
  state[tree.dest] = 2;
  std::vector<Vertex> chain;
  for (Vertex start = 0; start < n; ++start) {
    Vertex v = start;
    while (state[v] == 0 && tree.parent[v] != kNoVertex) {
      state[v] = 1;
      chain.push_back(v);
      v = tree.parent[v];
    }
    if (state[v] == 1) {
      throw ParseError(record_line[v], "parent edges contain a cycle");
    }
    // v is done, the destination, or a root without a parent (unreachable).
    state[v] = 2;
    while (!chain.empty()) {
      const Vertex w = chain.back();
      chain.pop_back();
      tree.dstar[w] = tree.dstar[tree.parent[w]] + g.length(parent_edge[w]);
      state[w] = 2;
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (tree.dstar[v].is_finite()) tree.settle_order.push_back(v);
  }
  std::sort(tree.settle_order.begin(), tree.settle_order.end(),
            [&](Vertex a, Vertex b) {
              if (tree.dstar[a] != tree.dstar[b]) {
                return tree.dstar[a] < tree.dstar[b];
              }
              return a < b;
            });

  DetourTable table;
  table.cvalue_ = CValuesFor(g, tree);
  table.svalue_.assign(n, Cost::Infinity());
  table.swap_edge_ = swap_edge;
  for (Vertex v = 0; v < n; ++v) {
    const EdgeId e = swap_edge[v];
    if (e == kNoEdge) continue;
    if (parent_edge[v] == kNoEdge || table.cvalue_[e].is_infinite()) {
      throw ParseError(record_line[v], "swap edge is not a detour edge");
    }
    table.svalue_[v] = table.cvalue_[e] - tree.dstar[v];
  }
  table.tree_ = std::move(tree);

  LoadedTable loaded{std::move(table), std::nullopt};
  if (columns == 3) loaded.successor_edges = std::move(successor);
  return loaded;
}

void WriteDetourTable(const DetourTable& table, std::ostream& out,
                      std::span<const EdgeId> successor_edges) {
  DetourTableIo::Write(table, out, successor_edges);
}

LoadedTable ReadDetourTable(const Graph& g, std::istream& in) {
  return DetourTableIo::Read(g, in);
}

}  // namespace orp
