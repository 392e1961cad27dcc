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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <istream>
#include <limits>
#include <ostream>
#include <queue>
#include <sstream>
#include <string_view>
#include <tuple>
#include <utility>

#include "orp/errors.h"

namespace orp {

std::string Cost::ToString() const {
  if (is_infinite()) return "inf";
  constexpr double kExactIntegerLimit = 9007199254740992.0;  // 2^53
  if (value_ == std::floor(value_) && std::fabs(value_) < kExactIntegerLimit) {
    return std::to_string(static_cast<std::int64_t>(value_));
  }
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value_);
  return std::string(buffer, end);
}

Graph::Graph(int num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
  if (num_vertices < 0) throw InputError("negative vertex count");
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    Edge& e = edges_[i];
    const std::string where = "edge " + std::to_string(i);
    if (!IsValidVertex(e.u) || !IsValidVertex(e.v)) {
      throw InputError(where + ": endpoint out of range");
    }
    if (e.u == e.v) throw InputError(where + ": self-loop");
    if (!(e.length >= Cost::Zero()) || e.length.is_infinite()) {
      throw InputError(where + ": length must be finite and nonnegative");
    }
    // Normalizes -0.0.
    e.length = e.length + Cost::Zero();
  }

  std::vector<std::int64_t> degree(num_vertices_ + 1, 0);
  for (const Edge& e : edges_) {
    ++degree[e.u + 1];
    ++degree[e.v + 1];
  }
  offsets_.assign(num_vertices_ + 1, 0);
  for (int v = 0; v < num_vertices_; ++v) {
    offsets_[v + 1] = offsets_[v] + degree[v + 1];
  }
  incidences_.resize(2 * edges_.size());
  std::vector<std::int64_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId id = 0; id < num_edges(); ++id) {
    const Edge& e = edges_[id];
    incidences_[fill[e.u]++] = {id, e.v, e.length};
    incidences_[fill[e.v]++] = {id, e.u, e.length};
  }
}

EdgeSet::EdgeSet(std::vector<EdgeId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool EdgeSet::contains(EdgeId e) const {
  return std::binary_search(ids_.begin(), ids_.end(), e);
}

EdgeSet EdgeSet::With(EdgeId e) const {
  EdgeSet result = *this;
  auto it = std::lower_bound(result.ids_.begin(), result.ids_.end(), e);
  if (it == result.ids_.end() || *it != e) result.ids_.insert(it, e);
  return result;
}

ShortestPathTree DijkstraTree(const Graph& g, Vertex dest,
                              const EdgeSet& removed) {
  if (!g.IsValidVertex(dest)) {
    throw InputError("destination " + std::to_string(dest) + " out of range");
  }
  for (EdgeId e : removed) {
    if (!g.IsValidEdge(e)) {
      throw InputError("removed edge " + std::to_string(e) + " out of range");
    }
  }
  const int n = g.num_vertices();
  ShortestPathTree tree;
  tree.dest = dest;
  tree.removed = removed;
  tree.parent_edge.assign(n, kNoEdge);
  tree.parent.assign(n, kNoVertex);
  tree.dstar.assign(n, Cost::Infinity());
  tree.settle_order.reserve(n);

  const bool filtered = !removed.empty();
  std::vector<char> settled(n, 0);
  using Entry = std::pair<Cost, Vertex>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  tree.dstar[dest] = Cost::Zero();
  heap.emplace(Cost::Zero(), dest);
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    ++tree.heap_pops;
    if (settled[u] || d != tree.dstar[u]) continue;
    settled[u] = 1;
    tree.settle_order.push_back(u);
    for (const Incidence& inc : g.incident(u)) {
      const Vertex v = inc.other;
      if (settled[v]) continue;
      if (filtered && removed.contains(inc.edge)) continue;
      const Cost candidate = d + inc.length;
      if (candidate < tree.dstar[v]) {
        tree.dstar[v] = candidate;
        tree.parent[v] = u;
        tree.parent_edge[v] = inc.edge;
        heap.emplace(candidate, v);
      } else if (candidate == tree.dstar[v] &&
                 std::tie(u, inc.edge) <
                     std::tie(tree.parent[v], tree.parent_edge[v])) {
        tree.parent[v] = u;
        tree.parent_edge[v] = inc.edge;
      }
    }
  }
  return tree;
}

namespace {

// Splits on blanks.
std::vector<std::string_view> Tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r')) {
      ++i;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
           line[i] != '\r') {
      ++i;
    }
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

bool ParseInt(std::string_view token, long long& out) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(),
                                   out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

bool ParseDouble(std::string_view token, double& out) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(),
                                   out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

}  // namespace

Graph ParseGraph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  long long n = 0;
  long long m = 0;
  std::size_t header_line = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    const std::vector<std::string_view> tokens = Tokenize(line);
    if (tokens.empty() || tokens[0] == "c") continue;
    if (tokens[0] == "p") {
      if (have_header) throw ParseError(line_no, "duplicate header");
      if (tokens.size() != 4 || tokens[1] != "orp" || !ParseInt(tokens[2], n) ||
          !ParseInt(tokens[3], m) || n < 1 || m < 0 ||
          n > std::numeric_limits<Vertex>::max() ||
          m > std::numeric_limits<EdgeId>::max()) {
        throw ParseError(line_no, "malformed header");
      }
      have_header = true;
      header_line = line_no;
      edges.reserve(m);
      continue;
    }
    if (tokens[0] == "e") {
      if (!have_header) throw ParseError(line_no, "edge before header");
      long long u = 0;
      long long v = 0;
      double length = 0;
      if (tokens.size() != 4 || !ParseInt(tokens[1], u) ||
          !ParseInt(tokens[2], v) || !ParseDouble(tokens[3], length)) {
        throw ParseError(line_no, "malformed edge line");
      }
      if (u < 1 || u > n || v < 1 || v > n) {
        throw ParseError(line_no, "endpoint out of range");
      }
      if (u == v) throw ParseError(line_no, "self-loop");
      if (std::isnan(length) || std::isinf(length)) {
        throw ParseError(line_no, "non-finite length");
      }
      if (length < 0) throw ParseError(line_no, "negative length");
      if (static_cast<long long>(edges.size()) >= m) {
        throw ParseError(line_no, "more edges than declared in header");
      }
      edges.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1),
                       Cost(length)});
      continue;
    }
    throw ParseError(line_no, "unknown line type '" + std::string(tokens[0]) +
                                  "'");
  }
  if (!have_header) throw ParseError(line_no, "missing header");
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError(header_line, "header declares " + std::to_string(m) +
                                      " edges but " +
                                      std::to_string(edges.size()) +
                                      " were given");
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

Graph ParseGraph(const std::string& text) {
  std::istringstream in(text);
  return ParseGraph(in);
}

void WriteGraph(const Graph& g, std::ostream& out) {
  out << "p orp " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) {
    out << "e " << e.u + 1 << ' ' << e.v + 1 << ' ' << e.length.ToString()
        << '\n';
  }
}

std::string WriteGraph(const Graph& g) {
  std::ostringstream out;
  WriteGraph(g, out);
  return out.str();
}

}  // namespace orp
