// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pcf/graph.hpp"

namespace pcf {

class DisjointSets {
 public:
  explicit DisjointSets(int n = 0) { reset(n); }

  void reset(int n) {
    parent_.resize(static_cast<std::size_t>(n));
    std::iota(parent_.begin(), parent_.end(), 0);
    size_.assign(static_cast<std::size_t>(n), 1);
    history_.clear();
  }

  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  // Union by size without path compression, so that `rollback` can undo
  // merges in LIFO order.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    history_.push_back(b);
    return true;
  }

  bool same(int a, int b) const { return find(a) == find(b); }

  std::size_t checkpoint() const { return history_.size(); }

  void rollback(std::size_t mark) {
    while (history_.size() > mark) {
      const int b = history_.back();
      history_.pop_back();
      const int a = parent_[b];
      size_[a] -= size_[b];
      parent_[b] = b;
    }
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> history_;
};

using ComponentPartition = std::vector<VertexSet>;

// comp(F): vertex sets of the components of (V(F), F), each sorted, listed by
// smallest vertex. Vertices without an F-edge are left out.
inline ComponentPartition components(const ColoredMultigraph& g,
                                     std::span<const EdgeId> f) {
  check_edge_subset(g, f);
  const int n = g.num_vertices();
  DisjointSets dsu(n);
  std::vector<char> touched(static_cast<std::size_t>(n), 0);
  for (EdgeId id : f) {
    const Edge& e = g.edge(id);
    dsu.unite(e.u, e.v);
    touched[e.u] = touched[e.v] = 1;
  }
  std::vector<int> slot(static_cast<std::size_t>(n), -1);
  ComponentPartition out;
  for (Vertex v = 0; v < n; ++v) {
    if (!touched[v]) continue;
    const int r = dsu.find(v);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[r]].push_back(v);
  }
  return out;
}

// Vertices covered by F, ascending.
inline VertexSet covered_vertices(const ColoredMultigraph& g,
                                  std::span<const EdgeId> f) {
  std::vector<char> hit(static_cast<std::size_t>(g.num_vertices()), 0);
  for (EdgeId id : f) {
    hit[g.edge(id).u] = 1;
    hit[g.edge(id).v] = 1;
  }
  VertexSet out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (hit[v]) out.push_back(v);
  }
  return out;
}

enum class PcStatus { kValid, kNotForest, kNotProperlyColored, kNotConnected };

inline const char* to_string(PcStatus s) {
  switch (s) {
    case PcStatus::kValid:
      return "valid";
    case PcStatus::kNotForest:
      return "not-forest";
    case PcStatus::kNotProperlyColored:
      return "not-properly-colored";
    case PcStatus::kNotConnected:
      return "not-connected";
  }
  return "?";
}

struct PcVerdict {
  PcStatus status = PcStatus::kValid;
  // kNotForest: the edges of one cycle. kNotProperlyColored: the two
  // conflicting edges. Empty otherwise.
  std::vector<EdgeId> witness;
  // Shared vertex for a color conflict, -1 otherwise.
  Vertex vertex = -1;

  bool valid() const { return status == PcStatus::kValid; }

  std::string describe() const {
    std::string s = to_string(status);
    if (vertex >= 0) s += " at vertex " + std::to_string(vertex + 1);
    if (!witness.empty()) {
      s += " (edges";
      for (EdgeId id : witness) s += " " + std::to_string(id + 1);
      s += ")";
    }
    return s;
  }
};

namespace internal {

// Edge ids of the F-path from `from` to `to`, given F-adjacency.
inline std::vector<EdgeId> forest_path(
    const ColoredMultigraph& g,
    const std::vector<std::vector<EdgeId>>& adj, Vertex from, Vertex to) {
  std::vector<EdgeId> via(adj.size(), -1);
  std::vector<char> seen(adj.size(), 0);
  std::deque<Vertex> queue{from};
  seen[from] = 1;
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    if (x == to) break;
    for (EdgeId id : adj[x]) {
      const Vertex y = g.edge(id).other(x);
      if (seen[y]) continue;
      seen[y] = 1;
      via[y] = id;
      queue.push_back(y);
    }
  }
  std::vector<EdgeId> path;
  for (Vertex x = to; x != from;) {
    const EdgeId id = via[x];
    if (id < 0) throw InternalError("forest_path: endpoints not connected");
    path.push_back(id);
    x = g.edge(id).other(x);
  }
  return path;
}

}  // namespace internal

// Acyclicity is checked first (two parallel edges count as a cycle), proper
// coloring second. Edges are scanned in ascending id order.
inline PcVerdict verify_pc_forest(const ColoredMultigraph& g,
                                  std::span<const EdgeId> f) {
  check_edge_subset(g, f);
  std::vector<EdgeId> sorted(f.begin(), f.end());
  std::sort(sorted.begin(), sorted.end());
  const int n = g.num_vertices();

  DisjointSets dsu(n);
  std::vector<std::vector<EdgeId>> adj(static_cast<std::size_t>(n));
  for (EdgeId id : sorted) {
    const Edge& e = g.edge(id);
    if (!dsu.unite(e.u, e.v)) {
      PcVerdict out{PcStatus::kNotForest, {}, -1};
      out.witness = internal::forest_path(g, adj, e.u, e.v);
      out.witness.push_back(id);
      std::sort(out.witness.begin(), out.witness.end());
      return out;
    }
    adj[e.u].push_back(id);
    adj[e.v].push_back(id);
  }

  for (Vertex v = 0; v < n; ++v) {
    for (std::size_t a = 0; a < adj[v].size(); ++a) {
      for (std::size_t b = a + 1; b < adj[v].size(); ++b) {
        if (g.edge(adj[v][a]).color == g.edge(adj[v][b]).color) {
          return PcVerdict{PcStatus::kNotProperlyColored,
                           {adj[v][a], adj[v][b]},
                           v};
        }
      }
    }
  }
  return {};
}

// verify_pc_forest plus connectivity. The empty set is a tree.
inline PcVerdict verify_pc_tree(const ColoredMultigraph& g,
                                std::span<const EdgeId> f) {
  PcVerdict out = verify_pc_forest(g, f);
  if (!out.valid()) return out;
  if (components(g, f).size() > 1) out.status = PcStatus::kNotConnected;
  return out;
}

inline bool is_pc_forest(const ColoredMultigraph& g,
                         std::span<const EdgeId> f) {
  return verify_pc_forest(g, f).valid();
}

// Kruskal by ascending edge id: keeps an edge iff it joins two different
// trees, i.e. drops the highest-id edge of every cycle.
inline EdgeSubset spanning_forest(const ColoredMultigraph& g,
                                  std::span<const EdgeId> f) {
  std::vector<EdgeId> sorted(f.begin(), f.end());
  std::sort(sorted.begin(), sorted.end());
  DisjointSets dsu(g.num_vertices());
  EdgeSubset out;
  for (EdgeId id : sorted) {
    if (dsu.unite(g.edge(id).u, g.edge(id).v)) out.push_back(id);
  }
  return out;
}

// F[X]: the edges of F with both ends in X.
inline EdgeSubset induced_edges(const ColoredMultigraph& g,
                                std::span<const EdgeId> f,
                                const std::vector<char>& in_x) {
  EdgeSubset out;
  for (EdgeId id : f) {
    if (in_x[g.edge(id).u] && in_x[g.edge(id).v]) out.push_back(id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<char> membership(int n, std::span<const Vertex> xs) {
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  for (Vertex v : xs) in.at(v) = 1;
  return in;
}

}  // namespace pcf
