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

// Exhaustive solvers. They share no code with the matching or matroid
// modules so that they can serve as ground truth for both.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pcf/forest.hpp"
#include "pcf/graph.hpp"

namespace pcf {

struct OracleResult {
  int optimum = 0;
  EdgeSubset witness;
  std::uint64_t explored = 0;
};

inline constexpr int kDefaultOracleCap = 24;
inline constexpr int kDefaultTreeOracleCap = 96;

namespace internal {

inline void check_cap(int m, int cap, const char* what) {
  if (m > cap) {
    throw CapExceeded(std::string(what) + ": " + std::to_string(m) +
                      " edges exceed the cap of " + std::to_string(cap));
  }
}

// Number of components of (V, edges) counting only non-isolated structure:
// n minus the size of a spanning forest.
inline int spanning_forest_size(int n, std::span<const Edge> edges) {
  DisjointSets dsu(n);
  int size = 0;
  for (const Edge& e : edges) size += dsu.unite(e.u, e.v) ? 1 : 0;
  return size;
}

// Include/exclude search over edges in id order with branch and bound.
class ForestSearch {
 public:
  explicit ForestSearch(const ColoredMultigraph& g)
      : g_(g),
        n_(g.num_vertices()),
        m_(g.num_edges()),
        k_(g.num_colors()),
        used_(static_cast<std::size_t>(n_) * k_, 0),
        dsu_(n_) {}

  OracleResult run() {
    // Global bound: a spanning forest of G, and per color a matching on the
    // vertices that color touches.
    int color_bound = 0;
    for (Color c = 1; c <= k_; ++c) {
      std::vector<char> touch(static_cast<std::size_t>(n_), 0);
      for (const Edge& e : g_.edges()) {
        if (e.color == c) touch[e.u] = touch[e.v] = 1;
      }
      color_bound += static_cast<int>(
          std::count(touch.begin(), touch.end(), 1) / 2);
    }
    limit_ = std::min(spanning_forest_size(n_, g_.edges()), color_bound);
    dfs(0);
    OracleResult out;
    out.optimum = static_cast<int>(best_.size());
    out.witness = best_;
    out.explored = explored_;
    return out;
  }

 private:
  char& used(Vertex v, Color c) {
    return used_[static_cast<std::size_t>(v) * k_ + (c - 1)];
  }

  int bound(int i) {
    const int s = static_cast<int>(chosen_.size());
    int b = m_ - i;
    if (s + b <= static_cast<int>(best_.size())) return b;
    // Per color: endpoints still free for that color, paired up.
    std::vector<int> count(static_cast<std::size_t>(k_), 0);
    std::vector<char> mark(static_cast<std::size_t>(n_) * k_, 0);
    for (int j = i; j < m_; ++j) {
      const Edge& e = g_.edge(j);
      if (used(e.u, e.color) || used(e.v, e.color)) continue;
      for (Vertex x : {e.u, e.v}) {
        auto& slot = mark[static_cast<std::size_t>(x) * k_ + (e.color - 1)];
        if (!slot) {
          slot = 1;
          ++count[e.color - 1];
        }
      }
    }
    int cb = 0;
    for (int c : count) cb += c / 2;
    b = std::min(b, cb);
    // Forest: edges that can still join two current components.
    DisjointSets tmp = dsu_;
    int fb = 0;
    for (int j = i; j < m_; ++j) {
      const Edge& e = g_.edge(j);
      if (used(e.u, e.color) || used(e.v, e.color)) continue;
      fb += tmp.unite(e.u, e.v) ? 1 : 0;
    }
    return std::min(b, fb);
  }

  bool dfs(int i) {
    ++explored_;
    if (chosen_.size() > best_.size()) best_ = chosen_;
    if (static_cast<int>(best_.size()) >= limit_) return true;
    if (i == m_) return false;
    if (static_cast<int>(chosen_.size()) + bound(i) <=
        static_cast<int>(best_.size())) {
      return false;
    }
    const Edge& e = g_.edge(i);
    if (!used(e.u, e.color) && !used(e.v, e.color)) {
      const auto mark = dsu_.checkpoint();
      if (dsu_.unite(e.u, e.v)) {
        used(e.u, e.color) = used(e.v, e.color) = 1;
        chosen_.push_back(i);
        const bool done = dfs(i + 1);
        chosen_.pop_back();
        used(e.u, e.color) = used(e.v, e.color) = 0;
        dsu_.rollback(mark);
        if (done) return true;
      }
    }
    return dfs(i + 1);
  }

  const ColoredMultigraph& g_;
  int n_;
  int m_;
  int k_;
  std::vector<char> used_;
  DisjointSets dsu_;
  EdgeSubset chosen_;
  EdgeSubset best_;
  int limit_ = 0;
  std::uint64_t explored_ = 0;
};

// Grows trees from a root r over vertices > r. At each node the lowest-id
// usable frontier edge is either taken or banned.
class TreeSearch {
 public:
  explicit TreeSearch(const ColoredMultigraph& g)
      : g_(g),
        n_(g.num_vertices()),
        k_(g.num_colors()),
        used_(static_cast<std::size_t>(n_) * k_, 0),
        in_tree_(static_cast<std::size_t>(n_), 0),
        banned_(static_cast<std::size_t>(g.num_edges()), 0) {}

  OracleResult run() {
    DisjointSets dsu(n_);
    for (const Edge& e : g_.edges()) dsu.unite(e.u, e.v);
    std::vector<int> size(static_cast<std::size_t>(n_), 0);
    for (Vertex v = 0; v < n_; ++v) ++size[dsu.find(v)];
    limit_ = 0;
    for (int s : size) limit_ = std::max(limit_, s - 1);
    for (root_ = 0; root_ < n_ && !done_; ++root_) {
      in_tree_[root_] = 1;
      tree_.assign(1, root_);
      dfs();
      in_tree_[root_] = 0;
    }
    OracleResult out;
    out.optimum = static_cast<int>(best_.size());
    out.witness = best_;
    std::sort(out.witness.begin(), out.witness.end());
    out.explored = explored_;
    return out;
  }

 private:
  bool used(Vertex v, Color c) const {
    return used_[static_cast<std::size_t>(v) * k_ + (c - 1)] != 0;
  }
  void set_used(Vertex v, Color c, bool on) {
    used_[static_cast<std::size_t>(v) * k_ + (c - 1)] = on ? 1 : 0;
  }

  // Lowest-id edge from the tree to a new vertex > root whose color is free
  // at its tree end.
  EdgeId next_edge() const {
    EdgeId best = -1;
    for (Vertex x : tree_) {
      for (EdgeId id : g_.incident(x)) {
        if (best >= 0 && id >= best) break;
        if (banned_[id]) continue;
        const Edge& e = g_.edge(id);
        const Vertex y = e.other(x);
        if (in_tree_[y] || y < root_ || used(x, e.color)) continue;
        best = id;
        break;
      }
    }
    return best;
  }

  // Vertices > root reachable from the tree through edges not banned.
  int reachable() const {
    std::vector<char> seen(in_tree_);
    std::vector<Vertex> stack(tree_);
    int count = 0;
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (EdgeId id : g_.incident(x)) {
        if (banned_[id]) continue;
        const Vertex y = g_.edge(id).other(x);
        if (seen[y] || y < root_) continue;
        seen[y] = 1;
        ++count;
        stack.push_back(y);
      }
    }
    return count;
  }

  void dfs() {
    ++explored_;
    if (chosen_.size() > best_.size()) best_ = chosen_;
    if (static_cast<int>(best_.size()) >= limit_) {
      done_ = true;
      return;
    }
    if (static_cast<int>(chosen_.size()) + reachable() <=
        static_cast<int>(best_.size())) {
      return;
    }
    const EdgeId id = next_edge();
    if (id < 0) return;
    const Edge& e = g_.edge(id);
    const Vertex y = in_tree_[e.u] ? e.v : e.u;
    const Vertex x = e.other(y);

    set_used(x, e.color, true);
    set_used(y, e.color, true);
    in_tree_[y] = 1;
    tree_.push_back(y);
    chosen_.push_back(id);
    dfs();
    chosen_.pop_back();
    tree_.pop_back();
    in_tree_[y] = 0;
    set_used(x, e.color, false);
    set_used(y, e.color, false);
    if (done_) return;

    banned_[id] = 1;
    dfs();
    banned_[id] = 0;
  }

  const ColoredMultigraph& g_;
  int n_;
  int k_;
  std::vector<char> used_;
  std::vector<char> in_tree_;
  std::vector<char> banned_;
  std::vector<Vertex> tree_;
  Vertex root_ = 0;
  EdgeSubset chosen_;
  EdgeSubset best_;
  int limit_ = 0;
  bool done_ = false;
  std::uint64_t explored_ = 0;
};

}  // namespace internal

// Maximum properly colored forest by branch and bound over edge subsets.
inline OracleResult brute_maxpf(const ColoredMultigraph& g,
                                int cap = kDefaultOracleCap) {
  internal::check_cap(g.num_edges(), cap, "brute_maxpf");
  return internal::ForestSearch(g).run();
}

// Plain enumeration of all 2^m subsets; the second, independent strategy.
inline OracleResult brute_maxpf_bitmask(const ColoredMultigraph& g,
                                        int cap = 20) {
  internal::check_cap(g.num_edges(), std::min(cap, 30), "brute_maxpf_bitmask");
  const int m = g.num_edges();
  const int n = g.num_vertices();
  const int k = g.num_colors();
  OracleResult out;
  std::vector<char> used(static_cast<std::size_t>(n) * k);
  DisjointSets dsu(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    const int size = __builtin_popcountll(mask);
    ++out.explored;
    if (mask != 0 && size <= out.optimum) continue;
    std::fill(used.begin(), used.end(), 0);
    bool ok = true;
    for (int i = 0; i < m && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      const Edge& e = g.edge(i);
      for (Vertex x : {e.u, e.v}) {
        auto& slot = used[static_cast<std::size_t>(x) * k + (e.color - 1)];
        if (slot) ok = false;
        slot = 1;
      }
    }
    if (!ok) continue;
    dsu.reset(n);
    for (int i = 0; i < m && ok; ++i) {
      if (mask >> i & 1) ok = dsu.unite(g.edge(i).u, g.edge(i).v);
    }
    if (!ok) continue;
    out.optimum = size;
    out.witness.clear();
    for (int i = 0; i < m; ++i) {
      if (mask >> i & 1) out.witness.push_back(i);
    }
  }
  return out;
}

// Exact optimum of G[U]; the witness uses host edge ids.
inline OracleResult brute_opt_restricted(const ColoredMultigraph& g,
                                         std::span<const Vertex> u,
                                         int cap = kDefaultOracleCap) {
  const auto sub = induced_subgraph(g, u);
  OracleResult out = brute_maxpf(sub.graph, cap);
  out.witness = sub.to_host(out.witness);
  return out;
}

// Maximum properly colored tree (connected, not necessarily spanning).
inline OracleResult brute_maxpt(const ColoredMultigraph& g,
                                int cap = kDefaultTreeOracleCap) {
  internal::check_cap(g.num_edges(), cap, "brute_maxpt");
  return internal::TreeSearch(g).run();
}

// Maximum linear forest (acyclic, degree <= 2) of an uncolored simple graph.
// Witness holds local edge indices.
inline OracleResult brute_max_linear_forest(const SimpleGraph& h,
                                            int cap = kDefaultOracleCap) {
  internal::check_cap(h.num_edges(), cap, "brute_max_linear_forest");
  OracleResult out;
  std::vector<int> degree(static_cast<std::size_t>(h.n), 0);
  DisjointSets dsu(h.n);
  EdgeSubset chosen;
  const int m = h.num_edges();
  const int limit = std::max(0, h.n - 1);
  std::function<bool(int)> rec = [&](int i) -> bool {
    ++out.explored;
    if (static_cast<int>(chosen.size()) > out.optimum) {
      out.optimum = static_cast<int>(chosen.size());
      out.witness = chosen;
    }
    if (out.optimum >= limit) return true;
    if (i == m || static_cast<int>(chosen.size()) + (m - i) <= out.optimum) {
      return false;
    }
    const auto [u, v] = h.edges[i];
    if (degree[u] < 2 && degree[v] < 2) {
      const auto mark = dsu.checkpoint();
      if (dsu.unite(u, v)) {
        ++degree[u];
        ++degree[v];
        chosen.push_back(i);
        const bool done = rec(i + 1);
        chosen.pop_back();
        --degree[u];
        --degree[v];
        dsu.rollback(mark);
        if (done) return true;
      }
    }
    return rec(i + 1);
  };
  rec(0);
  return out;
}

// Longest simple directed path, counted in arcs. Witness holds arc indices
// in path order.
inline OracleResult brute_longest_path(const Digraph& d, int cap = 64) {
  internal::check_cap(static_cast<int>(d.arcs.size()), cap,
                      "brute_longest_path");
  std::vector<std::vector<std::pair<Vertex, int>>> out_arcs(
      static_cast<std::size_t>(d.n));
  for (int a = 0; a < static_cast<int>(d.arcs.size()); ++a) {
    out_arcs[d.arcs[a].first].push_back({d.arcs[a].second, a});
  }
  OracleResult out;
  std::vector<char> on_path(static_cast<std::size_t>(d.n), 0);
  EdgeSubset path;
  std::function<void(Vertex)> rec = [&](Vertex x) {
    ++out.explored;
    if (static_cast<int>(path.size()) > out.optimum) {
      out.optimum = static_cast<int>(path.size());
      out.witness = path;
    }
    for (auto [y, a] : out_arcs[x]) {
      if (on_path[y]) continue;
      on_path[y] = 1;
      path.push_back(a);
      rec(y);
      path.pop_back();
      on_path[y] = 0;
    }
  };
  for (Vertex s = 0; s < d.n; ++s) {
    on_path[s] = 1;
    rec(s);
    on_path[s] = 0;
  }
  return out;
}

}  // namespace pcf
