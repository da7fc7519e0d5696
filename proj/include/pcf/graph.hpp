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
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pcf {

// Vertices and edge ids are dense 0-based integers inside the library. File
// formats shift both to 1-based.
using Vertex = int;
using EdgeId = int;
// Colors are 1-based: 1..k.
using Color = int;

inline constexpr Color kRed = 1;
inline constexpr Color kBlue = 2;
inline constexpr Color kThirdColor = 3;

class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An algorithm was called on an input outside its domain (e.g. a
// non-complete graph handed to the complete-multigraph solver).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exhaustive search refused an instance above its configured size cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A self-check inside an algorithm failed. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Color color = 1;

  Vertex other(Vertex x) const { return x == u ? v : u; }
  bool touches(Vertex x) const { return x == u || x == v; }
};

// Sorted, duplicate-free list of edge ids of some host graph. F, F', N_i, M_i
// and friends are all carried in this form.
using EdgeSubset = std::vector<EdgeId>;

// Vertex sets travel as sorted vectors as well.
using VertexSet = std::vector<Vertex>;

struct GraphDefect {
  EdgeId edge = -1;  // -1 when the defect is not tied to one edge
  std::string message;
};

// Loopless multigraph with an edge coloring c: E -> [k]. Immutable after
// construction; a color class never contains parallel edges, and if the
// simple flag is set no two edges share an endpoint pair at all.
class ColoredMultigraph {
 public:
  ColoredMultigraph() = default;

  ColoredMultigraph(int n, int k, bool simple, std::vector<Edge> edges)
      : n_(n), k_(k), simple_(simple), edges_(std::move(edges)) {
    if (auto defect = find_defect(n_, k_, simple_, edges_)) {
      throw InvalidArgument(defect->message);
    }
    index();
  }

  // First violated invariant, if any. The parser uses this to attach line
  // numbers to errors.
  static std::optional<GraphDefect> find_defect(int n, int k, bool simple,
                                                std::span<const Edge> edges) {
    if (n < 0) return GraphDefect{-1, "negative vertex count"};
    if (k < 1) return GraphDefect{-1, "color count must be at least 1"};
    std::vector<std::vector<std::pair<Vertex, Color>>> seen(
        static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const Edge& e = edges[i];
      const auto id = static_cast<EdgeId>(i);
      if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
        return GraphDefect{id, "vertex out of range"};
      }
      if (e.color < 1 || e.color > k) {
        return GraphDefect{id, "color out of range [1," + std::to_string(k) +
                                   "]"};
      }
      if (e.u == e.v) return GraphDefect{id, "loop edge"};
      const Vertex lo = std::min(e.u, e.v);
      const Vertex hi = std::max(e.u, e.v);
      for (const auto& [w, c] : seen[lo]) {
        if (w != hi) continue;
        if (c == e.color) {
          return GraphDefect{id, "parallel edges in one color class"};
        }
        if (simple) {
          return GraphDefect{id, "parallel edges in a graph declared simple"};
        }
      }
      seen[lo].emplace_back(hi, e.color);
    }
    return std::nullopt;
  }

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_colors() const { return k_; }
  bool declared_simple() const { return simple_; }

  const Edge& edge(EdgeId id) const { return edges_.at(id); }
  std::span<const Edge> edges() const { return edges_; }

  // Incident edge ids of v in ascending order.
  std::span<const EdgeId> incident(Vertex v) const { return incidence_.at(v); }

  bool has_edge_id(EdgeId id) const { return id >= 0 && id < num_edges(); }

  // Structural simplicity: no two edges share an endpoint pair.
  bool is_simple() const { return !has_parallel_; }

  // At least one edge between every pair of distinct vertices.
  bool is_complete() const {
    for (Vertex v = 0; v < n_; ++v) {
      std::vector<char> hit(static_cast<std::size_t>(n_), 0);
      for (EdgeId id : incidence_[v]) hit[edges_[id].other(v)] = 1;
      for (Vertex w = 0; w < n_; ++w) {
        if (w != v && !hit[w]) return false;
      }
    }
    return true;
  }

  // Lowest-id edge between u and v with the given color, if any.
  std::optional<EdgeId> find_edge(Vertex u, Vertex v, Color c) const {
    for (EdgeId id : incidence_.at(u)) {
      const Edge& e = edges_[id];
      if (e.other(u) == v && e.color == c) return id;
    }
    return std::nullopt;
  }

  // All edge ids joining u and v, ascending.
  std::vector<EdgeId> edges_between(Vertex u, Vertex v) const {
    std::vector<EdgeId> out;
    for (EdgeId id : incidence_.at(u)) {
      if (edges_[id].other(u) == v) out.push_back(id);
    }
    return out;
  }

  friend bool operator==(const ColoredMultigraph& a,
                         const ColoredMultigraph& b) {
    if (a.n_ != b.n_ || a.k_ != b.k_ || a.simple_ != b.simple_ ||
        a.edges_.size() != b.edges_.size()) {
      return false;
    }
    for (std::size_t i = 0; i < a.edges_.size(); ++i) {
      const Edge& x = a.edges_[i];
      const Edge& y = b.edges_[i];
      if (x.u != y.u || x.v != y.v || x.color != y.color) return false;
    }
    return true;
  }

 private:
  void index() {
    incidence_.assign(static_cast<std::size_t>(n_), {});
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      incidence_[edges_[i].u].push_back(static_cast<EdgeId>(i));
      incidence_[edges_[i].v].push_back(static_cast<EdgeId>(i));
    }
    has_parallel_ = false;
    for (Vertex v = 0; v < n_ && !has_parallel_; ++v) {
      std::vector<char> hit(static_cast<std::size_t>(n_), 0);
      for (EdgeId id : incidence_[v]) {
        const Vertex w = edges_[id].other(v);
        if (hit[w]) {
          has_parallel_ = true;
          break;
        }
        hit[w] = 1;
      }
    }
  }

  int n_ = 0;
  int k_ = 1;
  bool simple_ = false;
  bool has_parallel_ = false;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
};

// Uncolored simple graph. `origin[i]` names whatever edge edges[i] stands for
// in the caller's world (a host edge id, an arc id, ...).
struct SimpleGraph {
  int n = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<EdgeId> origin;

  int num_edges() const { return static_cast<int>(edges.size()); }

  void add_edge(Vertex u, Vertex v, EdgeId from) {
    edges.emplace_back(u, v);
    origin.push_back(from);
  }
};

// Loopless directed graph without repeated arcs.
struct Digraph {
  int n = 0;
  std::vector<std::pair<Vertex, Vertex>> arcs;
};

// Sorts and deduplicates-checks an edge id list against its host graph.
inline EdgeSubset make_edge_subset(const ColoredMultigraph& g,
                                   std::vector<EdgeId> ids) {
  std::sort(ids.begin(), ids.end());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (!g.has_edge_id(ids[i])) {
      throw InvalidArgument("unknown edge id " + std::to_string(ids[i]));
    }
    if (i > 0 && ids[i] == ids[i - 1]) {
      throw InvalidArgument("duplicate edge id " + std::to_string(ids[i]));
    }
  }
  return ids;
}

inline void check_edge_subset(const ColoredMultigraph& g,
                              std::span<const EdgeId> ids) {
  std::vector<char> seen(static_cast<std::size_t>(g.num_edges()), 0);
  for (EdgeId id : ids) {
    if (!g.has_edge_id(id)) {
      throw InvalidArgument("unknown edge id " + std::to_string(id));
    }
    if (seen[id]) {
      throw InvalidArgument("duplicate edge id " + std::to_string(id));
    }
    seen[id] = 1;
  }
}

// The subgraph (V, E_i) as an uncolored simple graph; origin holds host ids.
inline SimpleGraph color_class(const ColoredMultigraph& g, Color i) {
  if (i < 1 || i > g.num_colors()) {
    throw InvalidArgument("color " + std::to_string(i) + " out of range");
  }
  SimpleGraph h;
  h.n = g.num_vertices();
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    const Edge& e = g.edge(id);
    if (e.color == i) h.add_edge(e.u, e.v, id);
  }
  return h;
}

// Restriction of `g` to the listed edges, as one simple graph per color.
inline std::vector<SimpleGraph> color_classes(const ColoredMultigraph& g,
                                              std::span<const EdgeId> ids) {
  std::vector<SimpleGraph> out(static_cast<std::size_t>(g.num_colors()));
  for (auto& h : out) h.n = g.num_vertices();
  for (EdgeId id : ids) {
    const Edge& e = g.edge(id);
    out[e.color - 1].add_edge(e.u, e.v, id);
  }
  return out;
}

inline std::vector<SimpleGraph> color_classes(const ColoredMultigraph& g) {
  std::vector<EdgeId> all(static_cast<std::size_t>(g.num_edges()));
  for (EdgeId id = 0; id < g.num_edges(); ++id) all[id] = id;
  return color_classes(g, all);
}

// Induced subgraph G[U]; `host_edge[i]` is the id in `g` of new edge i and
// `host_vertex[j]` the vertex of `g` that became j.
struct InducedSubgraph {
  ColoredMultigraph graph;
  std::vector<Vertex> host_vertex;
  std::vector<EdgeId> host_edge;

  EdgeSubset to_host(std::span<const EdgeId> ids) const {
    EdgeSubset out;
    out.reserve(ids.size());
    for (EdgeId id : ids) out.push_back(host_edge.at(id));
    std::sort(out.begin(), out.end());
    return out;
  }
};

inline InducedSubgraph induced_subgraph(const ColoredMultigraph& g,
                                        std::span<const Vertex> vertices) {
  std::vector<int> local(static_cast<std::size_t>(g.num_vertices()), -1);
  InducedSubgraph out;
  for (Vertex v : vertices) {
    if (v < 0 || v >= g.num_vertices()) {
      throw InvalidArgument("vertex out of range");
    }
    if (local[v] >= 0) throw InvalidArgument("duplicate vertex");
    local[v] = static_cast<int>(out.host_vertex.size());
    out.host_vertex.push_back(v);
  }
  std::vector<Edge> edges;
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    const Edge& e = g.edge(id);
    if (local[e.u] >= 0 && local[e.v] >= 0) {
      edges.push_back({local[e.u], local[e.v], e.color});
      out.host_edge.push_back(id);
    }
  }
  out.graph = ColoredMultigraph(static_cast<int>(out.host_vertex.size()),
                                g.num_colors(), g.declared_simple(),
                                std::move(edges));
  return out;
}

}  // namespace pcf
