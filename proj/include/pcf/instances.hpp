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

// Seeded generators and reduction constructions. Colors: red = 1,
// blue = 2, third = 3.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pcf/forest.hpp"
#include "pcf/graph.hpp"

namespace pcf {

using Rng = std::mt19937_64;

// Uniform integer in [0, bound). Rejection sampling on the raw engine output
// keeps sequences identical across standard libraries.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound == 0) throw InvalidArgument("uniform_below: empty range");
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

inline int uniform_int(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(
                  uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

namespace internal {

// Picks `count` distinct values of [0, total) in random order.
inline std::vector<std::uint64_t> sample_distinct(Rng& rng,
                                                  std::uint64_t total,
                                                  std::uint64_t count) {
  std::vector<std::uint64_t> pool(total);
  std::iota(pool.begin(), pool.end(), 0);
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint64_t j = i + uniform_below(rng, total - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(count);
  return pool;
}

inline std::pair<Vertex, Vertex> pair_of(std::uint64_t index, int n) {
  // Lexicographic enumeration of u < v.
  Vertex u = 0;
  std::uint64_t row = static_cast<std::uint64_t>(n - 1);
  while (index >= row) {
    index -= row;
    ++u;
    --row;
  }
  return {u, u + 1 + static_cast<Vertex>(index)};
}

}  // namespace internal

// Uniform random graph with m distinct (pair, color) slots; if `simple`, m
// distinct pairs with a uniform color each.
inline ColoredMultigraph gen_random(int n, int m, int k, bool simple,
                                    std::uint64_t seed) {
  if (n < 0 || m < 0 || k < 1) throw InvalidArgument("gen_random: bad sizes");
  const std::uint64_t pairs =
      static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1) / 2;
  const std::uint64_t slots = simple ? pairs : pairs * k;
  if (static_cast<std::uint64_t>(m) > slots) {
    throw InvalidArgument("gen_random: " + std::to_string(m) +
                          " edges do not fit (at most " +
                          std::to_string(slots) + ")");
  }
  Rng rng(seed);
  std::vector<Edge> edges;
  for (std::uint64_t s : internal::sample_distinct(rng, slots, m)) {
    Color c;
    std::uint64_t p;
    if (simple) {
      p = s;
      c = static_cast<Color>(1 + uniform_below(rng, k));
    } else {
      p = s / k;
      c = static_cast<Color>(1 + s % k);
    }
    const auto [u, v] = internal::pair_of(p, n);
    edges.push_back({u, v, c});
  }
  return ColoredMultigraph(n, k, simple, std::move(edges));
}

// Complete multigraph: every pair gets one uniform color, then `extra`
// further (pair, color) slots are added at random.
inline ColoredMultigraph gen_complete(int n, int k, int extra,
                                      std::uint64_t seed) {
  if (n < 0 || k < 1 || extra < 0) {
    throw InvalidArgument("gen_complete: bad sizes");
  }
  Rng rng(seed);
  const std::uint64_t pairs =
      static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1) / 2;
  std::vector<Edge> edges;
  std::vector<char> taken(pairs * k, 0);
  for (std::uint64_t p = 0; p < pairs; ++p) {
    const auto [u, v] = internal::pair_of(p, n);
    const Color c = static_cast<Color>(1 + uniform_below(rng, k));
    taken[p * k + (c - 1)] = 1;
    edges.push_back({u, v, c});
  }
  std::vector<std::uint64_t> free_slots;
  for (std::uint64_t s = 0; s < taken.size(); ++s) {
    if (!taken[s]) free_slots.push_back(s);
  }
  const std::uint64_t count =
      std::min<std::uint64_t>(static_cast<std::uint64_t>(extra),
                              free_slots.size());
  for (std::uint64_t i :
       internal::sample_distinct(rng, free_slots.size(), count)) {
    const std::uint64_t s = free_slots[i];
    const auto [u, v] = internal::pair_of(s / k, n);
    edges.push_back({u, v, static_cast<Color>(1 + s % k)});
  }
  return ColoredMultigraph(n, k, count == 0, std::move(edges));
}

inline SimpleGraph gen_simple_graph(int n, int m, std::uint64_t seed) {
  const auto g = gen_random(n, m, 1, true, seed);
  SimpleGraph h;
  h.n = n;
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    h.add_edge(g.edge(id).u, g.edge(id).v, id);
  }
  return h;
}

inline Digraph gen_digraph(int n, int m, std::uint64_t seed) {
  const std::uint64_t slots =
      static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1);
  if (n < 0 || m < 0 || static_cast<std::uint64_t>(m) > slots) {
    throw InvalidArgument("gen_digraph: " + std::to_string(m) +
                          " arcs do not fit");
  }
  Rng rng(seed);
  Digraph d;
  d.n = n;
  for (std::uint64_t s : internal::sample_distinct(rng, slots, m)) {
    const Vertex u = static_cast<Vertex>(s / (n - 1));
    Vertex v = static_cast<Vertex>(s % (n - 1));
    if (v >= u) ++v;
    d.arcs.emplace_back(u, v);
  }
  return d;
}

// Random maximal properly colored forest: edges tried in a shuffled order.
inline EdgeSubset random_pc_forest(const ColoredMultigraph& g,
                                   std::uint64_t seed) {
  Rng rng(seed);
  std::vector<EdgeId> order(static_cast<std::size_t>(g.num_edges()));
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = order.size(); i > 1; --i) {
    std::swap(order[i - 1], order[uniform_below(rng, i)]);
  }
  DisjointSets dsu(g.num_vertices());
  std::vector<std::vector<char>> used(
      static_cast<std::size_t>(g.num_vertices()),
      std::vector<char>(static_cast<std::size_t>(g.num_colors()) + 1, 0));
  EdgeSubset out;
  for (EdgeId id : order) {
    const Edge& e = g.edge(id);
    if (used[e.u][e.color] || used[e.v][e.color]) continue;
    if (!dsu.unite(e.u, e.v)) continue;
    used[e.u][e.color] = used[e.v][e.color] = 1;
    out.push_back(id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// The component of a random forest through a random vertex; always a
// properly colored tree (possibly empty).
inline EdgeSubset random_pc_tree(const ColoredMultigraph& g,
                                 std::uint64_t seed) {
  const EdgeSubset f = random_pc_forest(g, seed);
  if (g.num_vertices() == 0) return {};
  Rng rng(seed ^ 0x5bd1e995ULL);
  const Vertex root =
      static_cast<Vertex>(uniform_below(rng, g.num_vertices()));
  DisjointSets dsu(g.num_vertices());
  for (EdgeId id : f) dsu.unite(g.edge(id).u, g.edge(id).v);
  EdgeSubset out;
  for (EdgeId id : f) {
    if (dsu.same(g.edge(id).u, root)) out.push_back(id);
  }
  return out;
}

// Forward instance plus backward solution map. OPT(target) =
// opt_scale * OPT(source) + opt_offset.
struct ReductionMap {
  std::string family;
  std::string source_problem;  // "max-lf", "max-pf" or "longest-path"
  std::string target_problem;  // "max-pf" or "max-pt"
  ColoredMultigraph target;
  // Source edge (or arc) behind each target edge; -1 for gadget edges.
  std::vector<EdgeId> source_edge;
  std::function<EdgeSubset(std::span<const EdgeId>)> backward;
  int opt_scale = 1;
  int opt_offset = 0;
};

namespace internal {

inline void require_simple(const SimpleGraph& h) {
  std::vector<std::pair<Vertex, Vertex>> seen;
  for (auto [u, v] : h.edges) {
    if (u < 0 || v < 0 || u >= h.n || v >= h.n) {
      throw PreconditionError("source graph: vertex out of range");
    }
    if (u == v) throw PreconditionError("source graph has a loop");
    seen.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw PreconditionError("source graph is not simple");
  }
}

inline void require_pc_forest(const ColoredMultigraph& g,
                              std::span<const EdgeId> f) {
  const auto verdict = verify_pc_forest(g, f);
  if (!verdict.valid()) {
    throw InvalidArgument("target solution is not a properly colored "
                          "forest: " + verdict.describe());
  }
}

}  // namespace internal

// Max-LF on G to Max-PF on a 2-colored simple graph over 3n vertices:
// v'_i = i (red copy), v''_i = n + i (blue copy), u_i = 2n + i.
inline ReductionMap reduce_lf_to_pcf2(const SimpleGraph& g) {
  internal::require_simple(g);
  const int n = g.n;
  const int m = g.num_edges();
  std::vector<Edge> edges;
  std::vector<EdgeId> source;
  for (int s = 0; s < m; ++s) {
    edges.push_back({g.edges[s].first, g.edges[s].second, kRed});
    source.push_back(s);
  }
  for (int s = 0; s < m; ++s) {
    edges.push_back({n + g.edges[s].first, n + g.edges[s].second, kBlue});
    source.push_back(s);
  }
  for (int i = 0; i < n; ++i) {
    edges.push_back({i, 2 * n + i, kBlue});
    source.push_back(-1);
    edges.push_back({2 * n + i, n + i, kRed});
    source.push_back(-1);
  }
  ReductionMap map;
  map.family = "lf2pcf";
  map.source_problem = "max-lf";
  map.target_problem = "max-pf";
  map.target = ColoredMultigraph(3 * n, 2, true, std::move(edges));
  map.source_edge = source;
  map.opt_scale = 1;
  map.opt_offset = 2 * n;
  const ColoredMultigraph target = map.target;
  map.backward = [target, source, n, m](std::span<const EdgeId> f) {
    internal::require_pc_forest(target, f);
    std::vector<char> in(static_cast<std::size_t>(target.num_edges()), 0);
    for (EdgeId id : f) in[id] = 1;
    auto current = [&] {
      EdgeSubset ids;
      for (EdgeId id = 0; id < target.num_edges(); ++id) {
        if (in[id]) ids.push_back(id);
      }
      return ids;
    };
    // Insert each connector; a closed cycle loses its other edge at the
    // copy vertex, which is never a connector.
    for (int i = 0; i < n; ++i) {
      for (int side = 0; side < 2; ++side) {
        const EdgeId conn = 2 * m + 2 * i + side;
        if (in[conn]) continue;
        const Vertex copy = side == 0 ? i : n + i;
        const Vertex hub = 2 * n + i;
        const EdgeSubset f_now = current();
        std::vector<std::vector<EdgeId>> adj(
            static_cast<std::size_t>(target.num_vertices()));
        DisjointSets dsu(target.num_vertices());
        for (EdgeId id : f_now) {
          adj[target.edge(id).u].push_back(id);
          adj[target.edge(id).v].push_back(id);
          dsu.unite(target.edge(id).u, target.edge(id).v);
        }
        if (dsu.same(copy, hub)) {
          const auto path = internal::forest_path(target, adj, copy, hub);
          EdgeId drop = -1;
          for (EdgeId id : path) {
            if (target.edge(id).touches(copy)) drop = id;
          }
          if (drop < 0 || source[drop] < 0) {
            throw InternalError("lf2pcf backward: no droppable cycle edge");
          }
          in[drop] = 0;
        }
        in[conn] = 1;
      }
    }
    const EdgeSubset full = current();
    internal::require_pc_forest(target, full);
    EdgeSubset out;
    for (EdgeId id : full) {
      if (source[id] >= 0) out.push_back(source[id]);
    }
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
      throw InternalError("lf2pcf backward: both copies of an edge survived");
    }
    return out;
  };
  return map;
}

// Max-PF on a 2-colored simple graph to Max-PF on a 3-colored complete
// simple graph over 2n vertices. Original edges keep their ids.
inline ReductionMap reduce_pcf2_to_pcf3_complete(const ColoredMultigraph& g) {
  if (g.num_colors() != 2) {
    throw PreconditionError("pcf3complete: source must be 2-colored");
  }
  if (!g.is_simple()) {
    throw PreconditionError("pcf3complete: source must be simple");
  }
  const int n = g.num_vertices();
  const int m = g.num_edges();
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  std::vector<EdgeId> source(static_cast<std::size_t>(m));
  std::iota(source.begin(), source.end(), 0);
  std::vector<std::vector<char>> adjacent(
      static_cast<std::size_t>(2 * n),
      std::vector<char>(static_cast<std::size_t>(2 * n), 0));
  for (const Edge& e : g.edges()) adjacent[e.u][e.v] = adjacent[e.v][e.u] = 1;
  for (Vertex a = 0; a < 2 * n; ++a) {
    for (Vertex b = a + 1; b < 2 * n; ++b) {
      if (adjacent[a][b]) continue;
      edges.push_back({a, b, kThirdColor});
      source.push_back(-1);
    }
  }
  ReductionMap map;
  map.family = "pcf3complete";
  map.source_problem = "max-pf";
  map.target_problem = "max-pf";
  map.target = ColoredMultigraph(2 * n, 3, true, std::move(edges));
  map.source_edge = source;
  map.opt_scale = 1;
  map.opt_offset = n;
  const ColoredMultigraph target = map.target;
  map.backward = [target, m](std::span<const EdgeId> f) {
    internal::require_pc_forest(target, f);
    EdgeSubset out;
    for (EdgeId id : f) {
      if (id < m) out.push_back(id);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  return map;
}

// Longest directed path in D to Max-PT on a 2-colored graph over 2n
// vertices: in_i = i, out_i = n + i, red in_i out_i, blue out_i in_j per arc.
inline ReductionMap reduce_digraph_to_maxpt2(const Digraph& d) {
  const int n = d.n;
  std::vector<std::pair<Vertex, Vertex>> seen;
  for (auto [u, v] : d.arcs) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InvalidArgument("digraph: vertex out of range");
    }
    if (u == v) throw InvalidArgument("digraph: loop arc");
    seen.emplace_back(u, v);
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw InvalidArgument("digraph: repeated arc");
  }
  std::vector<Edge> edges;
  std::vector<EdgeId> source;
  for (int i = 0; i < n; ++i) {
    edges.push_back({i, n + i, kRed});
    source.push_back(-1);
  }
  for (int a = 0; a < static_cast<int>(d.arcs.size()); ++a) {
    edges.push_back({n + d.arcs[a].first, d.arcs[a].second, kBlue});
    source.push_back(a);
  }
  ReductionMap map;
  map.family = "lp2maxpt";
  map.source_problem = "longest-path";
  map.target_problem = "max-pt";
  map.target = ColoredMultigraph(2 * n, 2, true, std::move(edges));
  map.source_edge = source;
  map.opt_scale = 2;
  map.opt_offset = 1;
  const ColoredMultigraph target = map.target;
  const Digraph digraph = d;
  map.backward = [target, source, digraph](std::span<const EdgeId> f) {
    const auto verdict = verify_pc_tree(target, f);
    if (!verdict.valid()) {
      throw InvalidArgument("target solution is not a properly colored "
                            "tree: " + verdict.describe());
    }
    // Contracting the red gadget edges leaves a directed path, or a directed
    // cycle when both halves of one gadget end the tree.
    EdgeSubset arcs;
    for (EdgeId id : f) {
      if (source[id] >= 0) arcs.push_back(source[id]);
    }
    std::sort(arcs.begin(), arcs.end());
    std::vector<char> touched(static_cast<std::size_t>(digraph.n), 0);
    for (EdgeId a : arcs) {
      touched[digraph.arcs[a].first] = touched[digraph.arcs[a].second] = 1;
    }
    const auto vertices = std::count(touched.begin(), touched.end(), 1);
    if (!arcs.empty() && vertices == static_cast<long>(arcs.size())) {
      arcs.pop_back();
    }
    // Check: in/out degrees at most one and no cycle.
    std::vector<int> indeg(static_cast<std::size_t>(digraph.n), 0);
    std::vector<int> outdeg(static_cast<std::size_t>(digraph.n), 0);
    DisjointSets dsu(digraph.n);
    for (EdgeId a : arcs) {
      const auto [u, v] = digraph.arcs[a];
      if (++outdeg[u] > 1 || ++indeg[v] > 1 || !dsu.unite(u, v)) {
        throw InternalError("lp2maxpt backward: result is not a path");
      }
    }
    return arcs;
  };
  return map;
}

// Doubles every edge of G into a red and a blue copy: target edge 2s and
// 2s+1 both stand for source edge s.
inline ReductionMap gen_tsp12_doubling(const SimpleGraph& g) {
  internal::require_simple(g);
  std::vector<Edge> edges;
  std::vector<EdgeId> source;
  for (int s = 0; s < g.num_edges(); ++s) {
    edges.push_back({g.edges[s].first, g.edges[s].second, kRed});
    edges.push_back({g.edges[s].first, g.edges[s].second, kBlue});
    source.push_back(s);
    source.push_back(s);
  }
  ReductionMap map;
  map.family = "tsp12";
  map.source_problem = "max-lf";
  map.target_problem = "max-pf";
  map.target = ColoredMultigraph(g.n, 2, false, std::move(edges));
  map.source_edge = source;
  map.opt_scale = 1;
  map.opt_offset = 0;
  const ColoredMultigraph target = map.target;
  map.backward = [target](std::span<const EdgeId> f) {
    internal::require_pc_forest(target, f);
    EdgeSubset out;
    for (EdgeId id : f) out.push_back(id / 2);
    std::sort(out.begin(), out.end());
    return out;
  };
  return map;
}

// Is `ids` (local edge indices of h) a linear forest?
inline bool is_linear_forest(const SimpleGraph& h, std::span<const EdgeId> ids) {
  std::vector<int> degree(static_cast<std::size_t>(h.n), 0);
  DisjointSets dsu(h.n);
  std::vector<char> seen(static_cast<std::size_t>(h.num_edges()), 0);
  for (EdgeId id : ids) {
    if (id < 0 || id >= h.num_edges() || seen[id]) return false;
    seen[id] = 1;
    const auto [u, v] = h.edges[id];
    if (++degree[u] > 2 || ++degree[v] > 2 || !dsu.unite(u, v)) return false;
  }
  return true;
}

// Is `arcs` the arc set of one simple directed path (or empty)?
inline bool is_directed_path(const Digraph& d, std::span<const EdgeId> arcs) {
  std::vector<int> indeg(static_cast<std::size_t>(d.n), 0);
  std::vector<int> outdeg(static_cast<std::size_t>(d.n), 0);
  DisjointSets dsu(d.n);
  for (EdgeId a : arcs) {
    if (a < 0 || a >= static_cast<int>(d.arcs.size())) return false;
    const auto [u, v] = d.arcs[a];
    if (++outdeg[u] > 1 || ++indeg[v] > 1 || !dsu.unite(u, v)) return false;
  }
  // One weak component.
  if (arcs.empty()) return true;
  const int root = dsu.find(d.arcs[arcs[0]].first);
  for (EdgeId a : arcs) {
    if (dsu.find(d.arcs[a].first) != root) return false;
  }
  return true;
}

}  // namespace pcf
