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

// Max-PT approximation for complete multigraphs. The vertex partition is
// injected through PartitionOracle; the default one is exhaustive.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "pcf/forest.hpp"
#include "pcf/graph.hpp"
#include "pcf/matching.hpp"
#include "pcf/oracle.hpp"
#include "pcf/solvers.hpp"

namespace pcf {

using Rational = boost::rational<std::int64_t>;

// (eps^2 + 9 eps + 18) / eps^2.
inline Rational n_eps(const Rational& eps) {
  if (eps <= 0) throw InvalidArgument("eps must be positive");
  return (eps * eps + 9 * eps + 18) / (eps * eps);
}

inline bool exact_branch(int n, const Rational& eps) {
  return Rational(n) < n_eps(eps);
}

// Parses "p", "p/q" or a finite decimal such as "0.5".
inline Rational parse_rational(const std::string& text) {
  auto digits = [&](const std::string& s) {
    if (s.empty() || s.size() > 15 ||
        !std::all_of(s.begin(), s.end(), [](char c) {
          return c >= '0' && c <= '9';
        })) {
      throw InvalidArgument("not a rational: '" + text + "'");
    }
    return static_cast<std::int64_t>(std::stoll(s));
  };
  if (const auto slash = text.find('/'); slash != std::string::npos) {
    const auto den = digits(text.substr(slash + 1));
    if (den == 0) throw InvalidArgument("zero denominator in '" + text + "'");
    return Rational(digits(text.substr(0, slash)), den);
  }
  if (const auto dot = text.find('.'); dot != std::string::npos) {
    const std::string frac = text.substr(dot + 1);
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const std::string whole = dot == 0 ? "0" : text.substr(0, dot);
    return Rational(digits(whole) * scale + digits(frac), scale);
  }
  return Rational(digits(text));
}

struct PrunedGraph {
  ColoredMultigraph graph;
  std::vector<EdgeId> host_edge;
};

// Keeps the n lowest-id edges of every vertex pair.
inline PrunedGraph prune_parallel_mapped(const ColoredMultigraph& g) {
  const int n = g.num_vertices();
  std::map<std::pair<Vertex, Vertex>, int> count;
  PrunedGraph out;
  std::vector<Edge> edges;
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    const Edge& e = g.edge(id);
    const auto key = std::minmax(e.u, e.v);
    if (++count[key] > n) continue;
    edges.push_back(e);
    out.host_edge.push_back(id);
  }
  out.graph = ColoredMultigraph(n, g.num_colors(), g.declared_simple(),
                                std::move(edges));
  return out;
}

inline ColoredMultigraph prune_parallel(const ColoredMultigraph& g) {
  return prune_parallel_mapped(g).graph;
}

struct VertexPartition {
  VertexSet v1;
  VertexSet v2;
  EdgeSubset f1;  // properly colored spanning tree of G[V1]
  EdgeSubset f2;  // maximum properly colored tree of G[V2]
};

using PartitionOracle =
    std::function<VertexPartition(const ColoredMultigraph&)>;

inline constexpr int kExhaustivePartitionLimit = 9;

namespace internal {

inline OracleResult best_tree_on(const ColoredMultigraph& g,
                                 std::span<const Vertex> vs) {
  const auto sub = induced_subgraph(g, vs);
  OracleResult r =
      brute_maxpt(sub.graph, std::numeric_limits<int>::max());
  r.witness = sub.to_host(r.witness);
  return r;
}

}  // namespace internal

// Checks the oracle contract; throws InvalidArgument on a violation.
inline void check_partition(const ColoredMultigraph& g,
                            const VertexPartition& p) {
  std::vector<int> side(static_cast<std::size_t>(g.num_vertices()), 0);
  for (Vertex v : p.v1) {
    if (v < 0 || v >= g.num_vertices() || side[v]) {
      throw InvalidArgument("partition: bad vertex in V1");
    }
    side[v] = 1;
  }
  for (Vertex v : p.v2) {
    if (v < 0 || v >= g.num_vertices() || side[v]) {
      throw InvalidArgument("partition: bad vertex in V2");
    }
    side[v] = 2;
  }
  if (std::count(side.begin(), side.end(), 0) != 0) {
    throw InvalidArgument("partition does not cover every vertex");
  }
  auto inside = [&](const EdgeSubset& f, int s) {
    for (EdgeId id : f) {
      if (!g.has_edge_id(id) || side[g.edge(id).u] != s ||
          side[g.edge(id).v] != s) {
        return false;
      }
    }
    return true;
  };
  if (!inside(p.f1, 1) || !verify_pc_tree(g, p.f1).valid() ||
      p.f1.size() + 1 != std::max<std::size_t>(p.v1.size(), 1)) {
    throw InvalidArgument("partition: F1 is not a spanning tree of G[V1]");
  }
  if (!inside(p.f2, 2) || !verify_pc_tree(g, p.f2).valid()) {
    throw InvalidArgument("partition: F2 is not a tree of G[V2]");
  }
}

// V1: the largest vertex set (then smallest bitmask) whose induced graph has
// a properly colored spanning tree; F2 by exhaustive search on the rest.
inline VertexPartition exhaustive_partition(const ColoredMultigraph& g) {
  const int n = g.num_vertices();
  if (n > kExhaustivePartitionLimit) {
    throw PreconditionError("exhaustive partition oracle is limited to n <= " +
                            std::to_string(kExhaustivePartitionLimit));
  }
  std::vector<std::uint32_t> masks;
  for (std::uint32_t m = 0; m < (1u << n); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::uint32_t a, std::uint32_t b) {
                     return __builtin_popcount(a) > __builtin_popcount(b);
                   });
  for (std::uint32_t mask : masks) {
    VertexSet v1;
    VertexSet v2;
    for (Vertex v = 0; v < n; ++v) (mask >> v & 1u ? v1 : v2).push_back(v);
    const OracleResult t1 = internal::best_tree_on(g, v1);
    if (t1.optimum + 1 != std::max<int>(static_cast<int>(v1.size()), 1)) {
      continue;
    }
    VertexPartition p;
    p.v1 = std::move(v1);
    p.v2 = std::move(v2);
    p.f1 = t1.witness;
    p.f2 = internal::best_tree_on(g, p.v2).witness;
    return p;
  }
  throw InternalError("no vertex set has a spanning tree");
}

struct BipartiteH {
  // S side: (vertex of V1, color missing at it in F1).
  std::vector<std::pair<Vertex, Color>> s;
  // T side: vertices of V2.
  std::vector<Vertex> t;
  // Vertex i < |S| is s[i]; vertex |S| + j is t[j]. origin = host edge id.
  SimpleGraph graph;
};

inline BipartiteH build_bipartite_H(const ColoredMultigraph& g,
                                    std::span<const Vertex> v1,
                                    std::span<const Vertex> v2,
                                    std::span<const EdgeId> f1) {
  const auto verdict = verify_pc_forest(g, f1);
  if (!verdict.valid()) {
    throw InvalidArgument("F1 is not properly colored: " + verdict.describe());
  }
  const int n = g.num_vertices();
  const int k = g.num_colors();
  std::vector<std::vector<char>> taken(
      static_cast<std::size_t>(n),
      std::vector<char>(static_cast<std::size_t>(k) + 1, 0));
  for (EdgeId id : f1) {
    taken[g.edge(id).u][g.edge(id).color] = 1;
    taken[g.edge(id).v][g.edge(id).color] = 1;
  }
  BipartiteH h;
  std::vector<std::vector<int>> s_index(
      static_cast<std::size_t>(n),
      std::vector<int>(static_cast<std::size_t>(k) + 1, -1));
  for (Vertex v : v1) {
    for (Color c = 1; c <= k; ++c) {
      if (taken[v][c]) continue;
      s_index[v][c] = static_cast<int>(h.s.size());
      h.s.emplace_back(v, c);
    }
  }
  std::vector<int> t_index(static_cast<std::size_t>(n), -1);
  for (Vertex u : v2) {
    t_index[u] = static_cast<int>(h.t.size());
    h.t.push_back(u);
  }
  h.graph.n = static_cast<int>(h.s.size() + h.t.size());
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    const Edge& e = g.edge(id);
    for (auto [v, u] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      if (t_index[u] < 0 || s_index[v][e.color] < 0) continue;
      h.graph.add_edge(s_index[v][e.color],
                       static_cast<int>(h.s.size()) + t_index[u], id);
    }
  }
  return h;
}

inline EdgeSubset forest_from_H_matching(const BipartiteH& h,
                                         std::span<const int> matching) {
  if (!is_matching(h.graph, matching)) {
    throw InvalidArgument("not a matching of H");
  }
  EdgeSubset out;
  for (int i : matching) out.push_back(h.graph.origin[i]);
  std::sort(out.begin(), out.end());
  return out;
}

// Approximation for a given partition: F1 + F12 or F2, whichever is larger
// (ties to F1 + F12).
inline SolveReport approximate_maxpt(const ColoredMultigraph& g,
                                     const VertexPartition& p) {
  check_partition(g, p);
  SolveReport report;
  report.algorithm = "maxpt";
  if (p.v1.empty()) {
    report.forest = p.f2;
  } else if (p.v2.empty()) {
    report.forest = p.f1;
  } else {
    const BipartiteH h = build_bipartite_H(g, p.v1, p.v2, p.f1);
    const EdgeSubset f12 = forest_from_H_matching(h, max_matching(h.graph));
    if (p.f1.size() + f12.size() >= p.f2.size()) {
      report.forest = p.f1;
      report.forest.insert(report.forest.end(), f12.begin(), f12.end());
    } else {
      report.forest = p.f2;
    }
  }
  std::sort(report.forest.begin(), report.forest.end());
  report.size = static_cast<int>(report.forest.size());
  const auto verdict = verify_pc_tree(g, report.forest);
  if (!verdict.valid()) {
    throw InternalError("maxpt produced an invalid tree: " +
                        verdict.describe());
  }
  return report;
}

inline SolveReport solve_maxpt(const ColoredMultigraph& g, const Rational& eps,
                               const PartitionOracle& oracle =
                                   exhaustive_partition) {
  if (eps <= 0) throw InvalidArgument("eps must be positive");
  if (!g.is_complete()) {
    throw PreconditionError("maxpt needs a complete multigraph");
  }
  const PrunedGraph pruned = prune_parallel_mapped(g);
  SolveReport inner;
  if (exact_branch(g.num_vertices(), eps)) {
    inner.algorithm = "maxpt";
    inner.forest =
        brute_maxpt(pruned.graph, std::numeric_limits<int>::max()).witness;
  } else {
    inner = approximate_maxpt(pruned.graph, oracle(pruned.graph));
  }
  SolveReport report;
  report.algorithm = "maxpt";
  for (EdgeId id : inner.forest) report.forest.push_back(pruned.host_edge[id]);
  std::sort(report.forest.begin(), report.forest.end());
  report.size = static_cast<int>(report.forest.size());
  report.upper_bounds = upper_bounds(g, max_coverable_set(g));
  const auto verdict = verify_pc_tree(g, report.forest);
  if (!verdict.valid()) {
    throw InternalError("maxpt produced an invalid tree: " +
                        verdict.describe());
  }
  return report;
}

}  // namespace pcf
