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

// Max-PF solvers: the exact merge algorithm for 2-colored complete
// multigraphs, the local-improvement approximation for arbitrary multigraphs
// and the union-of-matchings algorithm for simple graphs.

#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pcf/forest.hpp"
#include "pcf/graph.hpp"
#include "pcf/matching.hpp"
#include "pcf/matroid_union.hpp"

namespace pcf {

struct UpperBound {
  std::string name;
  int value = 0;
};

struct SolveReport {
  std::string algorithm;
  EdgeSubset forest;
  int size = 0;
  std::vector<UpperBound> upper_bounds;
  // Restarts of the improvement loop (general solver only).
  int iterations = 0;
  // |U_s| + |comp(F)| at each pass through the loop head.
  std::vector<int> potentials;
  // F at each pass through the loop head.
  std::vector<EdgeSubset> snapshots;

  int best_upper_bound() const {
    int best = std::numeric_limits<int>::max();
    for (const auto& b : upper_bounds) best = std::min(best, b.value);
    return best;
  }
};

// Sum over colors of the maximum matching size of the color class.
inline int upper_bound_matchings(const ColoredMultigraph& g) {
  int total = 0;
  for (const auto& h : color_classes(g)) {
    total += static_cast<int>(max_matching(h).size());
  }
  return total;
}

inline std::vector<UpperBound> upper_bounds(const ColoredMultigraph& g,
                                            const CoverCertificate& cert) {
  return {
      {"sum-of-max-matchings", upper_bound_matchings(g)},
      {"coverable-minus-one",
       std::max(0, static_cast<int>(cert.u.size()) - 1)},
  };
}

namespace internal {

inline EdgeSubset union_of(const std::vector<EdgeSubset>& parts) {
  EdgeSubset out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline void finish(const ColoredMultigraph& g, SolveReport& report) {
  std::sort(report.forest.begin(), report.forest.end());
  report.size = static_cast<int>(report.forest.size());
  const auto verdict = verify_pc_forest(g, report.forest);
  if (!verdict.valid()) {
    throw InternalError(report.algorithm + " produced an invalid forest: " +
                        verdict.describe());
  }
  if (report.size > report.best_upper_bound()) {
    throw InternalError(report.algorithm + " exceeded an upper bound");
  }
}

// A properly colored path or cycle as parallel vertex and edge sequences.
// For a path, edges[i] joins vertices[i] and vertices[i+1]; for a cycle the
// last edge closes back to vertices[0].
struct Walk {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;
};

// Orders a connected edge set with all degrees <= 2, starting at `start`
// and leaving through `first`.
inline Walk trace(const ColoredMultigraph& g, std::span<const EdgeId> ids,
                  Vertex start, EdgeId first) {
  std::vector<char> used(static_cast<std::size_t>(g.num_edges()), 0);
  std::vector<char> in(static_cast<std::size_t>(g.num_edges()), 0);
  for (EdgeId id : ids) in[id] = 1;
  Walk w;
  w.vertices.push_back(start);
  EdgeId next = first;
  Vertex at = start;
  while (next >= 0) {
    used[next] = 1;
    w.edges.push_back(next);
    at = g.edge(next).other(at);
    next = -1;
    w.vertices.push_back(at);
    for (EdgeId id : g.incident(at)) {
      if (in[id] && !used[id]) {
        next = id;
        break;
      }
    }
  }
  // A closed walk ends where it began.
  if (w.vertices.size() > 1 && w.vertices.back() == start) {
    w.vertices.pop_back();
  }
  if (w.edges.size() != ids.size()) {
    throw InvalidArgument("edge set is not connected");
  }
  return w;
}

inline std::vector<int> degrees(const ColoredMultigraph& g,
                                std::span<const EdgeId> ids) {
  std::vector<int> deg(static_cast<std::size_t>(g.num_vertices()), 0);
  for (EdgeId id : ids) {
    ++deg[g.edge(id).u];
    ++deg[g.edge(id).v];
  }
  return deg;
}

inline bool alternates(const ColoredMultigraph& g, const Walk& w,
                       bool closed) {
  for (std::size_t i = 0; i + 1 < w.edges.size(); ++i) {
    if (g.edge(w.edges[i]).color == g.edge(w.edges[i + 1]).color) return false;
  }
  if (closed && w.edges.size() >= 2 &&
      g.edge(w.edges.front()).color == g.edge(w.edges.back()).color) {
    return false;
  }
  return true;
}

inline Walk as_path(const ColoredMultigraph& g, std::span<const EdgeId> ids,
                    Vertex lone) {
  check_edge_subset(g, ids);
  if (ids.empty()) {
    if (lone < 0 || lone >= g.num_vertices()) {
      throw InvalidArgument("an empty path needs its single vertex");
    }
    return Walk{{lone}, {}};
  }
  const auto deg = degrees(g, ids);
  Vertex start = -1;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (deg[v] > 2) throw InvalidArgument("path has a vertex of degree > 2");
    if (deg[v] == 1 && start < 0) start = v;
  }
  if (start < 0) throw InvalidArgument("path edges form a cycle");
  EdgeId first = -1;
  for (EdgeId id : g.incident(start)) {
    if (std::find(ids.begin(), ids.end(), id) != ids.end()) first = id;
  }
  Walk w = trace(g, ids, start, first);
  if (w.vertices.size() != w.edges.size() + 1) {
    throw InvalidArgument("path edges are not a simple path");
  }
  if (!alternates(g, w, false)) {
    throw InvalidArgument("path is not properly colored");
  }
  return w;
}

inline Walk as_cycle(const ColoredMultigraph& g, std::span<const EdgeId> ids) {
  check_edge_subset(g, ids);
  if (ids.size() < 2) throw InvalidArgument("a cycle needs two edges");
  const auto deg = degrees(g, ids);
  Vertex start = -1;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (deg[v] != 0 && deg[v] != 2) {
      throw InvalidArgument("cycle has a vertex of degree other than 2");
    }
    if (deg[v] == 2 && start < 0) start = v;
  }
  EdgeId first = -1;
  for (EdgeId id : g.incident(start)) {
    if (std::find(ids.begin(), ids.end(), id) != ids.end()) {
      first = id;
      break;
    }
  }
  Walk w = trace(g, ids, start, first);
  if (w.vertices.size() != w.edges.size()) {
    throw InvalidArgument("cycle edges are not one simple cycle");
  }
  if (!alternates(g, w, true)) {
    throw InvalidArgument("cycle is not properly colored");
  }
  return w;
}

// Hamiltonian path of cycle c from vertices[j] whose first edge has color
// `first_color`; it ends at the neighbor across the omitted edge.
inline Walk around(const ColoredMultigraph& g, const Walk& c, int j,
                   Color first_color) {
  const int len = static_cast<int>(c.vertices.size());
  const bool forward = g.edge(c.edges[j]).color == first_color;
  Walk w;
  for (int step = 0; step < len; ++step) {
    const int at = forward ? (j + step) % len : ((j - step) % len + len) % len;
    w.vertices.push_back(c.vertices[at]);
    if (step + 1 < len) {
      w.edges.push_back(forward ? c.edges[at] : c.edges[(at - 1 + len) % len]);
    }
  }
  return w;
}

// Splices one alternating cycle into a properly colored path. Some move
// always exists when the host is complete on the vertices involved.
inline Walk absorb(const ColoredMultigraph& g, const Walk& path,
                   const Walk& cycle) {
  std::vector<int> pos(static_cast<std::size_t>(g.num_vertices()), -1);
  for (int j = 0; j < static_cast<int>(cycle.vertices.size()); ++j) {
    pos[cycle.vertices[j]] = j;
  }
  auto color = [&](EdgeId id) { return g.edge(id).color; };
  auto first_into_cycle = [&](Vertex x, Color c) -> EdgeId {
    for (EdgeId id : g.incident(x)) {
      if (pos[g.edge(id).other(x)] >= 0 && (c == 0 || color(id) == c)) {
        return id;
      }
    }
    return -1;
  };
  auto append = [](Walk& to, const Walk& from) {
    to.vertices.insert(to.vertices.end(), from.vertices.begin(),
                       from.vertices.end());
    to.edges.insert(to.edges.end(), from.edges.begin(), from.edges.end());
  };

  const std::size_t p = path.edges.size();
  if (p == 0) {
    const Vertex x = path.vertices.front();
    const EdgeId e = first_into_cycle(x, 0);
    if (e >= 0) {
      const Vertex y = g.edge(e).other(x);
      Walk out{{x}, {e}};
      append(out, around(g, cycle, pos[y], 3 - color(e)));
      return out;
    }
  } else {
    // Tail.
    const Vertex tail = path.vertices.back();
    const Color a = color(path.edges.back());
    if (const EdgeId e = first_into_cycle(tail, 3 - a); e >= 0) {
      Walk out = path;
      out.edges.push_back(e);
      append(out, around(g, cycle, pos[g.edge(e).other(tail)], a));
      return out;
    }
    // Head.
    const Vertex head = path.vertices.front();
    const Color b = color(path.edges.front());
    if (const EdgeId e = first_into_cycle(head, 3 - b); e >= 0) {
      Walk w = around(g, cycle, pos[g.edge(e).other(head)], b);
      std::reverse(w.vertices.begin(), w.vertices.end());
      std::reverse(w.edges.begin(), w.edges.end());
      w.edges.push_back(e);
      append(w, path);
      return w;
    }
    // Replace path edge x_{i-1} x_i of color c by x_{i-1} y ... y' x_i where
    // yy' is the cycle edge of color c that gets dropped.
    for (std::size_t i = 1; i <= p; ++i) {
      const Vertex left = path.vertices[i - 1];
      const Vertex right = path.vertices[i];
      const Color c = color(path.edges[i - 1]);
      for (EdgeId e : g.incident(left)) {
        const Vertex y = g.edge(e).other(left);
        if (pos[y] < 0 || color(e) != c) continue;
        const int len = static_cast<int>(cycle.vertices.size());
        const int j = pos[y];
        const EdgeId dropped = color(cycle.edges[j]) == c
                                   ? cycle.edges[j]
                                   : cycle.edges[(j - 1 + len) % len];
        const Vertex y2 = g.edge(dropped).other(y);
        const auto back = g.find_edge(y2, right, c);
        if (!back) continue;
        Walk out;
        out.vertices.assign(path.vertices.begin(), path.vertices.begin() + i);
        out.edges.assign(path.edges.begin(), path.edges.begin() + (i - 1));
        out.edges.push_back(e);
        const Walk w = around(g, cycle, j, 3 - c);
        append(out, w);
        out.edges.push_back(*back);
        out.vertices.insert(out.vertices.end(), path.vertices.begin() + i,
                            path.vertices.end());
        out.edges.insert(out.edges.end(), path.edges.begin() + i,
                         path.edges.end());
        return out;
      }
    }
  }
  throw InternalError("no properly colored way to absorb a cycle");
}

inline EdgeSubset merge_walks(const ColoredMultigraph& g, Walk path,
                              const std::vector<Walk>& cycles) {
  std::size_t expected = path.vertices.size();
  for (const Walk& c : cycles) {
    path = absorb(g, path, c);
    expected += c.vertices.size();
    if (path.vertices.size() != expected ||
        path.edges.size() + 1 != path.vertices.size() ||
        !alternates(g, path, false)) {
      throw InternalError("cycle absorption broke the path");
    }
  }
  EdgeSubset out = path.edges;
  std::sort(out.begin(), out.end());
  const auto verdict = verify_pc_tree(g, out);
  if (!verdict.valid()) {
    throw InternalError("merged path is invalid: " + verdict.describe());
  }
  return out;
}

}  // namespace internal

// Turns a properly colored 1-path-cycle factor of a 2-colored multigraph,
// complete on the factor's vertices, into one properly colored Hamiltonian
// path of those vertices. An empty `path` stands for the single vertex
// `lone`.
inline EdgeSubset merge_path_cycle_factor(const ColoredMultigraph& g,
                                          std::span<const EdgeId> path,
                                          const std::vector<EdgeSubset>& cycles,
                                          Vertex lone = -1) {
  if (g.num_colors() != 2) {
    throw PreconditionError("path-cycle merge needs exactly 2 colors");
  }
  internal::Walk p = internal::as_path(g, path, lone);
  std::vector<internal::Walk> cs;
  std::vector<char> seen(static_cast<std::size_t>(g.num_vertices()), 0);
  VertexSet all;
  auto claim = [&](const internal::Walk& w) {
    for (Vertex v : w.vertices) {
      if (seen[v]) throw InvalidArgument("factor parts share a vertex");
      seen[v] = 1;
      all.push_back(v);
    }
  };
  claim(p);
  for (const auto& c : cycles) {
    cs.push_back(internal::as_cycle(g, c));
    claim(cs.back());
  }
  for (std::size_t a = 0; a < all.size(); ++a) {
    for (std::size_t b = a + 1; b < all.size(); ++b) {
      if (g.edges_between(all[a], all[b]).empty()) {
        throw PreconditionError("host is not complete on the factor");
      }
    }
  }
  return internal::merge_walks(g, std::move(p), cs);
}

// Exact Max-PF for 2-colored complete multigraphs.
inline SolveReport solve_complete_2color(const ColoredMultigraph& g) {
  if (g.num_colors() != 2) {
    throw PreconditionError("complete2 needs exactly 2 colors, got " +
                            std::to_string(g.num_colors()));
  }
  if (!g.is_complete()) {
    throw PreconditionError("complete2 needs a complete multigraph");
  }
  const CoverCertificate cert = max_coverable_set(g);
  SolveReport report;
  report.algorithm = "complete2";
  report.upper_bounds = upper_bounds(g, cert);
  const EdgeSubset f = internal::union_of(cert.matchings);

  std::vector<EdgeSubset> paths;
  std::vector<EdgeSubset> cycles;
  std::vector<int> comp_of(static_cast<std::size_t>(g.num_vertices()), -1);
  const auto comps = components(g, f);
  for (int c = 0; c < static_cast<int>(comps.size()); ++c) {
    for (Vertex v : comps[c]) comp_of[v] = c;
  }
  std::vector<EdgeSubset> comp_edges(comps.size());
  for (EdgeId id : f) comp_edges[comp_of[g.edge(id).u]].push_back(id);
  for (int c = 0; c < static_cast<int>(comps.size()); ++c) {
    auto& list = comp_edges[c];
    (list.size() == comps[c].size() ? cycles : paths).push_back(list);
  }
  auto by_lowest_id = [](const EdgeSubset& a, const EdgeSubset& b) {
    return a.front() < b.front();
  };
  std::sort(paths.begin(), paths.end(), by_lowest_id);
  std::sort(cycles.begin(), cycles.end(), by_lowest_id);

  std::vector<internal::Walk> walks;
  if (f.empty()) {
    report.forest = {};
  } else if (paths.empty()) {
    // All cycles: break the one holding the lowest edge id there.
    EdgeSubset broken = cycles.front();
    broken.erase(broken.begin());
    for (std::size_t i = 1; i < cycles.size(); ++i) {
      walks.push_back(internal::as_cycle(g, cycles[i]));
    }
    report.forest =
        internal::merge_walks(g, internal::as_path(g, broken, -1), walks);
  } else {
    for (const auto& c : cycles) walks.push_back(internal::as_cycle(g, c));
    report.forest =
        internal::merge_walks(g, internal::as_path(g, paths.front(), -1),
                              walks);
    for (std::size_t i = 1; i < paths.size(); ++i) {
      report.forest.insert(report.forest.end(), paths[i].begin(),
                           paths[i].end());
    }
  }
  internal::finish(g, report);
  return report;
}

// E' = E[U_s] plus the edges vw with v in U_s, w in U_r whose color is
// missing at w in F.
inline EdgeSubset candidate_edges(const ColoredMultigraph& g,
                                  std::span<const EdgeId> f,
                                  std::span<const Vertex> u_s,
                                  std::span<const Vertex> u_r) {
  check_edge_subset(g, f);
  const auto in_s = membership(g.num_vertices(), u_s);
  const auto in_r = membership(g.num_vertices(), u_r);
  for (Vertex v : u_s) {
    if (in_r[v]) throw InvalidArgument("U_s and U_r overlap");
  }
  std::vector<std::vector<char>> has_color(
      static_cast<std::size_t>(g.num_vertices()),
      std::vector<char>(static_cast<std::size_t>(g.num_colors()) + 1, 0));
  for (EdgeId id : f) {
    const Edge& e = g.edge(id);
    has_color[e.u][e.color] = has_color[e.v][e.color] = 1;
  }
  EdgeSubset out;
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    const Edge& e = g.edge(id);
    if (in_s[e.u] && in_s[e.v]) {
      out.push_back(id);
    } else if (in_s[e.u] && in_r[e.v] && !has_color[e.v][e.color]) {
      out.push_back(id);
    } else if (in_s[e.v] && in_r[e.u] && !has_color[e.u][e.color]) {
      out.push_back(id);
    }
  }
  return out;
}

// Local-improvement approximation for any edge-colored multigraph.
inline SolveReport solve_general(const ColoredMultigraph& g) {
  const int n = g.num_vertices();
  const CoverCertificate cert = max_coverable_set(g);
  SolveReport report;
  report.algorithm = "general";
  report.upper_bounds = upper_bounds(g, cert);
  const auto in_u = membership(n, cert.u);
  EdgeSubset f = internal::union_of(cert.matchings);

  auto require_proper = [&](const EdgeSubset& edges, const char* where) {
    std::vector<std::vector<char>> seen(
        static_cast<std::size_t>(n),
        std::vector<char>(static_cast<std::size_t>(g.num_colors()) + 1, 0));
    for (EdgeId id : edges) {
      const Edge& e = g.edge(id);
      if (seen[e.u][e.color] || seen[e.v][e.color]) {
        throw InternalError(std::string("color class is not a matching ") +
                            where);
      }
      seen[e.u][e.color] = seen[e.v][e.color] = 1;
    }
  };
  auto merged = [](EdgeSubset a, const EdgeSubset& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
  };

  for (;;) {
    // Split U by component size.
    const auto comps = components(g, f);
    VertexSet u_s;
    for (const auto& c : comps) {
      if (c.size() == 2) u_s.insert(u_s.end(), c.begin(), c.end());
    }
    std::sort(u_s.begin(), u_s.end());
    const auto in_s = membership(n, u_s);
    VertexSet u_r;
    for (Vertex v : cert.u) {
      if (!in_s[v]) u_r.push_back(v);
    }
    const auto in_r = membership(n, u_r);
    const int potential = static_cast<int>(u_s.size() + comps.size());
    if (!report.potentials.empty() && potential >= report.potentials.back()) {
      throw InternalError("improvement did not decrease the potential");
    }
    report.potentials.push_back(potential);
    report.snapshots.push_back(f);
    if (report.iterations > 2 * n) {
      throw InternalError("improvement loop exceeded 2n restarts");
    }

    // Keep F[U_s]; reduce F[U_r] to a spanning forest.
    const EdgeSubset f_s = induced_edges(g, f, in_s);
    f = merged(f_s, spanning_forest(g, induced_edges(g, f, in_r)));
    const EdgeSubset f_r = induced_edges(g, f, in_r);

    // Candidate edges for the improvements below.
    const EdgeSubset cand = candidate_edges(g, f, u_s, u_r);

    // An edge whose color is free at both ends, joining two trees.
    bool restart = false;
    {
      std::vector<std::vector<char>> has(
          static_cast<std::size_t>(n),
          std::vector<char>(static_cast<std::size_t>(g.num_colors()) + 1, 0));
      std::vector<char> in_f(static_cast<std::size_t>(g.num_edges()), 0);
      DisjointSets dsu(n);
      for (EdgeId id : f) {
        const Edge& e = g.edge(id);
        has[e.u][e.color] = has[e.v][e.color] = 1;
        in_f[id] = 1;
        dsu.unite(e.u, e.v);
      }
      for (EdgeId id = 0; id < g.num_edges() && !restart; ++id) {
        const Edge& e = g.edge(id);
        if (in_f[id] || has[e.u][e.color] || has[e.v][e.color]) continue;
        if (dsu.same(e.u, e.v)) continue;
        if (!in_u[e.u] || !in_u[e.v]) {
          throw InternalError("free edge leaves the coverable set");
        }
        f = merged(f, {id});
        require_proper(f, "after adding a free edge");
        restart = true;
      }
    }

    // One forced edge from U_s to U_r.
    for (std::size_t i = 0; i < cand.size() && !restart; ++i) {
      const Edge& e = g.edge(cand[i]);
      Vertex outer;
      if (in_s[e.u] && in_r[e.v]) {
        outer = e.v;
      } else if (in_s[e.v] && in_r[e.u]) {
        outer = e.u;
      } else {
        continue;
      }
      VertexSet t = u_s;
      t.insert(std::upper_bound(t.begin(), t.end(), outer), outer);
      const EdgeId forced[] = {cand[i]};
      if (auto nm = coverable_with_forced(g, cand, forced, t)) {
        f = merged(f_r, internal::union_of(*nm));
        require_proper(f, "after a single-edge improvement");
        restart = true;
      }
    }

    // Two forced edges inside U_s sharing one endpoint.
    if (!restart) {
      const EdgeSubset inner = induced_edges(g, cand, in_s);
      for (std::size_t a = 0; a < inner.size() && !restart; ++a) {
        for (std::size_t b = a + 1; b < inner.size() && !restart; ++b) {
          const Edge& x = g.edge(inner[a]);
          const Edge& y = g.edge(inner[b]);
          const int shared =
              (x.touches(y.u) ? 1 : 0) + (x.touches(y.v) ? 1 : 0);
          if (shared != 1 || x.color == y.color) continue;
          const EdgeId forced[] = {inner[a], inner[b]};
          if (auto nm = coverable_with_forced(g, inner, forced, u_s)) {
            f = merged(f_r, internal::union_of(*nm));
            require_proper(f, "after a two-edge improvement");
            restart = true;
          }
        }
      }
    }

    if (restart) {
      ++report.iterations;
      continue;
    }

    // No improvement: F[U_r] plus a spanning forest of F[U_s].
    f = merged(f_r, spanning_forest(g, f_s));
    for (const auto& c : components(g, f_r)) {
      if (c.size() < 3) {
        throw InternalError("a component of F[U_r] has fewer than 3 vertices");
      }
    }
    break;
  }
  report.forest = f;
  internal::finish(g, report);
  return report;
}

// Spanning forest of the union of maximum matchings covering a maximum
// coverable set. Simple graphs only.
inline SolveReport solve_union_matchings(const ColoredMultigraph& g) {
  if (!g.is_simple()) {
    throw PreconditionError("simplek needs a simple graph");
  }
  const CoverCertificate cert = max_coverable_set(g);
  SolveReport report;
  report.algorithm = "simplek";
  report.upper_bounds = upper_bounds(g, cert);
  report.forest = spanning_forest(g, internal::union_of(cert.matchings));
  internal::finish(g, report);
  return report;
}

// Exact algorithm when it applies, else the best-ratio approximation.
inline std::string auto_algorithm(const ColoredMultigraph& g) {
  if (g.num_colors() == 2 && g.is_complete()) return "complete2";
  if (g.is_simple() && g.num_colors() <= 3) return "simplek";
  return "general";
}

}  // namespace pcf
