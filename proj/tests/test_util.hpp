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

// Small builders and exhaustive reference computations shared by the tests.
// Nothing here calls the matching or matroid code under test.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <random>
#include <tuple>
#include <utility>
#include <vector>

#include "pcf/graph.hpp"

namespace pcf::testing {

inline SimpleGraph simple_graph(
    int n, std::initializer_list<std::pair<int, int>> edges) {
  SimpleGraph h;
  h.n = n;
  int i = 0;
  for (auto [u, v] : edges) h.add_edge(u, v, i++);
  return h;
}

inline ColoredMultigraph colored(
    int n, int k, std::initializer_list<std::tuple<int, int, int>> edges,
    bool simple = false) {
  std::vector<Edge> list;
  for (auto [u, v, c] : edges) list.push_back({u, v, c});
  return ColoredMultigraph(n, k, simple, std::move(list));
}

// Calls `visit` with every matching of h (as local edge indices).
inline void for_each_matching(
    const SimpleGraph& h,
    const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> chosen;
  std::vector<char> used(static_cast<std::size_t>(h.n), 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == h.num_edges()) {
      visit(chosen);
      return;
    }
    rec(i + 1);
    const auto [u, v] = h.edges[i];
    if (!used[u] && !used[v]) {
      used[u] = used[v] = 1;
      chosen.push_back(i);
      rec(i + 1);
      chosen.pop_back();
      used[u] = used[v] = 0;
    }
  };
  rec(0);
}

inline int brute_nu(const SimpleGraph& h) {
  int best = 0;
  for_each_matching(h, [&](const std::vector<int>& m) {
    best = std::max(best, static_cast<int>(m.size()));
  });
  return best;
}

inline std::int64_t brute_max_weight(const SimpleGraph& h,
                                     const std::vector<std::int64_t>& w) {
  std::int64_t best = 0;
  for_each_matching(h, [&](const std::vector<int>& m) {
    std::int64_t s = 0;
    for (int i : m) s += w[i];
    best = std::max(best, s);
  });
  return best;
}

inline int brute_rank(const SimpleGraph& h, std::uint32_t xmask) {
  int best = 0;
  for_each_matching(h, [&](const std::vector<int>& m) {
    std::uint32_t cov = 0;
    for (int i : m) cov |= (1u << h.edges[i].first) | (1u << h.edges[i].second);
    best = std::max(best, __builtin_popcount(cov & xmask));
  });
  return best;
}

inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(rng);
}

// Random simple graph with each pair present independently.
inline SimpleGraph random_simple_graph(std::mt19937_64& rng, int n,
                                       int percent) {
  SimpleGraph h;
  h.n = n;
  int id = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (static_cast<int>(uniform_below(rng, 100)) < percent) {
        h.add_edge(u, v, id++);
      }
    }
  }
  return h;
}

// Calls `visit` with every edge subset (as a bitmask over edge ids) in which
// each color class is a matching. Only for tiny graphs.
inline void for_each_color_matching_tuple(
    const ColoredMultigraph& g,
    const std::function<void(std::uint32_t)>& visit) {
  const int m = g.num_edges();
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<char> used(
        static_cast<std::size_t>(g.num_vertices()) * (g.num_colors() + 1), 0);
    bool ok = true;
    for (int id = 0; id < m && ok; ++id) {
      if (!(mask >> id & 1u)) continue;
      const Edge& e = g.edge(id);
      for (Vertex x : {e.u, e.v}) {
        char& slot = used[static_cast<std::size_t>(x) * (g.num_colors() + 1) +
                          e.color];
        if (slot) ok = false;
        slot = 1;
      }
    }
    if (ok) visit(mask);
  }
}

inline std::uint32_t covered_mask(const ColoredMultigraph& g,
                                  std::uint32_t edges) {
  std::uint32_t out = 0;
  for (int id = 0; id < g.num_edges(); ++id) {
    if (edges >> id & 1u) out |= (1u << g.edge(id).u) | (1u << g.edge(id).v);
  }
  return out;
}

// Largest |V(M_1 u ... u M_k)| over per-color matchings.
inline int brute_max_cover(const ColoredMultigraph& g) {
  int best = 0;
  for_each_color_matching_tuple(g, [&](std::uint32_t mask) {
    best = std::max(best, __builtin_popcount(covered_mask(g, mask)));
  });
  return best;
}

// Is there a per-color matching tuple inside `allowed` that contains
// `forced` and covers `t`?
inline bool brute_coverable(const ColoredMultigraph& g, std::uint32_t t,
                            std::uint32_t allowed = ~0u,
                            std::uint32_t forced = 0) {
  bool found = false;
  for_each_color_matching_tuple(g, [&](std::uint32_t mask) {
    if (found || (mask & ~allowed) || (mask & forced) != forced) return;
    if ((covered_mask(g, mask) & t) == t) found = true;
  });
  return found;
}

// Per-vertex bitmask helpers for tiny graphs.
inline std::vector<Vertex> mask_to_set(std::uint32_t mask) {
  std::vector<Vertex> out;
  for (int v = 0; v < 32; ++v) {
    if (mask >> v & 1u) out.push_back(v);
  }
  return out;
}

}  // namespace pcf::testing
