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

// Sum of the matching matroids of the color classes. A vertex set is
// independent in the sum iff one matching per color covers it together.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "pcf/graph.hpp"
#include "pcf/matching.hpp"

namespace pcf {

struct CoverCertificate {
  VertexSet u;
  // parts[i-1] and matchings[i-1] belong to color i. Matchings hold host
  // edge ids.
  std::vector<VertexSet> parts;
  std::vector<EdgeSubset> matchings;
};

namespace internal {

struct MaskHash {
  std::size_t operator()(const std::vector<std::uint64_t>& key) const {
    std::size_t h = key.size();
    for (std::uint64_t w : key) {
      h ^= static_cast<std::size_t>(w) + 0x9e3779b97f4a7c15ULL + (h << 6) +
           (h >> 2);
    }
    return h;
  }
};

// Matroid partition over k matching matroids with memoized independence
// tests. Elements join in the order they are offered; each offer runs one
// BFS in the exchange graph and applies a shortest augmenting path.
class MatchingMatroidSum {
 public:
  explicit MatchingMatroidSum(std::span<const SimpleGraph> classes)
      : classes_(classes.begin(), classes.end()),
        n_(classes.empty() ? 0 : classes.front().n),
        words_((static_cast<std::size_t>(n_) + 63) / 64),
        owner_(static_cast<std::size_t>(n_), -1),
        memo_(classes.size()) {
    for (const auto& h : classes_) {
      if (h.n != n_) throw InvalidArgument("color classes differ in size");
    }
  }

  int num_classes() const { return static_cast<int>(classes_.size()); }

  // Tries to add s. Returns false (and changes nothing) when s cannot be
  // covered together with the current elements.
  bool offer(Vertex s) {
    if (owner_.at(s) >= 0) return true;
    const int k = num_classes();
    std::vector<Vertex> pred(static_cast<std::size_t>(n_), -1);
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::deque<Vertex> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      for (int i = 0; i < k; ++i) {
        if (owner_[x] == i) continue;
        if (independent_with(i, x, -1)) {
          apply(s, x, i, pred);
          return true;
        }
      }
      for (int i = 0; i < k; ++i) {
        if (owner_[x] == i) continue;
        for (Vertex y = 0; y < n_; ++y) {
          if (owner_[y] != i || seen[y]) continue;
          if (independent_with(i, x, y)) {
            seen[y] = 1;
            pred[y] = x;
            queue.push_back(y);
          }
        }
      }
    }
    return false;
  }

  // Current part of class i, ascending.
  VertexSet part(int i) const {
    VertexSet out;
    for (Vertex v = 0; v < n_; ++v) {
      if (owner_[v] == i) out.push_back(v);
    }
    return out;
  }

  VertexSet elements() const {
    VertexSet out;
    for (Vertex v = 0; v < n_; ++v) {
      if (owner_[v] >= 0) out.push_back(v);
    }
    return out;
  }

  std::uint64_t oracle_calls() const { return oracle_calls_; }

 private:
  using Key = std::vector<std::uint64_t>;

  Key key_of(int i) const {
    Key key(words_, 0);
    for (Vertex v = 0; v < n_; ++v) {
      if (owner_[v] == i) key[v / 64] |= std::uint64_t{1} << (v % 64);
    }
    return key;
  }

  // Is part(i) + add - drop independent in class i?
  bool independent_with(int i, Vertex add, Vertex drop) {
    Key key = key_of(i);
    key[add / 64] |= std::uint64_t{1} << (add % 64);
    if (drop >= 0) key[drop / 64] &= ~(std::uint64_t{1} << (drop % 64));
    auto& memo = memo_[i];
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    ++oracle_calls_;
    std::vector<Vertex> set;
    for (Vertex v = 0; v < n_; ++v) {
      if (key[v / 64] >> (v % 64) & 1) set.push_back(v);
    }
    const bool ok = matroid_rank(restricted(i, key), set) ==
                    static_cast<int>(set.size());
    memo.emplace(std::move(key), ok);
    return ok;
  }

  // Class i with only the edges that touch the set; others cannot matter.
  SimpleGraph restricted(int i, const Key& key) const {
    SimpleGraph h;
    h.n = n_;
    const auto& full = classes_[i];
    for (int e = 0; e < full.num_edges(); ++e) {
      const auto [a, b] = full.edges[e];
      if ((key[a / 64] >> (a % 64) & 1) || (key[b / 64] >> (b % 64) & 1)) {
        h.add_edge(a, b, full.origin[e]);
      }
    }
    return h;
  }

  void apply(Vertex s, Vertex last, int cls, const std::vector<Vertex>& pred) {
    Vertex cur = last;
    int target = cls;
    for (;;) {
      const int previous = owner_[cur];
      owner_[cur] = target;
      if (cur == s) break;
      target = previous;
      cur = pred[cur];
    }
  }

  std::vector<SimpleGraph> classes_;
  int n_;
  std::size_t words_;
  std::vector<int> owner_;
  std::vector<std::unordered_map<Key, bool, MaskHash>> memo_;
  std::uint64_t oracle_calls_ = 0;
};

// Upgrades each part to a maximum matching of its class that covers it.
inline std::vector<EdgeSubset> covering_matchings(
    std::span<const SimpleGraph> classes, const MatchingMatroidSum& sum) {
  std::vector<EdgeSubset> out;
  for (int i = 0; i < static_cast<int>(classes.size()); ++i) {
    const auto m = max_matching_covering(classes[i], sum.part(i));
    if (!m) throw InternalError("independent part has no covering matching");
    EdgeSubset ids;
    for (int e : *m) ids.push_back(classes[i].origin[e]);
    std::sort(ids.begin(), ids.end());
    out.push_back(std::move(ids));
  }
  return out;
}

// Witness matchings (host ids) covering T with the given classes, if any.
inline std::optional<std::vector<EdgeSubset>> cover_with_classes(
    std::span<const SimpleGraph> classes, std::span<const Vertex> t) {
  MatchingMatroidSum sum(classes);
  for (Vertex v : t) {
    if (!sum.offer(v)) return std::nullopt;
  }
  return covering_matchings(classes, sum);
}

}  // namespace internal

// Maximum matching-coverable set with one maximum matching per color.
inline CoverCertificate max_coverable_set(const ColoredMultigraph& g) {
  const auto classes = color_classes(g);
  internal::MatchingMatroidSum sum(classes);
  for (Vertex v = 0; v < g.num_vertices(); ++v) sum.offer(v);
  CoverCertificate cert;
  cert.u = sum.elements();
  for (int i = 0; i < g.num_colors(); ++i) cert.parts.push_back(sum.part(i));
  cert.matchings = internal::covering_matchings(classes, sum);

  std::vector<char> covered(static_cast<std::size_t>(g.num_vertices()), 0);
  for (const auto& m : cert.matchings) {
    for (EdgeId id : m) covered[g.edge(id).u] = covered[g.edge(id).v] = 1;
  }
  const auto count = std::count(covered.begin(), covered.end(), 1);
  if (count != static_cast<long>(cert.u.size())) {
    throw InternalError("covering matchings do not cover exactly U");
  }
  return cert;
}

// Matchings N_i of the color classes that together cover T, if they exist.
inline std::optional<std::vector<EdgeSubset>> coverable(
    const ColoredMultigraph& g, std::span<const Vertex> t) {
  for (Vertex v : t) {
    if (v < 0 || v >= g.num_vertices()) {
      throw InvalidArgument("vertex out of range");
    }
  }
  const auto classes = color_classes(g);
  return internal::cover_with_classes(classes, t);
}

// Matchings N_i within `restricted` covering T and containing every forced
// edge. Forced edges: one edge, or two edges of different colors sharing
// exactly one endpoint.
inline std::optional<std::vector<EdgeSubset>> coverable_with_forced(
    const ColoredMultigraph& g, std::span<const EdgeId> restricted,
    std::span<const EdgeId> forced, std::span<const Vertex> t) {
  check_edge_subset(g, restricted);
  check_edge_subset(g, forced);
  std::vector<char> allowed(static_cast<std::size_t>(g.num_edges()), 0);
  for (EdgeId id : restricted) allowed[id] = 1;
  if (forced.empty() || forced.size() > 2) {
    throw InvalidArgument("one or two forced edges expected");
  }
  for (EdgeId id : forced) {
    if (!allowed[id]) {
      throw InvalidArgument("forced edge " + std::to_string(id + 1) +
                            " is not in the restricted set");
    }
  }
  if (forced.size() == 2) {
    const Edge& a = g.edge(forced[0]);
    const Edge& b = g.edge(forced[1]);
    const int shared = (a.touches(b.u) ? 1 : 0) + (a.touches(b.v) ? 1 : 0);
    if (shared != 1) {
      throw InvalidArgument("forced edges must share exactly one endpoint");
    }
    if (a.color == b.color) {
      throw InvalidArgument("forced edges must have different colors");
    }
  }

  // Endpoints of a forced edge are closed to the rest of its color class.
  std::vector<std::vector<char>> blocked(
      static_cast<std::size_t>(g.num_colors()),
      std::vector<char>(static_cast<std::size_t>(g.num_vertices()), 0));
  std::vector<char> done(static_cast<std::size_t>(g.num_vertices()), 0);
  for (EdgeId id : forced) {
    const Edge& e = g.edge(id);
    blocked[e.color - 1][e.u] = blocked[e.color - 1][e.v] = 1;
    done[e.u] = done[e.v] = 1;
  }
  std::vector<SimpleGraph> classes(static_cast<std::size_t>(g.num_colors()));
  for (auto& h : classes) h.n = g.num_vertices();
  for (EdgeId id : restricted) {
    const Edge& e = g.edge(id);
    if (blocked[e.color - 1][e.u] || blocked[e.color - 1][e.v]) continue;
    classes[e.color - 1].add_edge(e.u, e.v, id);
  }
  std::vector<Vertex> rest;
  for (Vertex v : t) {
    if (v < 0 || v >= g.num_vertices()) {
      throw InvalidArgument("vertex out of range");
    }
    if (!done[v]) rest.push_back(v);
  }
  auto out = internal::cover_with_classes(classes, rest);
  if (!out) return std::nullopt;
  for (EdgeId id : forced) {
    auto& m = (*out)[g.edge(id).color - 1];
    m.insert(std::upper_bound(m.begin(), m.end(), id), id);
  }
  return out;
}

}  // namespace pcf
