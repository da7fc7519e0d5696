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

// Matchings in general graphs. Two engines live here:
//   * an Edmonds blossom search for maximum cardinality, and
//   * a primal-dual blossom algorithm for maximum weight with integer weights
//     (after J. van Rantwijk's mwmatching).
// Both return indices into SimpleGraph::edges, ascending.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <vector>

#include "pcf/graph.hpp"

namespace pcf {

// Local edge indices of a SimpleGraph, ascending.
using Matching = std::vector<int>;

inline bool is_matching(const SimpleGraph& h, std::span<const int> m) {
  std::vector<char> used(static_cast<std::size_t>(h.n), 0);
  for (int i : m) {
    if (i < 0 || i >= h.num_edges()) return false;
    const auto [u, v] = h.edges[i];
    if (used[u] || used[v]) return false;
    used[u] = used[v] = 1;
  }
  return true;
}

inline std::vector<char> matched_vertices(const SimpleGraph& h,
                                          std::span<const int> m) {
  std::vector<char> covered(static_cast<std::size_t>(h.n), 0);
  for (int i : m) {
    covered[h.edges[i].first] = 1;
    covered[h.edges[i].second] = 1;
  }
  return covered;
}

namespace internal {

class CardinalityMatcher {
 public:
  explicit CardinalityMatcher(const SimpleGraph& h)
      : h_(h), n_(h.n), adj_(static_cast<std::size_t>(h.n)) {
    for (int i = 0; i < h.num_edges(); ++i) {
      const auto [u, v] = h.edges[i];
      adj_[u].push_back({v, i});
      adj_[v].push_back({u, i});
    }
    mate_.assign(n_, -1);
  }

  Matching run() {
    // Greedy start in edge id order, then augment from each free vertex.
    for (int i = 0; i < h_.num_edges(); ++i) {
      const auto [u, v] = h_.edges[i];
      if (mate_[u] < 0 && mate_[v] < 0) link(u, v);
    }
    for (Vertex root = 0; root < n_; ++root) {
      if (mate_[root] >= 0) continue;
      const Vertex end = find_path(root);
      if (end >= 0) augment(end);
    }
    Matching out;
    for (Vertex v = 0; v < n_; ++v) {
      if (mate_[v] <= v) continue;
      // Lowest-id edge of the matched pair (adjacency is in id order).
      for (const Arc& arc : adj_[v]) {
        if (arc.to == mate_[v]) {
          out.push_back(arc.edge);
          break;
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  struct Arc {
    Vertex to;
    int edge;
  };

  void link(Vertex u, Vertex v) {
    mate_[u] = v;
    mate_[v] = u;
  }

  Vertex lca(Vertex a, Vertex b) {
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    for (;;) {
      a = base_[a];
      seen[a] = 1;
      if (mate_[a] < 0) break;
      a = parent_[mate_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[mate_[v]]] = 1;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  Vertex find_path(Vertex root) {
    parent_.assign(n_, -1);
    in_tree_.assign(n_, 0);
    base_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) base_[v] = v;
    std::deque<Vertex> queue{root};
    in_tree_[root] = 1;
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (const Arc& arc : adj_[v]) {
        const Vertex to = arc.to;
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] >= 0 && parent_[mate_[to]] >= 0)) {
          const Vertex cur = lca(v, to);
          in_blossom_.assign(n_, 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (Vertex i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!in_tree_[i]) {
                in_tree_[i] = 1;
                queue.push_back(i);
              }
            }
          }
        } else if (parent_[to] < 0) {
          parent_[to] = v;
          if (mate_[to] < 0) return to;
          in_tree_[mate_[to]] = 1;
          queue.push_back(mate_[to]);
        }
      }
    }
    return -1;
  }

  void augment(Vertex v) {
    while (v >= 0) {
      const Vertex pv = parent_[v];
      const Vertex ppv = mate_[pv];
      mate_[v] = pv;
      mate_[pv] = v;
      v = ppv;
    }
  }

  const SimpleGraph& h_;
  int n_;
  std::vector<std::vector<Arc>> adj_;
  std::vector<Vertex> mate_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> base_;
  std::vector<char> in_tree_;
  std::vector<char> in_blossom_;
};

// Maximum weight matching for nonnegative integer weights. Duals are kept
// doubled so that every quantity stays integral.
class WeightedMatcher {
 public:
  WeightedMatcher(int n, std::vector<std::pair<Vertex, Vertex>> edges,
                  std::vector<std::int64_t> weights)
      : nv_(n),
        ne_(static_cast<int>(edges.size())),
        edges_(std::move(edges)),
        w_(std::move(weights)) {}

  // Returns for each vertex the matched edge index, or -1.
  std::vector<int> run() {
    const int n = nv_;
    std::int64_t maxweight = 0;
    for (auto x : w_) maxweight = std::max(maxweight, x);
    endpoint_.resize(2 * static_cast<std::size_t>(ne_));
    for (int p = 0; p < 2 * ne_; ++p) {
      endpoint_[p] = p % 2 == 0 ? edges_[p / 2].first : edges_[p / 2].second;
    }
    neighbend_.assign(n, {});
    for (int k = 0; k < ne_; ++k) {
      neighbend_[edges_[k].first].push_back(2 * k + 1);
      neighbend_[edges_[k].second].push_back(2 * k);
    }
    mate_.assign(n, -1);
    label_.assign(2 * n, 0);
    labelend_.assign(2 * n, -1);
    inblossom_.resize(n);
    for (int i = 0; i < n; ++i) inblossom_[i] = i;
    blossomparent_.assign(2 * n, -1);
    blossomchilds_.assign(2 * n, {});
    blossombase_.assign(2 * n, -1);
    for (int i = 0; i < n; ++i) blossombase_[i] = i;
    blossomendps_.assign(2 * n, {});
    bestedge_.assign(2 * n, -1);
    blossombestedges_.assign(2 * n, {});
    has_bestedges_.assign(2 * n, 0);
    unused_.clear();
    for (int i = n; i < 2 * n; ++i) unused_.push_back(i);
    dualvar_.assign(2 * n, 0);
    for (int i = 0; i < n; ++i) dualvar_[i] = maxweight;
    allowedge_.assign(ne_, 0);
    queue_.clear();

    for (int stage = 0; stage < n; ++stage) {
      std::fill(label_.begin(), label_.end(), 0);
      std::fill(bestedge_.begin(), bestedge_.end(), -1);
      for (int b = n; b < 2 * n; ++b) {
        blossombestedges_[b].clear();
        has_bestedges_[b] = 0;
      }
      std::fill(allowedge_.begin(), allowedge_.end(), 0);
      queue_.clear();
      for (int v = 0; v < n; ++v) {
        if (mate_[v] == -1 && label_[inblossom_[v]] == 0) {
          assign_label(v, 1, -1);
        }
      }
      bool augmented = false;
      for (;;) {
        while (!queue_.empty() && !augmented) {
          const int v = queue_.back();
          queue_.pop_back();
          for (int p : neighbend_[v]) {
            const int k = p / 2;
            const int w = endpoint_[p];
            if (inblossom_[v] == inblossom_[w]) continue;
            std::int64_t kslack = 0;
            if (!allowedge_[k]) {
              kslack = slack(k);
              if (kslack <= 0) allowedge_[k] = 1;
            }
            if (allowedge_[k]) {
              if (label_[inblossom_[w]] == 0) {
                assign_label(w, 2, p ^ 1);
              } else if (label_[inblossom_[w]] == 1) {
                const int base = scan_blossom(v, w);
                if (base >= 0) {
                  add_blossom(base, k);
                } else {
                  augment_matching(k);
                  augmented = true;
                  break;
                }
              } else if (label_[w] == 0) {
                label_[w] = 2;
                labelend_[w] = p ^ 1;
              }
            } else if (label_[inblossom_[w]] == 1) {
              const int b = inblossom_[v];
              if (bestedge_[b] == -1 || kslack < slack(bestedge_[b])) {
                bestedge_[b] = k;
              }
            } else if (label_[w] == 0) {
              if (bestedge_[w] == -1 || kslack < slack(bestedge_[w])) {
                bestedge_[w] = k;
              }
            }
          }
        }
        if (augmented) break;

        int deltatype = 1;
        std::int64_t delta = dualvar_[0];
        for (int v = 1; v < n; ++v) delta = std::min(delta, dualvar_[v]);
        int deltaedge = -1;
        int deltablossom = -1;
        for (int v = 0; v < n; ++v) {
          if (label_[inblossom_[v]] == 0 && bestedge_[v] != -1) {
            const std::int64_t d = slack(bestedge_[v]);
            if (d < delta) {
              delta = d;
              deltatype = 2;
              deltaedge = bestedge_[v];
            }
          }
        }
        for (int b = 0; b < 2 * n; ++b) {
          if (blossomparent_[b] == -1 && label_[b] == 1 &&
              bestedge_[b] != -1) {
            const std::int64_t ks = slack(bestedge_[b]);
            if (ks % 2 != 0) throw InternalError("odd slack between S-blossoms");
            const std::int64_t d = ks / 2;
            if (d < delta) {
              delta = d;
              deltatype = 3;
              deltaedge = bestedge_[b];
            }
          }
        }
        for (int b = n; b < 2 * n; ++b) {
          if (blossombase_[b] >= 0 && blossomparent_[b] == -1 &&
              label_[b] == 2 && dualvar_[b] < delta) {
            delta = dualvar_[b];
            deltatype = 4;
            deltablossom = b;
          }
        }
        for (int v = 0; v < n; ++v) {
          if (label_[inblossom_[v]] == 1) {
            dualvar_[v] -= delta;
          } else if (label_[inblossom_[v]] == 2) {
            dualvar_[v] += delta;
          }
        }
        for (int b = n; b < 2 * n; ++b) {
          if (blossombase_[b] >= 0 && blossomparent_[b] == -1) {
            if (label_[b] == 1) {
              dualvar_[b] += delta;
            } else if (label_[b] == 2) {
              dualvar_[b] -= delta;
            }
          }
        }
        if (deltatype == 1) {
          break;
        } else if (deltatype == 2) {
          allowedge_[deltaedge] = 1;
          int i = edges_[deltaedge].first;
          if (label_[inblossom_[i]] == 0) i = edges_[deltaedge].second;
          queue_.push_back(i);
        } else if (deltatype == 3) {
          allowedge_[deltaedge] = 1;
          queue_.push_back(edges_[deltaedge].first);
        } else {
          expand_blossom(deltablossom, false);
        }
      }
      if (!augmented) break;
      for (int b = n; b < 2 * n; ++b) {
        if (blossomparent_[b] == -1 && blossombase_[b] >= 0 &&
            label_[b] == 1 && dualvar_[b] == 0) {
          expand_blossom(b, true);
        }
      }
    }

    std::vector<int> out(n, -1);
    for (int v = 0; v < n; ++v) {
      if (mate_[v] >= 0) out[v] = mate_[v] / 2;
    }
    return out;
  }

 private:
  std::int64_t slack(int k) const {
    return dualvar_[edges_[k].first] + dualvar_[edges_[k].second] - 2 * w_[k];
  }

  void leaves(int b, std::vector<int>& out) const {
    if (b < nv_) {
      out.push_back(b);
      return;
    }
    for (int t : blossomchilds_[b]) leaves(t, out);
  }

  std::vector<int> leaves(int b) const {
    std::vector<int> out;
    leaves(b, out);
    return out;
  }

  void assign_label(int w, int t, int p) {
    const int b = inblossom_[w];
    label_[w] = label_[b] = t;
    labelend_[w] = labelend_[b] = p;
    bestedge_[w] = bestedge_[b] = -1;
    if (t == 1) {
      leaves(b, queue_);
    } else if (t == 2) {
      const int base = blossombase_[b];
      assign_label(endpoint_[mate_[base]], 1, mate_[base] ^ 1);
    }
  }

  int scan_blossom(int v, int w) {
    std::vector<int> path;
    int base = -1;
    while (v != -1 || w != -1) {
      int b = inblossom_[v];
      if (label_[b] & 4) {
        base = blossombase_[b];
        break;
      }
      path.push_back(b);
      label_[b] = 5;
      if (labelend_[b] == -1) {
        v = -1;
      } else {
        v = endpoint_[labelend_[b]];
        b = inblossom_[v];
        v = endpoint_[labelend_[b]];
      }
      if (w != -1) std::swap(v, w);
    }
    for (int b : path) label_[b] = 1;
    return base;
  }

  void add_blossom(int base, int k) {
    int v = edges_[k].first;
    int w = edges_[k].second;
    const int bb = inblossom_[base];
    int bv = inblossom_[v];
    int bw = inblossom_[w];
    const int b = unused_.back();
    unused_.pop_back();
    blossombase_[b] = base;
    blossomparent_[b] = -1;
    blossomparent_[bb] = b;
    std::vector<int> path;
    std::vector<int> endps;
    while (bv != bb) {
      blossomparent_[bv] = b;
      path.push_back(bv);
      endps.push_back(labelend_[bv]);
      v = endpoint_[labelend_[bv]];
      bv = inblossom_[v];
    }
    path.push_back(bb);
    std::reverse(path.begin(), path.end());
    std::reverse(endps.begin(), endps.end());
    endps.push_back(2 * k);
    while (bw != bb) {
      blossomparent_[bw] = b;
      path.push_back(bw);
      endps.push_back(labelend_[bw] ^ 1);
      w = endpoint_[labelend_[bw]];
      bw = inblossom_[w];
    }
    blossomchilds_[b] = path;
    blossomendps_[b] = endps;
    label_[b] = 1;
    labelend_[b] = labelend_[bb];
    dualvar_[b] = 0;
    for (int x : leaves(b)) {
      if (label_[inblossom_[x]] == 2) queue_.push_back(x);
      inblossom_[x] = b;
    }
    std::vector<int> bestedgeto(2 * static_cast<std::size_t>(nv_), -1);
    for (int sub : path) {
      std::vector<std::vector<int>> nblists;
      if (!has_bestedges_[sub]) {
        for (int x : leaves(sub)) {
          std::vector<int> list;
          for (int p : neighbend_[x]) list.push_back(p / 2);
          nblists.push_back(std::move(list));
        }
      } else {
        nblists.push_back(blossombestedges_[sub]);
      }
      for (const auto& nblist : nblists) {
        for (int kk : nblist) {
          int i = edges_[kk].first;
          int j = edges_[kk].second;
          if (inblossom_[j] == b) std::swap(i, j);
          const int bj = inblossom_[j];
          if (bj != b && label_[bj] == 1 &&
              (bestedgeto[bj] == -1 || slack(kk) < slack(bestedgeto[bj]))) {
            bestedgeto[bj] = kk;
          }
        }
      }
      blossombestedges_[sub].clear();
      has_bestedges_[sub] = 0;
      bestedge_[sub] = -1;
    }
    blossombestedges_[b].clear();
    for (int kk : bestedgeto) {
      if (kk != -1) blossombestedges_[b].push_back(kk);
    }
    has_bestedges_[b] = 1;
    bestedge_[b] = -1;
    for (int kk : blossombestedges_[b]) {
      if (bestedge_[b] == -1 || slack(kk) < slack(bestedge_[b])) {
        bestedge_[b] = kk;
      }
    }
  }

  void expand_blossom(int b, bool endstage) {
    for (int s : blossomchilds_[b]) {
      blossomparent_[s] = -1;
      if (s < nv_) {
        inblossom_[s] = s;
      } else if (endstage && dualvar_[s] == 0) {
        expand_blossom(s, endstage);
      } else {
        for (int x : leaves(s)) inblossom_[x] = s;
      }
    }
    if (!endstage && label_[b] == 2) {
      const auto& childs = blossomchilds_[b];
      const auto& endps = blossomendps_[b];
      const int len = static_cast<int>(childs.size());
      const int entrychild = inblossom_[endpoint_[labelend_[b] ^ 1]];
      int j = static_cast<int>(
          std::find(childs.begin(), childs.end(), entrychild) - childs.begin());
      int jstep;
      int endptrick;
      if (j & 1) {
        j -= len;
        jstep = 1;
        endptrick = 0;
      } else {
        jstep = -1;
        endptrick = 1;
      }
      auto at = [len](const std::vector<int>& xs, int idx) {
        return xs[static_cast<std::size_t>(((idx % len) + len) % len)];
      };
      int p = labelend_[b];
      while (j != 0) {
        label_[endpoint_[p ^ 1]] = 0;
        label_[endpoint_[at(endps, j - endptrick) ^ endptrick ^ 1]] = 0;
        assign_label(endpoint_[p ^ 1], 2, p);
        allowedge_[at(endps, j - endptrick) / 2] = 1;
        j += jstep;
        p = at(endps, j - endptrick) ^ endptrick;
        allowedge_[p / 2] = 1;
        j += jstep;
      }
      int bv = at(childs, j);
      label_[endpoint_[p ^ 1]] = label_[bv] = 2;
      labelend_[endpoint_[p ^ 1]] = labelend_[bv] = p;
      bestedge_[bv] = -1;
      j += jstep;
      while (at(childs, j) != entrychild) {
        bv = at(childs, j);
        if (label_[bv] == 1) {
          j += jstep;
          continue;
        }
        int found = -1;
        for (int x : leaves(bv)) {
          if (label_[x] != 0) {
            found = x;
            break;
          }
        }
        if (found >= 0) {
          label_[found] = 0;
          label_[endpoint_[mate_[blossombase_[bv]]]] = 0;
          assign_label(found, 2, labelend_[found]);
        }
        j += jstep;
      }
    }
    label_[b] = labelend_[b] = -1;
    blossomchilds_[b].clear();
    blossomendps_[b].clear();
    blossombase_[b] = -1;
    blossombestedges_[b].clear();
    has_bestedges_[b] = 0;
    bestedge_[b] = -1;
    unused_.push_back(b);
  }

  void augment_blossom(int b, int v) {
    int t = v;
    while (blossomparent_[t] != b) t = blossomparent_[t];
    if (t >= nv_) augment_blossom(t, v);
    auto& childs = blossomchilds_[b];
    auto& endps = blossomendps_[b];
    const int len = static_cast<int>(childs.size());
    auto at = [len](const std::vector<int>& xs, int idx) {
      return xs[static_cast<std::size_t>(((idx % len) + len) % len)];
    };
    const int i =
        static_cast<int>(std::find(childs.begin(), childs.end(), t) -
                         childs.begin());
    int j = i;
    int jstep;
    int endptrick;
    if (i & 1) {
      j -= len;
      jstep = 1;
      endptrick = 0;
    } else {
      jstep = -1;
      endptrick = 1;
    }
    while (j != 0) {
      j += jstep;
      t = at(childs, j);
      const int p = at(endps, j - endptrick) ^ endptrick;
      if (t >= nv_) augment_blossom(t, endpoint_[p]);
      j += jstep;
      t = at(childs, j);
      if (t >= nv_) augment_blossom(t, endpoint_[p ^ 1]);
      mate_[endpoint_[p]] = p ^ 1;
      mate_[endpoint_[p ^ 1]] = p;
    }
    std::rotate(childs.begin(), childs.begin() + i, childs.end());
    std::rotate(endps.begin(), endps.begin() + i, endps.end());
    blossombase_[b] = blossombase_[childs[0]];
  }

  void augment_matching(int k) {
    const int v = edges_[k].first;
    const int w = edges_[k].second;
    const std::pair<int, int> starts[2] = {{v, 2 * k + 1}, {w, 2 * k}};
    for (auto [s, p] : starts) {
      for (;;) {
        const int bs = inblossom_[s];
        if (bs >= nv_) augment_blossom(bs, s);
        mate_[s] = p;
        if (labelend_[bs] == -1) break;
        const int t = endpoint_[labelend_[bs]];
        const int bt = inblossom_[t];
        s = endpoint_[labelend_[bt]];
        const int j = endpoint_[labelend_[bt] ^ 1];
        if (bt >= nv_) augment_blossom(bt, j);
        mate_[j] = labelend_[bt];
        p = labelend_[bt] ^ 1;
      }
    }
  }

  int nv_;
  int ne_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::vector<std::int64_t> w_;
  std::vector<int> endpoint_;
  std::vector<std::vector<int>> neighbend_;
  std::vector<int> mate_;
  std::vector<int> label_;
  std::vector<int> labelend_;
  std::vector<int> inblossom_;
  std::vector<int> blossomparent_;
  std::vector<std::vector<int>> blossomchilds_;
  std::vector<int> blossombase_;
  std::vector<std::vector<int>> blossomendps_;
  std::vector<int> bestedge_;
  std::vector<std::vector<int>> blossombestedges_;
  std::vector<char> has_bestedges_;
  std::vector<int> unused_;
  std::vector<std::int64_t> dualvar_;
  std::vector<char> allowedge_;
  std::vector<int> queue_;
};

}  // namespace internal

inline Matching max_matching(const SimpleGraph& h) {
  if (h.n == 0) return {};
  return internal::CardinalityMatcher(h).run();
}

// Matching maximizing the total weight. Zero-weight edges are never chosen.
inline Matching max_weight_matching(const SimpleGraph& h,
                                    std::span<const std::int64_t> w) {
  if (static_cast<int>(w.size()) != h.num_edges()) {
    throw InvalidArgument("one weight per edge expected");
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<std::int64_t> weights;
  std::vector<int> local;
  for (int i = 0; i < h.num_edges(); ++i) {
    if (w[i] < 0) throw InvalidArgument("negative edge weight");
    if (w[i] == 0) continue;
    edges.push_back(h.edges[i]);
    weights.push_back(w[i]);
    local.push_back(i);
  }
  if (edges.empty() || h.n == 0) return {};
  const auto mate =
      internal::WeightedMatcher(h.n, std::move(edges), std::move(weights))
          .run();
  Matching out;
  for (Vertex v = 0; v < h.n; ++v) {
    if (mate[v] < 0) continue;
    const auto [a, b] = h.edges[local[mate[v]]];
    if (v == std::min(a, b)) out.push_back(local[mate[v]]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::int64_t matching_weight(std::span<const int> m,
                                    std::span<const std::int64_t> w) {
  std::int64_t total = 0;
  for (int i : m) total += w[i];
  return total;
}

// Rank of X in the matching matroid of H: the largest number of X-vertices
// one matching can cover.
inline int matroid_rank(const SimpleGraph& h, std::span<const Vertex> x) {
  std::vector<char> in(static_cast<std::size_t>(h.n), 0);
  for (Vertex v : x) {
    if (v < 0 || v >= h.n) throw InvalidArgument("vertex out of range");
    in[v] = 1;
  }
  std::vector<std::int64_t> w(static_cast<std::size_t>(h.num_edges()));
  for (int i = 0; i < h.num_edges(); ++i) {
    w[i] = in[h.edges[i].first] + in[h.edges[i].second];
  }
  return static_cast<int>(matching_weight(max_weight_matching(h, w), w));
}

// A maximum-cardinality matching among those covering X, or nullopt if no
// matching covers X.
inline std::optional<Matching> max_matching_covering(
    const SimpleGraph& h, std::span<const Vertex> x) {
  if (matroid_rank(h, x) != static_cast<int>(x.size())) return std::nullopt;
  std::vector<char> in(static_cast<std::size_t>(h.n), 0);
  for (Vertex v : x) in[v] = 1;
  const std::int64_t big = h.num_edges() + 1;
  std::vector<std::int64_t> w(static_cast<std::size_t>(h.num_edges()));
  for (int i = 0; i < h.num_edges(); ++i) {
    w[i] = big * (in[h.edges[i].first] + in[h.edges[i].second]) + 1;
  }
  Matching m = max_weight_matching(h, w);
  const auto covered = matched_vertices(h, m);
  for (Vertex v : x) {
    if (!covered[v]) throw InternalError("covering matching misses a vertex");
  }
  return m;
}

}  // namespace pcf
