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

#include "pcf/oracle.hpp"

#include <cstdint>
#include <vector>

#include <gtest/gtest.h>

#include "pcf/forest.hpp"
#include "pcf/instances.hpp"
#include "pcf/matroid_union.hpp"
#include "test_util.hpp"

namespace pcf {
namespace {

using testing::colored;

// Largest properly colored tree by plain subset enumeration.
int naive_maxpt(const ColoredMultigraph& g) {
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << g.num_edges()); ++mask) {
    EdgeSubset f;
    for (EdgeId id = 0; id < g.num_edges(); ++id) {
      if (mask >> id & 1u) f.push_back(id);
    }
    if (static_cast<int>(f.size()) > best && verify_pc_tree(g, f).valid()) {
      best = static_cast<int>(f.size());
    }
  }
  return best;
}

TEST(BruteMaxpf, EdgelessGraph) {
  const auto r = brute_maxpf(colored(4, 2, {}));
  EXPECT_EQ(r.optimum, 0);
  EXPECT_TRUE(r.witness.empty());
}

TEST(BruteMaxpf, ColorConflictAtMiddle) {
  EXPECT_EQ(brute_maxpf(colored(3, 1, {{0, 1, 1}, {1, 2, 1}})).optimum, 1);
}

TEST(BruteMaxpf, AlternatingFourCycle) {
  const auto g =
      colored(4, 2, {{0, 1, 1}, {1, 2, 2}, {2, 3, 1}, {3, 0, 2}}, true);
  const auto r = brute_maxpf(g);
  EXPECT_EQ(r.optimum, 3);
  EXPECT_EQ(brute_maxpf_bitmask(g).optimum, 3);
  EXPECT_TRUE(is_pc_forest(g, r.witness));
}

TEST(BruteMaxpf, CapIsEnforced) {
  const auto g = gen_random(8, 25, 4, false, 1);
  EXPECT_THROW(brute_maxpf(g), CapExceeded);
  EXPECT_NO_THROW(brute_maxpf(g, 25));
}

TEST(BruteMaxpf, AgreesWithBitmaskEnumeration) {
  for (std::uint64_t seed = 0; seed < 1500; ++seed) {
    const int n = 2 + static_cast<int>(seed % 8);
    const int k = 1 + static_cast<int>(seed % 4);
    const bool simple = seed % 3 == 0;
    const int slots = n * (n - 1) / 2 * (simple ? 1 : k);
    const int m = static_cast<int>(seed % 17) % (std::min(16, slots) + 1);
    const auto g = gen_random(n, m, k, simple, seed);
    const auto a = brute_maxpf(g);
    const auto b = brute_maxpf_bitmask(g);
    ASSERT_EQ(a.optimum, b.optimum) << "seed " << seed;
    ASSERT_TRUE(is_pc_forest(g, a.witness));
    ASSERT_TRUE(is_pc_forest(g, b.witness));
    ASSERT_EQ(static_cast<int>(a.witness.size()), a.optimum);
    ASSERT_EQ(static_cast<int>(b.witness.size()), b.optimum);
  }
}

TEST(BruteMaxpf, AddingAnEdgeNeverHurts) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto g = gen_random(7, 14, 3, false, seed);
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    int previous = 0;
    for (std::size_t len = 0; len <= edges.size(); ++len) {
      const ColoredMultigraph prefix(
          7, 3, false, std::vector<Edge>(edges.begin(), edges.begin() + len));
      const int opt = brute_maxpf(prefix).optimum;
      ASSERT_GE(opt, previous);
      previous = opt;
    }
  }
}

TEST(BruteOptRestricted, WholeVertexSet) {
  const auto g = gen_random(6, 10, 3, false, 3);
  const VertexSet all{0, 1, 2, 3, 4, 5};
  EXPECT_EQ(brute_opt_restricted(g, all).optimum, brute_maxpf(g).optimum);
}

TEST(BruteOptRestricted, EmptyVertexSet) {
  const auto g = gen_random(6, 10, 3, false, 3);
  EXPECT_EQ(brute_opt_restricted(g, {}).optimum, 0);
}

TEST(BruteOptRestricted, CoverableSetKeepsTheOptimum) {
  const auto g = gen_random(7, 14, 3, false, 7);
  const auto cert = max_coverable_set(g);
  const auto r = brute_opt_restricted(g, cert.u);
  EXPECT_EQ(r.optimum, brute_maxpf(g).optimum);
  EXPECT_TRUE(is_pc_forest(g, r.witness));
}

TEST(BruteOptRestricted, CoverableSetKeepsTheOptimumOnManySeeds) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 3 + static_cast<int>(seed % 6);
    const auto g = gen_random(n, std::min(12, n * (n - 1)), 2 + seed % 3,
                              false, seed + 500);
    const auto cert = max_coverable_set(g);
    ASSERT_EQ(brute_opt_restricted(g, cert.u).optimum, brute_maxpf(g).optimum)
        << "seed " << seed;
  }
}

TEST(BruteMaxpt, SingleEdge) {
  const auto r = brute_maxpt(colored(2, 1, {{0, 1, 1}}));
  EXPECT_EQ(r.optimum, 1);
  EXPECT_EQ(r.witness, (EdgeSubset{0}));
}

TEST(BruteMaxpt, ConflictingPath) {
  EXPECT_EQ(brute_maxpt(colored(3, 2, {{0, 1, 1}, {1, 2, 1}})).optimum, 1);
}

TEST(BruteMaxpt, ProperlyColoredTriangle) {
  const auto g = colored(3, 3, {{0, 1, 1}, {1, 2, 2}, {2, 0, 3}});
  EXPECT_EQ(brute_maxpt(g).optimum, 2);
  EXPECT_EQ(naive_maxpt(g), 2);
}

TEST(BruteMaxpt, AgreesWithNaiveEnumeration) {
  for (std::uint64_t seed = 0; seed < 600; ++seed) {
    const int n = 2 + static_cast<int>(seed % 7);
    const int k = 1 + static_cast<int>(seed % 3);
    const int slots = n * (n - 1) / 2 * k;
    const int m = static_cast<int>(seed % 15) % (std::min(14, slots) + 1);
    const auto g = gen_random(n, m, k, false, seed);
    const auto r = brute_maxpt(g);
    ASSERT_EQ(r.optimum, naive_maxpt(g)) << "seed " << seed;
    ASSERT_TRUE(verify_pc_tree(g, r.witness).valid());
    ASSERT_EQ(static_cast<int>(r.witness.size()), r.optimum);
  }
}

TEST(BruteLongestPath, SmallDigraphs) {
  Digraph d;
  d.n = 4;
  d.arcs = {{0, 1}, {1, 2}, {2, 0}, {2, 3}};
  const auto r = brute_longest_path(d);
  EXPECT_EQ(r.optimum, 3);
  EXPECT_TRUE(is_directed_path(d, r.witness));
}

TEST(BruteMaxLinearForest, FourCycle) {
  const auto h = testing::simple_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  const auto r = brute_max_linear_forest(h);
  EXPECT_EQ(r.optimum, 3);
  EXPECT_TRUE(is_linear_forest(h, r.witness));
}

}  // namespace
}  // namespace pcf
