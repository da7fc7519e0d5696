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

#include "pcf/matching.hpp"

#include <cstdint>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace pcf {
namespace {

using testing::brute_max_weight;
using testing::brute_nu;
using testing::brute_rank;
using testing::mask_to_set;
using testing::simple_graph;

TEST(MaxMatching, TriangleTakesLowestIdEdge) {
  const auto h = simple_graph(3, {{0, 1}, {1, 2}, {2, 0}});
  EXPECT_EQ(max_matching(h), (Matching{0}));
}

TEST(MaxMatching, PathOfThreeEdges) {
  const auto h = simple_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  EXPECT_EQ(max_matching(h), (Matching{0, 2}));
}

TEST(MaxMatching, FiveCycleHasSizeTwo) {
  const auto h = simple_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  EXPECT_EQ(max_matching(h).size(), 2u);
}

TEST(MaxMatching, NeedsBlossomToAugment) {
  // Greedy picks 1-2 and 3-4; the blossom 1-2-3 hides the path 0..5.
  const auto h = simple_graph(
      6, {{1, 2}, {3, 4}, {2, 3}, {0, 1}, {4, 5}, {1, 3}});
  const auto m = max_matching(h);
  EXPECT_EQ(m.size(), 3u);
  EXPECT_TRUE(is_matching(h, m));
}

TEST(MaxMatching, AgreesWithEnumerationOnRandomGraphs) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + static_cast<int>(testing::uniform_below(rng, 8));
    auto h = testing::random_simple_graph(rng, n, 45);
    if (h.num_edges() > 14) continue;
    const auto m = max_matching(h);
    ASSERT_TRUE(is_matching(h, m));
    ASSERT_EQ(static_cast<int>(m.size()), brute_nu(h)) << "trial " << trial;
  }
}

TEST(MaxWeightMatching, StarPrefersHeavierEdge) {
  const auto h = simple_graph(3, {{1, 0}, {1, 2}});
  const std::vector<std::int64_t> w{2, 1};
  EXPECT_EQ(max_weight_matching(h, w), (Matching{0}));
}

TEST(MaxWeightMatching, AllZeroGivesEmpty) {
  const auto h = simple_graph(3, {{0, 1}, {1, 2}});
  const std::vector<std::int64_t> w{0, 0};
  EXPECT_TRUE(max_weight_matching(h, w).empty());
}

TEST(MaxWeightMatching, MiddleEdgeBeatsTwoLight) {
  const auto h = simple_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  const std::vector<std::int64_t> w{1, 3, 1};
  EXPECT_EQ(max_weight_matching(h, w), (Matching{1}));
}

TEST(MaxWeightMatching, AgreesWithEnumerationOnRandomWeights) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 1500; ++trial) {
    const int n = 2 + static_cast<int>(testing::uniform_below(rng, 8));
    auto h = testing::random_simple_graph(rng, n, 50);
    if (h.num_edges() > 14) continue;
    const std::uint64_t span = trial % 3 == 0 ? 3 : 40;
    std::vector<std::int64_t> w;
    for (int i = 0; i < h.num_edges(); ++i) {
      w.push_back(static_cast<std::int64_t>(testing::uniform_below(rng, span)));
    }
    const auto m = max_weight_matching(h, w);
    ASSERT_TRUE(is_matching(h, m));
    ASSERT_EQ(matching_weight(m, w), brute_max_weight(h, w))
        << "trial " << trial;
  }
}

TEST(MaxWeightMatching, UnitWeightsAgreeWithCardinalityEngine) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 4 + static_cast<int>(testing::uniform_below(rng, 36));
    const int percent = 3 + static_cast<int>(testing::uniform_below(rng, 30));
    auto h = testing::random_simple_graph(rng, n, percent);
    std::vector<std::int64_t> w(h.num_edges(), 1);
    const auto a = max_weight_matching(h, w);
    const auto b = max_matching(h);
    ASSERT_TRUE(is_matching(h, a));
    ASSERT_TRUE(is_matching(h, b));
    ASSERT_EQ(a.size(), b.size()) << "trial " << trial;
  }
}

TEST(MaxWeightMatching, IsDeterministic) {
  std::mt19937_64 rng(9);
  auto h = testing::random_simple_graph(rng, 9, 60);
  std::vector<std::int64_t> w(h.num_edges(), 1);
  EXPECT_EQ(max_weight_matching(h, w), max_weight_matching(h, w));
}

TEST(MatroidRank, StarAllVertices) {
  const auto h = simple_graph(4, {{1, 0}, {1, 2}, {1, 3}});
  const std::vector<Vertex> x{0, 1, 2, 3};
  EXPECT_EQ(matroid_rank(h, x), 2);
}

TEST(MatroidRank, StarTwoLeaves) {
  const auto h = simple_graph(4, {{1, 0}, {1, 2}, {1, 3}});
  const std::vector<Vertex> x{0, 2};
  EXPECT_EQ(matroid_rank(h, x), 1);
}

TEST(MatroidRank, FiveCycleAllVertices) {
  const auto h = simple_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  const std::vector<Vertex> x{0, 1, 2, 3, 4};
  EXPECT_EQ(matroid_rank(h, x), 4);
}

TEST(MatroidRank, MatchesEnumerationOnAllSubsets) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(testing::uniform_below(rng, 5));
    auto h = testing::random_simple_graph(rng, n, 50);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      ASSERT_EQ(matroid_rank(h, mask_to_set(mask)), brute_rank(h, mask));
    }
  }
}

TEST(MatroidRank, SatisfiesRankAxioms) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(testing::uniform_below(rng, 6));
    auto h = testing::random_simple_graph(rng, n, 55);
    std::vector<int> r(1u << n);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      r[mask] = matroid_rank(h, mask_to_set(mask));
    }
    for (std::uint32_t a = 0; a < (1u << n); ++a) {
      ASSERT_LE(r[a], __builtin_popcount(a));
      ASSERT_GE(r[a], 0);
      for (std::uint32_t b = 0; b < (1u << n); ++b) {
        if ((a & b) == a) {
          ASSERT_LE(r[a], r[b]);
        }
        ASSERT_LE(r[a | b] + r[a & b], r[a] + r[b]);
      }
    }
  }
}

TEST(MaxMatchingCovering, InfeasibleWhenRankDeficient) {
  const auto h = simple_graph(3, {{0, 1}, {1, 2}});
  const std::vector<Vertex> x{0, 2};
  EXPECT_FALSE(max_matching_covering(h, x).has_value());
}

TEST(MaxMatchingCovering, PathCoveringSecondVertex) {
  const auto h = simple_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  const std::vector<Vertex> x{1};
  EXPECT_EQ(max_matching_covering(h, x), (Matching{0, 2}));
}

TEST(MaxMatchingCovering, EmptyRequirementIsMaximumMatching) {
  const auto h = simple_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  const auto m = max_matching_covering(h, {});
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->size(), 2u);
}

TEST(MaxMatchingCovering, CoversAndIsMaximumWheneverFeasible) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 2 + static_cast<int>(testing::uniform_below(rng, 6));
    auto h = testing::random_simple_graph(rng, n, 50);
    const int nu = brute_nu(h);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      const auto x = mask_to_set(mask);
      const auto m = max_matching_covering(h, x);
      const bool feasible =
          brute_rank(h, mask) == static_cast<int>(x.size());
      ASSERT_EQ(m.has_value(), feasible);
      if (!m) continue;
      ASSERT_TRUE(is_matching(h, *m));
      const auto cov = matched_vertices(h, *m);
      for (Vertex v : x) ASSERT_TRUE(cov[v]);
      // Independent sets of a matroid extend to bases, so a covering
      // matching can always be maximum.
      ASSERT_EQ(static_cast<int>(m->size()), nu);
    }
  }
}

}  // namespace
}  // namespace pcf
