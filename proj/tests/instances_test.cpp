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

#include "pcf/instances.hpp"

#include <cstdint>
#include <vector>

#include <gtest/gtest.h>

#include "pcf/forest.hpp"
#include "pcf/io.hpp"
#include "pcf/oracle.hpp"
#include "test_util.hpp"

namespace pcf {
namespace {

using testing::colored;
using testing::simple_graph;

Digraph digraph(int n, std::vector<std::pair<Vertex, Vertex>> arcs) {
  Digraph d;
  d.n = n;
  d.arcs = std::move(arcs);
  return d;
}

TEST(Generators, Deterministic) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_EQ(serialize_instance(gen_random(8, 15, 3, false, seed)),
              serialize_instance(gen_random(8, 15, 3, false, seed)));
    EXPECT_EQ(serialize_instance(gen_complete(6, 2, 4, seed)),
              serialize_instance(gen_complete(6, 2, 4, seed)));
  }
  EXPECT_NE(serialize_instance(gen_random(8, 15, 3, false, 1)),
            serialize_instance(gen_random(8, 15, 3, false, 2)));
}

TEST(Generators, ShapesAreRespected) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto s = gen_random(7, 15, 3, true, seed);
    EXPECT_EQ(s.num_edges(), 15);
    EXPECT_TRUE(s.is_simple());
    const auto m = gen_random(5, 25, 3, false, seed);
    EXPECT_EQ(m.num_edges(), 25);
    const auto c = gen_complete(6, 3, static_cast<int>(seed % 3), seed);
    EXPECT_TRUE(c.is_complete());
    EXPECT_EQ(c.num_edges(), 15 + static_cast<int>(seed % 3));
    EXPECT_EQ(c.declared_simple(), seed % 3 == 0);
  }
  EXPECT_THROW(gen_random(3, 4, 1, true, 0), InvalidArgument);
  EXPECT_THROW(gen_random(3, 10, 3, false, 0), InvalidArgument);
}

TEST(Generators, RandomForestsAndTreesAreValid) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto g = gen_random(8, 16, 3, false, seed);
    EXPECT_TRUE(verify_pc_forest(g, random_pc_forest(g, seed)).valid());
    EXPECT_TRUE(verify_pc_tree(g, random_pc_tree(g, seed)).valid());
  }
}

TEST(LfToPcf2, FrozenOptima) {
  const auto one = reduce_lf_to_pcf2(simple_graph(2, {{0, 1}}));
  EXPECT_EQ(one.target.num_vertices(), 6);
  EXPECT_EQ(brute_maxpf(one.target).optimum, 5);
  const auto p3 = reduce_lf_to_pcf2(simple_graph(3, {{0, 1}, {1, 2}}));
  EXPECT_EQ(brute_maxpf(p3.target).optimum, 8);
  EXPECT_EQ(p3.opt_offset, 6);
}

TEST(LfToPcf2, BackwardMapIsFeasible) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 2 + static_cast<int>(seed % 5);
    const auto h = gen_simple_graph(
        n, static_cast<int>(seed % (n * (n - 1) / 2 + 1)), seed);
    const auto map = reduce_lf_to_pcf2(h);
    const auto f = random_pc_forest(map.target, seed);
    const auto lf = map.backward(f);
    ASSERT_TRUE(is_linear_forest(h, lf)) << "seed " << seed;
    ASSERT_GE(static_cast<int>(lf.size()),
              static_cast<int>(f.size()) - map.opt_offset);
  }
}

TEST(Pcf2ToPcf3Complete, FrozenOptima) {
  const auto one = reduce_pcf2_to_pcf3_complete(colored(2, 2, {{0, 1, 1}}));
  EXPECT_TRUE(one.target.is_complete());
  EXPECT_EQ(brute_maxpf(one.target).optimum, 3);
  const auto p3 = reduce_pcf2_to_pcf3_complete(
      colored(3, 2, {{0, 1, 1}, {1, 2, 2}}));
  EXPECT_EQ(brute_maxpf(p3.target).optimum, 5);
  EXPECT_THROW(reduce_pcf2_to_pcf3_complete(colored(2, 3, {{0, 1, 1}})),
               PreconditionError);
  EXPECT_THROW(
      reduce_pcf2_to_pcf3_complete(colored(2, 2, {{0, 1, 1}, {0, 1, 2}})),
      PreconditionError);
}

TEST(Pcf2ToPcf3Complete, BackwardMapIsFeasible) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 2 + static_cast<int>(seed % 3);
    const auto g = gen_random(
        n, static_cast<int>(seed % (n * (n - 1) / 2 + 1)), 2, true, seed);
    const auto map = reduce_pcf2_to_pcf3_complete(g);
    const auto f = random_pc_forest(map.target, seed);
    const auto back = map.backward(f);
    ASSERT_TRUE(verify_pc_forest(g, back).valid());
    ASSERT_GE(static_cast<int>(back.size()),
              static_cast<int>(f.size()) - map.opt_offset);
  }
}

TEST(DigraphToMaxpt2, FrozenOptima) {
  const auto arc = reduce_digraph_to_maxpt2(digraph(2, {{0, 1}}));
  EXPECT_EQ(brute_maxpt(arc.target).optimum, 3);
  const auto p3 = reduce_digraph_to_maxpt2(digraph(3, {{0, 1}, {1, 2}}));
  EXPECT_EQ(brute_maxpt(p3.target).optimum, 5);
  EXPECT_EQ(p3.opt_scale, 2);
  EXPECT_EQ(p3.opt_offset, 1);
  EXPECT_THROW(reduce_digraph_to_maxpt2(digraph(2, {{0, 0}})),
               InvalidArgument);
}

TEST(DigraphToMaxpt2, BackwardMapIsFeasible) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 2 + static_cast<int>(seed % 4);
    const auto d =
        gen_digraph(n, static_cast<int>(seed % (n * (n - 1) + 1)), seed);
    const auto map = reduce_digraph_to_maxpt2(d);
    const auto t = random_pc_tree(map.target, seed);
    const auto path = map.backward(t);
    ASSERT_TRUE(is_directed_path(d, path)) << "seed " << seed;
    ASSERT_GE(2 * static_cast<int>(path.size()) + 1,
              static_cast<int>(t.size()) - 1);
  }
}

TEST(DigraphToMaxpt2, DirectedCycleDropsOneArc) {
  const auto d = digraph(2, {{0, 1}, {1, 0}});
  const auto map = reduce_digraph_to_maxpt2(d);
  // in_0-out_0, out_0-in_1, in_1-out_1, out_1-in_0 minus the red gadget at 0.
  const EdgeSubset t{1, 2, 3};
  ASSERT_TRUE(verify_pc_tree(map.target, t).valid());
  EXPECT_EQ(map.backward(t), (EdgeSubset{0}));
}

TEST(Tsp12Doubling, FrozenOptimum) {
  const auto c4 = gen_tsp12_doubling(
      simple_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
  EXPECT_EQ(c4.target.num_edges(), 8);
  EXPECT_EQ(brute_maxpf(c4.target).optimum, 3);
}

TEST(Tsp12Doubling, BackwardMapIsFeasible) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 2 + static_cast<int>(seed % 6);
    const auto h = gen_simple_graph(
        n, static_cast<int>(seed % (n * (n - 1) / 2 + 1)), seed);
    const auto map = gen_tsp12_doubling(h);
    const auto f = random_pc_forest(map.target, seed);
    const auto lf = map.backward(f);
    ASSERT_TRUE(is_linear_forest(h, lf));
    ASSERT_EQ(lf.size(), f.size());
  }
}

TEST(Reductions, OptimaMatchSourceOracles) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 2 + static_cast<int>(seed % 3);
    const auto h = gen_simple_graph(
        n, static_cast<int>(seed % (n * (n - 1) / 2 + 1)), seed);
    const auto map = reduce_lf_to_pcf2(h);
    ASSERT_EQ(brute_maxpf(map.target, 64).optimum,
              brute_max_linear_forest(h, 64).optimum + map.opt_offset);
    const auto d = gen_digraph(n, static_cast<int>(seed % (n * (n - 1) + 1)),
                               seed);
    const auto dm = reduce_digraph_to_maxpt2(d);
    ASSERT_EQ(brute_maxpt(dm.target).optimum,
              2 * brute_longest_path(d).optimum + 1);
  }
}

}  // namespace
}  // namespace pcf
