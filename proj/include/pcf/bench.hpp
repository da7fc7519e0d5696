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

// Seeded ratio benchmark: generate, solve, certify against the oracle.

#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "pcf/graph.hpp"
#include "pcf/instances.hpp"
#include "pcf/maxpt.hpp"
#include "pcf/oracle.hpp"
#include "pcf/ratio.hpp"
#include "pcf/solvers.hpp"

namespace pcf {

struct BenchConfig {
  std::string family = "random";  // random, simple or complete
  std::string algorithm = "auto";
  int trials = 100;
  int nmax = 9;
  int mmax = 20;
  int k = 4;
  std::uint64_t seed = 1;
  bool check_ratio = false;
  Rational eps = Rational(2);
  int oracle_cap = kDefaultOracleCap;
  int tree_oracle_cap = kDefaultTreeOracleCap;
};

struct BenchRecord {
  int trial = 0;
  std::string family;
  int n = 0;
  int m = 0;
  int k = 0;
  std::uint64_t seed = 0;
  std::string algorithm;
  int size = 0;
  std::optional<int> optimum;
  std::string guarantee;  // "a/b", "maxpt" or empty
  // "pass", "fail", "uncertified" (no oracle value or no guarantee),
  // "unchecked" (no --check-ratio) or "error".
  std::string status;
  std::string message;
  double wall_ms = 0;
};

inline SolveReport run_algorithm(const std::string& algorithm,
                                 const ColoredMultigraph& g,
                                 const Rational& eps) {
  const std::string alg = algorithm == "auto" ? auto_algorithm(g) : algorithm;
  if (alg == "complete2") return solve_complete_2color(g);
  if (alg == "general") return solve_general(g);
  if (alg == "simplek") return solve_union_matchings(g);
  if (alg == "maxpt") return solve_maxpt(g, eps);
  throw InvalidArgument("unknown algorithm '" + algorithm + "'");
}

namespace internal {

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t trial) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (trial + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace internal

inline ColoredMultigraph bench_instance(const BenchConfig& cfg, int trial,
                                        std::uint64_t* seed_out = nullptr) {
  const std::uint64_t seed = internal::mix_seed(cfg.seed, trial);
  if (seed_out) *seed_out = seed;
  Rng rng(seed);
  const int n = uniform_int(rng, 2, std::max(2, cfg.nmax));
  const std::int64_t pairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
  if (cfg.family == "complete") {
    const int extra = uniform_int(rng, 0, n);
    return gen_complete(n, cfg.k, extra, rng());
  }
  const bool simple = cfg.family == "simple";
  if (!simple && cfg.family != "random") {
    throw InvalidArgument("unknown bench family '" + cfg.family + "'");
  }
  const std::int64_t slots = simple ? pairs : pairs * cfg.k;
  const int m = uniform_int(
      rng, 0, static_cast<int>(std::min<std::int64_t>(cfg.mmax, slots)));
  return gen_random(n, m, cfg.k, simple, rng());
}

inline BenchRecord run_trial(const BenchConfig& cfg, int trial) {
  BenchRecord rec;
  rec.trial = trial;
  rec.family = cfg.family;
  const auto start = std::chrono::steady_clock::now();
  try {
    const ColoredMultigraph g = bench_instance(cfg, trial, &rec.seed);
    rec.n = g.num_vertices();
    rec.m = g.num_edges();
    rec.k = g.num_colors();
    rec.algorithm = cfg.algorithm == "auto" ? auto_algorithm(g) : cfg.algorithm;
    const SolveReport report = run_algorithm(rec.algorithm, g, cfg.eps);
    rec.size = report.size;
    rec.status = "unchecked";
    if (cfg.check_ratio) {
      const bool tree = rec.algorithm == "maxpt";
      try {
        rec.optimum = tree ? brute_maxpt(g, cfg.tree_oracle_cap).optimum
                           : brute_maxpf(g, cfg.oracle_cap).optimum;
      } catch (const CapExceeded& e) {
        rec.message = e.what();
      }
      bool pass = false;
      bool certified = false;
      if (rec.optimum) {
        if (tree) {
          rec.guarantee = "maxpt";
          certified = true;
          pass = meets_maxpt_bound(rec.size, *rec.optimum, rec.n, cfg.eps);
        } else if (const auto r = guaranteed_ratio(rec.algorithm, g)) {
          rec.guarantee = r->str();
          certified = true;
          pass = meets_ratio(rec.size, *rec.optimum, *r);
        }
        if (rec.size > *rec.optimum) {
          certified = true;
          pass = false;
          rec.message = "size exceeds the optimum";
        }
      }
      rec.status = !certified ? "uncertified" : pass ? "pass" : "fail";
    }
  } catch (const std::exception& e) {
    rec.status = "error";
    rec.message = e.what();
  }
  rec.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return rec;
}

// Runs every trial on `threads` workers; records come back in trial order.
inline std::vector<BenchRecord> run_bench(const BenchConfig& cfg,
                                          int threads) {
  std::vector<BenchRecord> out(static_cast<std::size_t>(
      std::max(0, cfg.trials)));
  std::atomic<int> next{0};
  auto work = [&] {
    for (int i = next++; i < cfg.trials; i = next++) out[i] = run_trial(cfg, i);
  };
  threads = std::max(1, std::min(threads, cfg.trials));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace pcf
