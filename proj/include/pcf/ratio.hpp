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

// Guaranteed approximation ratios and exact integer certification.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "pcf/graph.hpp"
#include "pcf/maxpt.hpp"

namespace pcf {

struct Guarantee {
  std::int64_t num = 1;
  std::int64_t den = 1;

  std::string str() const {
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

// Ratio promised for `algorithm` on g, if any. Max-PT is handled
// separately.
inline std::optional<Guarantee> guaranteed_ratio(
    std::string_view algorithm, const ColoredMultigraph& g) {
  const int k = g.num_colors();
  if (algorithm == "complete2") return Guarantee{1, 1};
  if (algorithm == "general") {
    if (k <= 2) return Guarantee{3, 5};
    if (g.is_simple() || k == 3) return Guarantee{4, 7};
    return Guarantee{5, 9};
  }
  if (algorithm == "simplek") {
    if (k <= 2) return Guarantee{3, 4};
    if (k == 3) return Guarantee{5, 8};
    return std::nullopt;
  }
  throw InvalidArgument("no ratio for algorithm '" + std::string(algorithm) +
                        "'");
}

// size >= ceil(r * opt), which for an integer size is size >= r * opt.
inline bool meets_ratio(std::int64_t size, std::int64_t opt, Guarantee r) {
  return size * r.den >= r.num * opt;
}

// size * sqrt((2 + eps)(n - 1)) >= opt, compared squared.
inline bool meets_maxpt_bound(std::int64_t size, std::int64_t opt, int n,
                              const Rational& eps) {
  if (opt == 0) return true;
  const Rational lhs = Rational(size * size) * (2 + eps) * (n - 1);
  return lhs >= Rational(opt * opt);
}

}  // namespace pcf
