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

// Text formats. Everything external is 1-based:
//
//   instance:  p pcf <n> <m> <k> <simple|multi>
//              e <u> <v> <color>            (m lines, file order = edge id)
//   solution:  s pcf <size>
//              f <edge-id>                  (ascending)
//              c <free text>                (comments, ignored on input)
//
// '#' starts a comment anywhere in a line.

#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstddef>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pcf/graph.hpp"

namespace pcf {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

namespace internal {

struct Line {
  int number = 0;
  std::vector<std::string_view> tokens;
};

inline std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    pos = end + 1;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i])))
        ++i;
      std::size_t j = i;
      while (j < raw.size() &&
             !std::isspace(static_cast<unsigned char>(raw[j])))
        ++j;
      if (j > i) line.tokens.push_back(raw.substr(i, j - i));
      i = j;
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
    if (end == text.size()) break;
  }
  return out;
}

inline long long to_int(std::string_view token, int line, const char* what) {
  long long value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(line, std::string("expected integer ") + what +
                               ", got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace internal

inline ColoredMultigraph parse_instance(std::string_view text) {
  const auto lines = internal::tokenize(text);
  if (lines.empty()) throw ParseError(1, "missing header 'p pcf ...'");
  const auto& head = lines.front();
  if (head.tokens.size() != 6 || head.tokens[0] != "p" ||
      head.tokens[1] != "pcf") {
    throw ParseError(head.number,
                     "malformed header, expected 'p pcf <n> <m> <k> "
                     "<simple|multi>'");
  }
  const long long n = internal::to_int(head.tokens[2], head.number, "n");
  const long long m = internal::to_int(head.tokens[3], head.number, "m");
  const long long k = internal::to_int(head.tokens[4], head.number, "k");
  bool simple = false;
  if (head.tokens[5] == "simple") {
    simple = true;
  } else if (head.tokens[5] != "multi") {
    throw ParseError(head.number, "graph kind must be 'simple' or 'multi'");
  }
  if (n < 0 || m < 0 || k < 1 || n > 1'000'000 || m > 100'000'000) {
    throw ParseError(head.number, "header values out of range");
  }
  if (static_cast<long long>(lines.size()) - 1 != m) {
    const int at = lines.size() > static_cast<std::size_t>(m) + 1
                       ? lines[static_cast<std::size_t>(m) + 1].number
                       : lines.back().number;
    throw ParseError(at, "header announces " + std::to_string(m) +
                             " edges, file has " +
                             std::to_string(lines.size() - 1));
  }

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.tokens.size() != 4 || line.tokens[0] != "e") {
      throw ParseError(line.number, "expected 'e <u> <v> <color>'");
    }
    const long long u = internal::to_int(line.tokens[1], line.number, "u");
    const long long v = internal::to_int(line.tokens[2], line.number, "v");
    const long long c = internal::to_int(line.tokens[3], line.number, "color");
    if (u < 1 || u > n || v < 1 || v > n) {
      throw ParseError(line.number, "vertex out of range [1," +
                                        std::to_string(n) + "]");
    }
    if (c < 1 || c > k) {
      throw ParseError(line.number,
                       "color out of range [1," + std::to_string(k) + "]");
    }
    edges.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1),
                     static_cast<Color>(c)});
  }
  if (auto defect = ColoredMultigraph::find_defect(
          static_cast<int>(n), static_cast<int>(k), simple, edges)) {
    const int at = defect->edge >= 0
                       ? lines[static_cast<std::size_t>(defect->edge) + 1].number
                       : head.number;
    throw ParseError(at, defect->message);
  }
  return ColoredMultigraph(static_cast<int>(n), static_cast<int>(k), simple,
                           std::move(edges));
}

inline std::string serialize_instance(const ColoredMultigraph& g) {
  std::ostringstream os;
  os << "p pcf " << g.num_vertices() << ' ' << g.num_edges() << ' '
     << g.num_colors() << ' ' << (g.declared_simple() ? "simple" : "multi")
     << '\n';
  for (const Edge& e : g.edges()) {
    os << "e " << e.u + 1 << ' ' << e.v + 1 << ' ' << e.color << '\n';
  }
  return os.str();
}

inline std::string serialize_solution(std::span<const EdgeId> f,
                                      std::span<const std::string> comments =
                                          {}) {
  std::vector<EdgeId> sorted(f.begin(), f.end());
  std::sort(sorted.begin(), sorted.end());
  std::ostringstream os;
  os << "s pcf " << sorted.size() << '\n';
  for (const std::string& c : comments) os << "# " << c << '\n';
  for (EdgeId id : sorted) os << "f " << id + 1 << '\n';
  return os.str();
}

// Returns 0-based edge ids, ascending. Ids are checked against `g`.
inline EdgeSubset parse_solution(std::string_view text,
                                 const ColoredMultigraph& g) {
  const auto lines = internal::tokenize(text);
  long long announced = -1;
  int header_line = 1;
  EdgeSubset ids;
  std::vector<char> seen(static_cast<std::size_t>(g.num_edges()), 0);
  for (const auto& line : lines) {
    const auto& t = line.tokens;
    if (t[0] == "c") continue;
    if (t[0] == "s") {
      if (announced >= 0 || t.size() != 3 || t[1] != "pcf") {
        throw ParseError(line.number, "malformed 's pcf <size>' line");
      }
      announced = internal::to_int(t[2], line.number, "size");
      header_line = line.number;
      continue;
    }
    if (t[0] == "f") {
      if (announced < 0) throw ParseError(line.number, "'f' before 's' line");
      if (t.size() != 2) throw ParseError(line.number, "expected 'f <id>'");
      const long long id = internal::to_int(t[1], line.number, "edge id");
      if (id < 1 || id > g.num_edges()) {
        throw ParseError(line.number, "unknown edge id " + std::string(t[1]));
      }
      if (seen[id - 1]) {
        throw ParseError(line.number, "duplicate edge id " + std::string(t[1]));
      }
      seen[id - 1] = 1;
      ids.push_back(static_cast<EdgeId>(id - 1));
      continue;
    }
    throw ParseError(line.number, "unexpected line type '" +
                                      std::string(t[0]) + "'");
  }
  if (announced < 0) throw ParseError(header_line, "missing 's pcf' line");
  if (announced != static_cast<long long>(ids.size())) {
    throw ParseError(header_line, "size " + std::to_string(announced) +
                                      " does not match " +
                                      std::to_string(ids.size()) +
                                      " listed edges");
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

// Whitespace-separated 1-based vertex ids; returns them 0-based and sorted.
inline VertexSet parse_vertex_list(std::string_view text, int n) {
  VertexSet out;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (const auto& line : internal::tokenize(text)) {
    for (std::string_view tok : line.tokens) {
      const long long v = internal::to_int(tok, line.number, "vertex");
      if (v < 1 || v > n) throw ParseError(line.number, "vertex out of range");
      if (seen[v - 1]) throw ParseError(line.number, "duplicate vertex");
      seen[v - 1] = 1;
      out.push_back(static_cast<Vertex>(v - 1));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pcf
