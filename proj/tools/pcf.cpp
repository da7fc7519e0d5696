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

// pcf: solve, verify, oracle, gen and bench front end.
//
// Exit codes: 0 success, 1 invalid solution or failed ratio check, 2 usage
// or parse error, 3 algorithm precondition violated, 4 oracle cap exceeded,
// 5 internal error.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "pcf/pcf.hpp"

namespace {

using nlohmann::json;

constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitCap = 4;
constexpr int kExitInternal = 5;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin),
            std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

pcf::ColoredMultigraph load_graph(const std::string& path) {
  return pcf::parse_instance(read_text(path));
}

json ids_json(const pcf::EdgeSubset& f) {
  json out = json::array();
  for (pcf::EdgeId id : f) out.push_back(id + 1);
  return out;
}

json report_json(const pcf::SolveReport& r) {
  json bounds = json::object();
  for (const auto& b : r.upper_bounds) bounds[b.name] = b.value;
  return {{"algorithm", r.algorithm},
          {"size", r.size},
          {"forest", ids_json(r.forest)},
          {"upper_bounds", bounds},
          {"iterations", r.iterations}};
}

std::vector<std::string> report_comments(const pcf::SolveReport& r) {
  std::vector<std::string> out{"algorithm " + r.algorithm};
  for (const auto& b : r.upper_bounds) {
    out.push_back("bound " + b.name + " " + std::to_string(b.value));
  }
  if (r.algorithm == "general") {
    out.push_back("iterations " + std::to_string(r.iterations));
  }
  return out;
}

// --- solve ---------------------------------------------------------------

struct SolveArgs {
  std::string input;
  std::string alg = "auto";
  std::string eps = "2";
  std::string partition;
  bool json = false;
};

int cmd_solve(const SolveArgs& a) {
  const auto g = load_graph(a.input);
  const pcf::Rational eps = pcf::parse_rational(a.eps);
  if (eps <= 0) throw UsageError("--eps must be positive");
  pcf::SolveReport report;
  if (a.alg == "maxpt" && !a.partition.empty()) {
    const auto v1 =
        pcf::parse_vertex_list(read_text(a.partition), g.num_vertices());
    const pcf::PartitionOracle fixed = [&](const pcf::ColoredMultigraph& h) {
      pcf::VertexPartition p;
      p.v1 = v1;
      const auto in1 = pcf::membership(h.num_vertices(), v1);
      for (pcf::Vertex v = 0; v < h.num_vertices(); ++v) {
        if (!in1[v]) p.v2.push_back(v);
      }
      const auto t1 = pcf::internal::best_tree_on(h, p.v1);
      if (t1.optimum + 1 != std::max<int>(static_cast<int>(p.v1.size()), 1)) {
        throw pcf::PreconditionError(
            "partition: G[V1] has no properly colored spanning tree");
      }
      p.f1 = t1.witness;
      p.f2 = pcf::internal::best_tree_on(h, p.v2).witness;
      return p;
    };
    report = pcf::solve_maxpt(g, eps, fixed);
  } else {
    report = pcf::run_algorithm(a.alg, g, eps);
  }
  if (a.json) {
    std::cout << report_json(report).dump() << '\n';
  } else {
    std::cout << pcf::serialize_solution(report.forest,
                                         report_comments(report));
  }
  return 0;
}

// --- verify --------------------------------------------------------------

struct VerifyArgs {
  std::string input;
  std::string solution;
  bool tree = false;
};

int cmd_verify(const VerifyArgs& a) {
  const auto g = load_graph(a.input);
  const auto f = pcf::parse_solution(read_text(a.solution), g);
  const auto verdict =
      a.tree ? pcf::verify_pc_tree(g, f) : pcf::verify_pc_forest(g, f);
  std::cout << verdict.describe() << '\n';
  return verdict.valid() ? 0 : kExitInvalid;
}

// --- oracle --------------------------------------------------------------

struct OracleArgs {
  std::string input;
  bool tree = false;
  int cap = -1;
};

int cmd_oracle(const OracleArgs& a) {
  const auto g = load_graph(a.input);
  const pcf::OracleResult r =
      a.tree ? pcf::brute_maxpt(g, a.cap < 0 ? pcf::kDefaultTreeOracleCap
                                             : a.cap)
             : pcf::brute_maxpf(g, a.cap < 0 ? pcf::kDefaultOracleCap : a.cap);
  const std::vector<std::string> comments{
      "opt " + std::to_string(r.optimum),
      "explored " + std::to_string(r.explored)};
  std::cout << pcf::serialize_solution(r.witness, comments);
  return 0;
}

// --- gen -----------------------------------------------------------------

struct GenArgs {
  std::string family = "random";
  int n = 6;
  int m = 8;
  int k = 2;
  int extra = 0;
  std::uint64_t seed = 1;
  std::string output;
  std::string backmap;
};

std::string backmap_text(const pcf::ReductionMap& map) {
  std::ostringstream os;
  os << "# " << map.family << ": " << map.target_problem << " opt = "
     << map.opt_scale << " * " << map.source_problem << " opt + "
     << map.opt_offset << '\n';
  for (pcf::EdgeId id = 0; id < map.target.num_edges(); ++id) {
    os << "b " << id + 1 << ' '
       << (map.source_edge[id] < 0 ? 0 : map.source_edge[id] + 1) << '\n';
  }
  return os.str();
}

int cmd_gen(const GenArgs& a) {
  std::optional<pcf::ReductionMap> map;
  pcf::ColoredMultigraph g;
  if (a.family == "random" || a.family == "simple") {
    g = pcf::gen_random(a.n, a.m, a.k, a.family == "simple", a.seed);
  } else if (a.family == "complete") {
    g = pcf::gen_complete(a.n, a.k, a.extra, a.seed);
  } else if (a.family == "lf2pcf") {
    map = pcf::reduce_lf_to_pcf2(pcf::gen_simple_graph(a.n, a.m, a.seed));
  } else if (a.family == "pcf3complete") {
    map = pcf::reduce_pcf2_to_pcf3_complete(
        pcf::gen_random(a.n, a.m, 2, true, a.seed));
  } else if (a.family == "lp2maxpt") {
    map = pcf::reduce_digraph_to_maxpt2(pcf::gen_digraph(a.n, a.m, a.seed));
  } else if (a.family == "tsp12") {
    map = pcf::gen_tsp12_doubling(pcf::gen_simple_graph(a.n, a.m, a.seed));
  } else {
    throw UsageError("unknown family '" + a.family + "'");
  }
  if (map) g = map->target;
  write_text(a.output, pcf::serialize_instance(g));
  if (!a.backmap.empty()) {
    if (!map) throw UsageError("--backmap needs a reduction family");
    write_text(a.backmap, backmap_text(*map));
  }
  return 0;
}

// --- bench ---------------------------------------------------------------

struct BenchArgs {
  pcf::BenchConfig cfg;
  std::string eps = "2";
  bool json = false;
  bool timing = false;
};

int thread_count() {
  if (const char* env = std::getenv("PCF_THREADS")) {
    try {
      const int t = std::stoi(env);
      if (t >= 1) return t;
    } catch (const std::exception&) {
    }
    throw UsageError("PCF_THREADS must be a positive integer");
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

int cmd_bench(BenchArgs a) {
  a.cfg.eps = pcf::parse_rational(a.eps);
  if (a.cfg.eps <= 0) throw UsageError("--eps must be positive");
  if (a.cfg.trials < 0) throw UsageError("--trials must be non-negative");
  const auto records = pcf::run_bench(a.cfg, thread_count());
  int failures = 0;
  int errors = 0;
  if (!a.json) {
    std::cout << "trial family n m k algorithm size opt guarantee status\n";
  }
  for (const auto& r : records) {
    failures += r.status == "fail";
    errors += r.status == "error";
    if (a.json) {
      json j = {{"trial", r.trial},     {"family", r.family},
                {"n", r.n},             {"m", r.m},
                {"k", r.k},             {"seed", r.seed},
                {"algorithm", r.algorithm}, {"size", r.size},
                {"status", r.status}};
      j["optimum"] = r.optimum ? json(*r.optimum) : json(nullptr);
      if (r.optimum && *r.optimum > 0) {
        j["ratio"] = std::to_string(r.size) + "/" + std::to_string(*r.optimum);
      } else {
        j["ratio"] = nullptr;
      }
      j["guarantee"] = r.guarantee.empty() ? json(nullptr) : json(r.guarantee);
      if (!r.message.empty()) j["message"] = r.message;
      if (a.timing) j["wall_ms"] = r.wall_ms;
      std::cout << j.dump() << '\n';
    } else {
      std::cout << r.trial << ' ' << r.family << ' ' << r.n << ' ' << r.m
                << ' ' << r.k << ' ' << r.algorithm << ' ' << r.size << ' '
                << (r.optimum ? std::to_string(*r.optimum) : "-") << ' '
                << (r.guarantee.empty() ? "-" : r.guarantee) << ' '
                << r.status;
      if (a.timing) {
        std::cout << ' ' << std::fixed << std::setprecision(3) << r.wall_ms
                  << "ms";
      }
      if (!r.message.empty()) std::cout << " # " << r.message;
      std::cout << '\n';
    }
  }
  if (!a.json) {
    std::cout << "# trials " << records.size() << " failures " << failures
              << " errors " << errors << '\n';
  }
  return failures + errors > 0 ? kExitInvalid : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximum-size properly colored forests and trees"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Run a solver on an instance");
  s->add_option("--input,-i", solve.input, "Instance file ('-' for stdin)")
      ->required();
  s->add_option("--alg", solve.alg, "Algorithm")
      ->check(CLI::IsMember(
          {"auto", "complete2", "general", "simplek", "maxpt"}));
  s->add_option("--eps", solve.eps, "Max-PT epsilon, e.g. 2 or 1/2");
  s->add_option("--partition", solve.partition,
                "Max-PT: file listing the vertices of V1");
  s->add_flag("--json", solve.json, "Print one JSON object");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Check a solution file");
  v->add_option("--input,-i", verify.input, "Instance file")->required();
  v->add_option("--solution,-s", verify.solution, "Solution file")
      ->required();
  v->add_flag("--tree", verify.tree, "Also require connectivity");

  OracleArgs oracle;
  auto* o = app.add_subcommand("oracle", "Exact optimum by enumeration");
  o->add_option("--input,-i", oracle.input, "Instance file")->required();
  o->add_flag("--tree", oracle.tree, "Maximum tree instead of forest");
  o->add_option("--cap", oracle.cap, "Largest edge count to enumerate");

  GenArgs gen;
  auto* gcmd = app.add_subcommand("gen", "Generate an instance");
  gcmd->add_option("--family", gen.family, "Instance family")
      ->check(CLI::IsMember({"random", "simple", "complete", "lf2pcf",
                             "pcf3complete", "lp2maxpt", "tsp12"}));
  gcmd->add_option("--n", gen.n, "Vertices (of the source for reductions)");
  gcmd->add_option("--m", gen.m, "Edges or arcs");
  gcmd->add_option("--k", gen.k, "Colors");
  gcmd->add_option("--extra", gen.extra,
                   "complete: parallel edges added on top");
  gcmd->add_option("--seed", gen.seed, "Random seed");
  gcmd->add_option("--output,-o", gen.output, "Instance file (default stdout)");
  gcmd->add_option("--backmap", gen.backmap,
                   "Reduction families: write the edge back-map here");

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Seeded ratio benchmark");
  b->add_option("--family", bench.cfg.family, "Instance family")
      ->check(CLI::IsMember({"random", "simple", "complete"}));
  b->add_option("--alg", bench.cfg.algorithm, "Algorithm")
      ->check(CLI::IsMember(
          {"auto", "complete2", "general", "simplek", "maxpt"}));
  b->add_option("--trials", bench.cfg.trials, "Number of trials");
  b->add_option("--nmax", bench.cfg.nmax, "Largest vertex count");
  b->add_option("--mmax", bench.cfg.mmax, "Largest edge count");
  b->add_option("--k", bench.cfg.k, "Colors");
  b->add_option("--seed", bench.cfg.seed, "Base seed");
  b->add_option("--eps", bench.eps, "Max-PT epsilon");
  b->add_option("--oracle-cap", bench.cfg.oracle_cap,
                "Largest edge count the oracle enumerates");
  b->add_flag("--check-ratio", bench.cfg.check_ratio,
              "Certify each result against the oracle");
  b->add_flag("--json", bench.json, "JSON lines output");
  b->add_flag("--timing", bench.timing, "Include wall time per trial");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (s->parsed()) return cmd_solve(solve);
    if (v->parsed()) return cmd_verify(verify);
    if (o->parsed()) return cmd_oracle(oracle);
    if (gcmd->parsed()) return cmd_gen(gen);
    if (b->parsed()) return cmd_bench(bench);
  } catch (const pcf::ParseError& e) {
    std::cerr << "pcf: parse error, " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "pcf: " << e.what() << '\n';
    return kExitUsage;
  } catch (const pcf::PreconditionError& e) {
    std::cerr << "pcf: precondition violated: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const pcf::InvalidArgument& e) {
    std::cerr << "pcf: " << e.what() << '\n';
    return kExitUsage;
  } catch (const pcf::CapExceeded& e) {
    std::cerr << "pcf: " << e.what() << '\n';
    return kExitCap;
  } catch (const std::exception& e) {
    std::cerr << "pcf: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}
