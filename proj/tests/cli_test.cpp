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

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "pcf/forest.hpp"
#include "pcf/io.hpp"

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
  const std::string cmd =
      env + " '" PCF_CLI_PATH "' " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  for (std::size_t got; (got = fread(buf, 1, sizeof buf, pipe)) > 0;) {
    r.out.append(buf, got);
  }
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string sample(const std::string& name) {
  return std::string(PCF_SAMPLES_DIR) + "/" + name;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string first_line(const std::string& text) {
  return text.substr(0, text.find('\n'));
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("pcf_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string temp(const std::string& name) const {
    return (dir_ / name).string();
  }

  fs::path dir_;
};

TEST_F(CliTest, Complete2MatchesOracle) {
  const auto solve = run("solve --alg complete2 -i " + sample("complete2_k4.pcf"));
  ASSERT_EQ(solve.code, 0);
  EXPECT_EQ(first_line(solve.out), "s pcf 3");
  const auto oracle = run("oracle -i " + sample("complete2_k4.pcf"));
  ASSERT_EQ(oracle.code, 0);
  EXPECT_EQ(first_line(oracle.out), "s pcf 3");
  EXPECT_NE(oracle.out.find("# opt 3"), std::string::npos);
}

TEST_F(CliTest, SolutionsVerify) {
  for (const char* alg : {"auto", "general", "complete2"}) {
    const auto solve =
        run(std::string("solve --alg ") + alg + " -i " +
            sample("complete2_k4.pcf"));
    ASSERT_EQ(solve.code, 0) << alg;
    const std::string sol = temp(std::string(alg) + ".sol");
    std::ofstream(sol) << solve.out;
    const auto verify =
        run("verify -i " + sample("complete2_k4.pcf") + " -s " + sol);
    EXPECT_EQ(verify.code, 0) << alg;
    EXPECT_EQ(verify.out, "valid\n");
  }
}

TEST_F(CliTest, GeneralOnEdgelessInstance) {
  const auto r = run("solve --alg general -i " + sample("edgeless.pcf"));
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(first_line(r.out), "s pcf 0");
}

TEST_F(CliTest, ReadsStandardInput) {
  const auto r = run("solve -i - < " + sample("triangle3.pcf"));
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(first_line(r.out), "s pcf 2");
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run("solve --alg complete2 -i " + sample("path5.pcf")).code, 3);
  EXPECT_EQ(run("solve -i " + sample("loop.pcf")).code, 2);
  EXPECT_EQ(run("solve -i " + temp("missing.pcf")).code, 2);
  EXPECT_EQ(run("solve --alg nope -i " + sample("path5.pcf")).code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("solve --alg simplek -i " + sample("multi_k4.pcf")).code, 3);
  EXPECT_EQ(run("oracle --cap 3 -i " + sample("multi_k4.pcf")).code, 4);
  EXPECT_EQ(run("solve --alg maxpt -i " + sample("complete_k3_n10.pcf")).code,
            3);
  EXPECT_EQ(run("solve --eps 0 -i " + sample("path5.pcf")).code, 2);
}

TEST_F(CliTest, VerifyReportsViolations) {
  const auto ok = run("verify -i " + sample("triangle3.pcf") + " -s " +
                      sample("triangle3_valid.sol"));
  EXPECT_EQ(ok.code, 0);
  const auto bad = run("verify -i " + sample("triangle3.pcf") + " -s " +
                       sample("triangle3_cycle.sol"));
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(bad.out, "not-forest (edges 1 2 3)\n");
}

TEST_F(CliTest, JsonOutput) {
  const auto r = run("solve --json -i " + sample("multi_k4.pcf"));
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["algorithm"], "general");
  EXPECT_EQ(j["size"].get<int>(), static_cast<int>(j["forest"].size()));
  EXPECT_TRUE(j["upper_bounds"].contains("sum-of-max-matchings"));
  EXPECT_GE(j["upper_bounds"]["coverable-minus-one"].get<int>(),
            j["size"].get<int>());
}

TEST_F(CliTest, MaxptWithPartition) {
  const std::string in = sample("complete_k3_n10.pcf");
  const auto r = run("solve --alg maxpt --partition " +
                     sample("partition_v1.txt") + " -i " + in);
  ASSERT_EQ(r.code, 0);
  const auto g = pcf::parse_instance(read_file(in));
  const auto f = pcf::parse_solution(r.out, g);
  EXPECT_TRUE(pcf::verify_pc_tree(g, f).valid());
  EXPECT_GE(f.size(), 2u);
}

TEST_F(CliTest, GenIsDeterministic) {
  const std::string args = "gen --family random --n 7 --m 12 --k 3 --seed 5";
  const auto a = run(args);
  const auto b = run(args);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NO_THROW(pcf::parse_instance(a.out));
  EXPECT_NE(run("gen --family random --n 7 --m 12 --k 3 --seed 6").out,
            a.out);
}

TEST_F(CliTest, GenWritesBackMap) {
  const std::string inst = temp("lf.pcf");
  const std::string map = temp("lf.map");
  const auto r = run("gen --family lf2pcf --n 4 --m 3 --seed 1 -o " + inst +
                     " --backmap " + map);
  ASSERT_EQ(r.code, 0);
  const auto g = pcf::parse_instance(read_file(inst));
  EXPECT_EQ(g.num_vertices(), 12);
  const auto text = lines(read_file(map));
  ASSERT_EQ(static_cast<int>(text.size()), g.num_edges() + 1);
  EXPECT_EQ(text[0], "# lf2pcf: max-pf opt = 1 * max-lf opt + 8");
  EXPECT_EQ(text[1], "b 1 1");
  EXPECT_EQ(text.back(), "b 14 0");
  EXPECT_EQ(run("gen --family random --backmap " + map).code, 2);
}

TEST_F(CliTest, BenchWithoutTrials) {
  const auto r = run("bench --trials 0");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "trial family n m k algorithm size opt guarantee status\n"
            "# trials 0 failures 0 errors 0\n");
}

TEST_F(CliTest, BenchJsonLines) {
  const std::string args =
      "bench --family random --k 4 --trials 40 --nmax 7 --mmax 14 "
      "--seed 9 --check-ratio --json";
  const auto r = run(args);
  ASSERT_EQ(r.code, 0);
  const auto records = lines(r.out);
  ASSERT_EQ(records.size(), 40u);
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto j = nlohmann::json::parse(records[i]);
    EXPECT_EQ(j["trial"].get<std::size_t>(), i);
    EXPECT_EQ(j["status"], "pass");
    EXPECT_LE(j["size"].get<int>(), j["optimum"].get<int>());
    if (j["optimum"].get<int>() > 0) {
      EXPECT_EQ(j["ratio"], std::to_string(j["size"].get<int>()) + "/" +
                                std::to_string(j["optimum"].get<int>()));
    }
  }
  EXPECT_EQ(run(args, "PCF_THREADS=1").out, r.out);
  EXPECT_EQ(run(args, "PCF_THREADS=3").out, r.out);
  EXPECT_EQ(run(args, "PCF_THREADS=zero").code, 2);
}

TEST_F(CliTest, BenchSimplekText) {
  const auto r = run(
      "bench --family simple --alg simplek --k 2 --trials 30 --nmax 8 "
      "--seed 4 --check-ratio");
  ASSERT_EQ(r.code, 0);
  const auto out = lines(r.out);
  ASSERT_EQ(out.size(), 32u);
  EXPECT_EQ(out.back(), "# trials 30 failures 0 errors 0");
}

}  // namespace
