// Copyright 2026 The gbsdks Authors.
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

#include <gtest/gtest.h>

#include "gbsdks/graph.hpp"
#include "gbsdks/graph_io.hpp"

namespace gbsdks {
namespace {

struct Result {
  int status = -1;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd =
      std::string(GBSDKS_CLI_PATH) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("gbsdks_cli_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string path(const std::string& name) const {
    return (dir_ / name).string();
  }

  std::filesystem::path dir_;
};

TEST_F(CliTest, GenWritesGraph) {
  const Result r = run("gen --n 40 --rho 0.35 --seed 3 --out " + path("g.json"));
  ASSERT_EQ(r.status, 0);
  const Graph g = load_graph(path("g.json"));
  EXPECT_EQ(g.size(), 40);
  EXPECT_GE(density(g), 0.25);
  EXPECT_LE(density(g), 0.47);
}

TEST_F(CliTest, GreedyPrintsDensity) {
  ASSERT_EQ(run("gen --n 12 --rho 0.4 --seed 1 --out " + path("g.json")).status,
            0);
  const Result r = run("greedy --graph " + path("g.json") + " --k 4");
  ASSERT_EQ(r.status, 0);
  const double d = std::stod(r.out);
  EXPECT_GE(d, 0.0);
  EXPECT_LE(d, 1.0);
}

TEST_F(CliTest, EmbedReportsBound) {
  ASSERT_EQ(run("gen --n 10 --rho 0.5 --seed 1 --out " + path("g.json")).status,
            0);
  const Result r = run("embed --graph " + path("g.json") + " --k 3");
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("lambda_max "), std::string::npos);
  EXPECT_NE(r.out.find("expected_clicks "), std::string::npos);
}

TEST_F(CliTest, DistSumsToOne) {
  ASSERT_EQ(run("gen --n 7 --rho 0.5 --seed 2 --out " + path("g.json")).status,
            0);
  const Result r =
      run("dist --graph " + path("g.json") + " --k 2 --purity 2 1 0.8");
  ASSERT_EQ(r.status, 0);
  std::istringstream in(r.out);
  std::string line;
  double sum = 0.0;
  int rows = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line.rfind("pattern", 0) == 0) continue;
    sum += std::stod(line.substr(line.find(',') + 1));
    ++rows;
  }
  EXPECT_EQ(rows, 21);
  EXPECT_NEAR(sum, 1.0, 1e-9);
}

TEST_F(CliTest, RunWritesRows) {
  std::ofstream(path("cfg.json"))
      << R"({"kind": "fig1", "graph": {"n": 8, "rho": 0.5, "seed": 4},
             "k": 3, "steps": 3, "iterations": 2, "loss": [0]})";
  const Result r = run("run --config " + path("cfg.json") + " --out " +
                       path("out.csv"));
  ASSERT_EQ(r.status, 0);
  std::ifstream in(path("out.csv"));
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '#') ++rows;
  }
  // Header plus 2 x 3 rows for each of uniform, gbs and greedy.
  EXPECT_EQ(rows, 1 + 3 * 6);
  EXPECT_TRUE(std::filesystem::exists(path("out.csv.summary.csv")));
}

TEST_F(CliTest, ErrorsExitWithOne) {
  EXPECT_EQ(run("frobnicate").status, 1);
  EXPECT_EQ(run("greedy --k 3").status, 1);
  EXPECT_EQ(run("greedy --graph " + path("missing.json") + " --k 3").status, 1);
  std::ofstream(path("bad.json")) << "{ not json";
  EXPECT_EQ(run("run --config " + path("bad.json")).status, 1);
}

}  // namespace
}  // namespace gbsdks
