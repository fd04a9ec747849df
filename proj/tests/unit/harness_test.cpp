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

#include "gbsdks/harness.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "gbsdks/errors.hpp"
#include "gbsdks/graph_io.hpp"

namespace gbsdks {
namespace {

std::vector<std::string> data_rows(const std::string& csv) {
  std::vector<std::string> rows;
  std::istringstream in(csv);
  std::string line;
  bool seen_header = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!seen_header) {
      seen_header = true;
      continue;
    }
    rows.push_back(line);
  }
  return rows;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

TEST(FormatNumber, TwelveSignificantDigits) {
  EXPECT_EQ(format_number(0.5), "0.5");
  EXPECT_EQ(format_number(1.0 / 3.0), "0.333333333333");
  EXPECT_EQ(format_number(0.0), "0");
}

TEST(ParseConfig, FullDocument) {
  const ExperimentConfig c = parse_config(R"({
    "kind": "annealing",
    "graph": {"n": 12, "rho": 0.4, "seed": 7, "clique": [0, 1, 2]},
    "k": 4, "steps": 30, "iterations": 5,
    "loss": [0, 0.3],
    "purity": [{"l": 2, "b": 1, "P": 0.7}],
    "master_seed": 99, "workers": 2,
    "anneal": {"t0": 0.1, "alpha": 0.9}
  })");
  EXPECT_EQ(c.kind, ExperimentKind::kAnnealing);
  EXPECT_EQ(c.graph.n, std::vector<int>{12});
  EXPECT_EQ(c.graph.clique, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(c.k, 4);
  EXPECT_EQ(c.master_seed, 99u);
  EXPECT_DOUBLE_EQ(c.anneal.alpha, 0.9);
  const std::vector<NoisePoint> points = c.noise_points();
  ASSERT_EQ(points.size(), 3u);
  EXPECT_EQ(points[0].label, "loss=0;purity=1");
  EXPECT_EQ(points[1].label, "loss=0.3;purity=1");
  EXPECT_EQ(points[2].label, "loss=0;purity=0.7;l=2;b=1");
  EXPECT_NEAR(points[2].noise.purity(), 0.7, 1e-9);
}

TEST(ParseConfig, SqrtRule) {
  const ExperimentConfig c = parse_config(
      R"({"kind": "scaling-n", "graph": {"n": [9, 16, 24], "rho": 0.3},
          "k_rule": "sqrt_n", "loss": [0]})");
  EXPECT_EQ(c.resolve_k(9), 3);
  EXPECT_EQ(c.resolve_k(16), 4);
  EXPECT_EQ(c.resolve_k(24), 5);
}

TEST(ParseConfig, MalformedJsonReportsLine) {
  try {
    parse_config("{\n  \"kind\": \"fig1\",\n  oops\n}");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos)
        << e.what();
  }
}

TEST(ParseConfig, SchemaErrors) {
  const auto bad = [](const std::string& text) {
    EXPECT_THROW(parse_config(text), ConfigError) << text;
  };
  bad(R"({"kind": "fig1", "graph": {"n": 8, "rho": 0.5}, "k": 3, "loss": [0], "extra": 1})");
  bad(R"({"kind": "fig2", "graph": {"n": 8, "rho": 0.5}, "k": 3, "loss": [0]})");
  bad(R"({"kind": "fig1", "graph": {"n": 8, "rho": 0.5}, "k": "3", "loss": [0]})");
  bad(R"({"kind": "fig1", "graph": {"n": 8, "rho": 0.5}, "k": 3})");
  bad(R"({"kind": "fig1", "graph": {"n": 8, "rho": 0.5}, "k": 3, "loss": [1.5]})");
  bad(R"({"kind": "fig1", "graph": {"n": 8, "rho": 0.5}, "k": 3, "k_rule": "sqrt_n", "loss": [0]})");
  bad(R"({"kind": "fig1", "graph": {"n": [8, 9], "rho": 0.5}, "k": 3, "loss": [0]})");
  bad(R"({"kind": "fig1", "graph": {"n": 8, "rho": 0.5}, "k": 3, "purity": [{"l": 2, "b": 1, "P": 0.3}]})");
  bad(R"({"kind": "fig1", "graph": {"n": 8, "rho": 0.5}, "k": 3, "loss": [0], "steps": 0})");
  bad(R"({"kind": "fig1", "graph": {"n": 8}, "k": 3, "loss": [0], "anneal": {"beta": 1}})");
  EXPECT_THROW(load_config(temp_path("gbsdks_missing_config.json")), ConfigError);
}

TEST(RunExperiment, CapacityGuardsAreConfigurationErrors) {
  const auto expect_config_error = [](const std::string& text) {
    try {
      run_experiment(parse_config(text));
      ADD_FAILURE() << "no error for " << text;
    } catch (const std::exception& e) {
      EXPECT_TRUE(is_configuration_error(e)) << e.what();
    }
  };
  expect_config_error(
      R"({"kind": "fig1", "graph": {"n": 70, "rho": 0.1}, "k": 3, "loss": [0]})");
  expect_config_error(
      R"({"kind": "distribution", "graph": {"n": 15, "rho": 0.3}, "k": 3, "loss": [0]})");
  expect_config_error(
      R"({"kind": "fig1", "graph": {"n": 6, "rho": 0.3}, "k": 7, "loss": [0]})");
}

TEST(RunExperiment, CompleteGraphFig1) {
  const std::string graph_path = temp_path("gbsdks_k5.json");
  save_graph(complete_graph(5), graph_path);
  const ExperimentConfig c = parse_config(
      R"({"kind": "fig1", "graph": {"path": ")" + graph_path +
      R"("}, "k": 3, "steps": 4, "iterations": 3, "loss": [0, 0.5]})");
  const ResultTable t = run_experiment(c);
  // uniform, gbs per loss, greedy.
  ASSERT_EQ(t.series.size(), 4u);
  for (const SeriesResult& s : t.series) {
    for (double m : s.mean) EXPECT_DOUBLE_EQ(m, 1.0);
    for (double v : s.variance) EXPECT_DOUBLE_EQ(v, 0.0);
  }
  const std::vector<std::string> rows = data_rows(t.to_csv());
  EXPECT_EQ(rows.size(), 4u * 3u * 4u);
  EXPECT_EQ(data_rows(t.summary_csv()).size(), 4u * 4u);
  std::filesystem::remove(graph_path);
}

TEST(RunExperiment, SeriesLayouts) {
  const std::string base =
      R"("graph": {"n": 9, "rho": 0.5, "seed": 3}, "k": 3, "steps": 5,
         "iterations": 2, "loss": [0.2], "purity": [{"l": 2, "b": 1, "P": 0.8}])";
  const ResultTable anneal =
      run_experiment(parse_config("{\"kind\": \"annealing\", " + base + "}"));
  ASSERT_EQ(anneal.series.size(), 5u);
  EXPECT_EQ(anneal.series[0].algorithm, "sa-classical");
  EXPECT_EQ(anneal.series[1].algorithm, "sa-gbs");
  EXPECT_EQ(anneal.series[4].algorithm, "greedy");
  const ResultTable raw =
      run_experiment(parse_config("{\"kind\": \"raw\", " + base + "}"));
  ASSERT_EQ(raw.series.size(), 4u);
  EXPECT_EQ(raw.series[0].algorithm, "uniform");
  EXPECT_EQ(raw.series[1].algorithm, "raw-gbs");
  EXPECT_DOUBLE_EQ(raw.series[1].loss, 0.2);
  EXPECT_NEAR(raw.series[2].purity, 0.8, 1e-9);
  EXPECT_EQ(data_rows(raw.to_csv()).size(), 4u * 2u * 5u);
}

TEST(RunExperiment, DistributionColumnsAreNormalised) {
  const ResultTable t = run_experiment(parse_config(
      R"({"kind": "distribution", "graph": {"n": 8, "rho": 0.5, "seed": 1},
          "k": 3, "loss": [0, 0.4], "purity": [{"l": 2, "b": 1, "P": 0.7}]})"));
  ASSERT_EQ(t.distribution.size(), 3u);
  EXPECT_EQ(t.patterns.size(), 56u);
  for (const DistributionColumn& col : t.distribution) {
    double sum = 0.0;
    for (double w : col.weights) sum += w;
    EXPECT_NEAR(sum, 1.0, 1e-10) << col.label;
  }
  const std::string csv = t.to_csv();
  EXPECT_NE(csv.find("pattern,loss=0;purity=1,loss=0.4;purity=1,"
                     "loss=0;purity=0.7;l=2;b=1\n"),
            std::string::npos);
  EXPECT_EQ(data_rows(csv).size(), 56u);
  EXPECT_TRUE(t.summary_csv().empty());
}

TEST(RunExperiment, WorkerCountDoesNotChangeOutput) {
  const std::string text =
      R"({"kind": "annealing", "graph": {"n": 10, "rho": 0.5, "seed": 2},
          "k": 4, "steps": 6, "iterations": 4, "loss": [0, 0.3],
          "master_seed": 5, "workers": WORKERS})";
  std::string one = text, many = text;
  one.replace(one.find("WORKERS"), 7, "1");
  many.replace(many.find("WORKERS"), 7, "4");
  const ResultTable a = run_experiment(parse_config(one));
  const ResultTable b = run_experiment(parse_config(many));
  EXPECT_EQ(a.to_csv(), b.to_csv());
  EXPECT_EQ(a.summary_csv(), b.summary_csv());
}

TEST(RunExperiment, MasterSeedMatters) {
  const std::string text =
      R"({"kind": "fig1", "graph": {"n": 10, "rho": 0.5, "seed": 2},
          "k": 4, "steps": 6, "iterations": 4, "loss": [0], "master_seed": SEED})";
  std::string a = text, b = text;
  a.replace(a.find("SEED"), 4, "1");
  b.replace(b.find("SEED"), 4, "2");
  EXPECT_NE(run_experiment(parse_config(a)).to_csv(),
            run_experiment(parse_config(b)).to_csv());
}

TEST(RunExperiment, ScalingRows) {
  const ResultTable t = run_experiment(parse_config(
      R"({"kind": "scaling-n", "graph": {"n": [9, 12], "rho": 0.4, "seed": 1},
          "k_rule": "sqrt_n", "steps": 40, "iterations": 3, "loss": [0, 0.5]})"));
  ASSERT_EQ(t.scaling.size(), 6u);
  for (const ScalingRow& r : t.scaling) {
    EXPECT_GE(r.mean_density, 0.0);
    EXPECT_LE(r.mean_density, 1.0);
    EXPECT_GE(r.variance, 0.0);
    if (r.algorithm == "uniform") {
      EXPECT_DOUBLE_EQ(r.advantage, 0.0);
    }
  }
  EXPECT_EQ(t.scaling[0].algorithm, "uniform");
  EXPECT_EQ(t.scaling[0].k, 3);
  EXPECT_EQ(t.scaling[3].k, 3);
  EXPECT_NEAR(t.scaling[1].advantage,
              t.scaling[1].mean_density - t.scaling[0].mean_density, 1e-12);
}

TEST(RunExperiment, WritesOutputFiles) {
  const std::string out = temp_path("gbsdks_harness_out.csv");
  ExperimentConfig c = parse_config(
      R"({"kind": "fig1", "graph": {"n": 8, "rho": 0.5, "seed": 2},
          "k": 3, "steps": 2, "iterations": 2, "loss": [0]})");
  c.out = out;
  const ResultTable t = run_experiment(c);
  std::ifstream main_file(out), summary_file(out + ".summary.csv");
  std::stringstream a, b;
  a << main_file.rdbuf();
  b << summary_file.rdbuf();
  EXPECT_EQ(a.str(), t.to_csv());
  EXPECT_EQ(b.str(), t.summary_csv());
  EXPECT_NE(a.str().find("# kind: fig1\n"), std::string::npos);
  std::filesystem::remove(out);
  std::filesystem::remove(out + ".summary.csv");
}

}  // namespace
}  // namespace gbsdks
