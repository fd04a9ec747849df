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

#ifndef GBSDKS_HARNESS_HPP_
#define GBSDKS_HARNESS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gbsdks/dks.hpp"
#include "gbsdks/graph.hpp"

namespace gbsdks {

enum class ExperimentKind { kFig1, kScalingN, kDistribution, kAnnealing, kRaw };

std::string to_string(ExperimentKind kind);

struct GraphSpec {
  // Either a graph file or an Erdos-Renyi generator.
  std::optional<std::string> path;
  // Generator sizes; several only for scaling-n.
  std::vector<int> n;
  double rho = 0.0;
  std::uint64_t seed = 0;
  // Vertices joined into a clique after loading or generating.
  std::vector<int> clique;
};

struct PuritySpec {
  int l = 1;
  double b = 1.0;
  double purity = 1.0;
};

struct NoisePoint {
  NoiseConfig noise;
  // e.g. "loss=0.3;purity=1"; names seeds and distribution columns.
  std::string label;
};

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::kFig1;
  GraphSpec graph;
  std::optional<int> k;
  bool k_sqrt_n = false;
  int steps = 1;
  int iterations = 1;
  std::vector<double> loss;
  std::vector<PuritySpec> purity;
  std::uint64_t master_seed = 0;
  std::string out;
  // 0 picks the hardware thread count. Never affects results.
  int workers = 1;
  AnnealSchedule anneal;

  // Throws ConfigError or CapacityError; runs before any heavy compute.
  void validate() const;
  // Each loss value with pure sources, then each purity spec without loss.
  std::vector<NoisePoint> noise_points() const;
  int resolve_k(int n) const;
};

// Parses the JSON config format; malformed JSON is a ParseError, bad fields
// a ConfigError naming the field.
ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::string& path);

// Graphs the config describes, one per entry of graph.n (or the file).
std::vector<Graph> resolve_graphs(const ExperimentConfig& config);

struct SeriesResult {
  std::string algorithm;
  double loss = 0.0;
  double purity = 1.0;
  std::vector<RunRecord> runs;
  // Per step over runs; variance is the unbiased sample variance (0 for a
  // single run).
  std::vector<double> mean;
  std::vector<double> variance;
};

struct ScalingRow {
  int n = 0;
  int k = 0;
  std::string algorithm;
  double loss = 0.0;
  double purity = 1.0;
  double mean_density = 0.0;
  double variance = 0.0;
  // GBS mean minus uniform mean at the same n; 0 on uniform rows.
  double advantage = 0.0;
};

struct DistributionColumn {
  std::string label;
  std::vector<double> weights;
};

struct ResultTable {
  ExperimentConfig config;
  // "# ..." provenance lines without trailing newlines.
  std::vector<std::string> header;
  std::vector<SeriesResult> series;
  std::vector<ScalingRow> scaling;
  std::vector<ClickPattern> patterns;
  std::vector<DistributionColumn> distribution;

  // Main output: trajectories, scaling rows or distribution columns.
  std::string to_csv() const;
  // Per-step aggregates; empty for scaling-n and distribution.
  std::string summary_csv() const;
};

// Runs the experiment and, when config.out is set, writes to_csv() there and
// summary_csv() next to it with a ".summary.csv" suffix.
ResultTable run_experiment(const ExperimentConfig& config);

// "%.12g" formatting used throughout the CSV outputs.
std::string format_number(double x);

}  // namespace gbsdks

#endif  // GBSDKS_HARNESS_HPP_
