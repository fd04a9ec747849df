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

// Command-line front end: graph generation, embedding report, exact subspace
// distributions, configured experiments and the greedy baseline.
//
// Exit status: 0 success, 1 usage or configuration problem, 2 runtime failure.

#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <Eigen/Dense>

#include "gbsdks/dks.hpp"
#include "gbsdks/errors.hpp"
#include "gbsdks/gaussian_state.hpp"
#include "gbsdks/graph.hpp"
#include "gbsdks/graph_io.hpp"
#include "gbsdks/harness.hpp"
#include "gbsdks/scaling.hpp"
#include "gbsdks/schmidt.hpp"

namespace {

using namespace gbsdks;

constexpr int kExitConfig = 1;
constexpr int kExitRuntime = 2;

// Bad user input, as opposed to a failure during computation.
bool is_input_error(const std::exception& e) {
  return is_configuration_error(e) ||
         dynamic_cast<const ParameterError*>(&e) != nullptr ||
         dynamic_cast<const SelectionError*>(&e) != nullptr ||
         dynamic_cast<const InfeasiblePurityError*>(&e) != nullptr;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << text;
}

struct GenArgs {
  int n = 0;
  double rho = 0.4;
  std::uint64_t seed = 0;
  std::vector<int> clique;
  std::string out;
};

int run_gen(const GenArgs& a) {
  if (a.n < 1 || a.n > 1'000'000) throw ConfigError("--n must be positive");
  if (!(a.rho >= 0.0 && a.rho <= 1.0)) {
    throw ConfigError("--rho must lie in [0, 1]");
  }
  Graph g = erdos_renyi(a.n, a.rho, a.seed);
  if (!a.clique.empty()) g = plant_clique(g, SubgraphSelection(a.clique, a.n));
  save_graph(g, a.out);
  std::cout << "wrote " << a.out << ": n=" << g.size()
            << " edges=" << g.edge_count()
            << " density=" << format_number(density(g)) << '\n';
  return 0;
}

struct DeviceArgs {
  std::string graph;
  int k = 0;
  double loss = 0.0;
  std::vector<double> purity;  // l b P
  std::optional<double> c;
  std::string out;
};

NoiseConfig noise_from(const DeviceArgs& a) {
  NoiseConfig noise{a.loss, std::nullopt};
  if (!a.purity.empty()) {
    if (a.purity.size() != 3 || a.purity[0] != std::round(a.purity[0])) {
      throw ConfigError("--purity takes three values: l b P");
    }
    noise.schmidt = schmidt_profile(static_cast<int>(a.purity[0]),
                                    a.purity[1], a.purity[2]);
  }
  noise.validate();
  return noise;
}

int run_embed(const DeviceArgs& a) {
  const Graph g = load_graph(a.graph);
  const double lambda_max = largest_adjacency_eigenvalue(g);
  double c = 0.0;
  if (a.c) {
    c = *a.c;
  } else if (a.k > 0) {
    const ScalingResult s = optimize_scaling(g, a.k, a.loss);
    c = s.c;
    if (!s.feasible) std::cout << "warning: k clicks out of reach\n";
  } else {
    throw ConfigError("embed needs --c or --k");
  }
  const CovarianceState state = embed_graph(g, c);  // validates c
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(g.adjacency());
  std::cout << "lambda_max " << format_number(lambda_max) << '\n'
            << "c_bound " << format_number(lambda_max > 0 ? 1.0 / lambda_max
                                                          : INFINITY)
            << '\n'
            << "c " << format_number(c) << '\n'
            << "expected_clicks " << format_number(expected_clicks(g, c, a.loss))
            << '\n'
            << "mean_photons "
            << format_number(state.mean_photon_numbers().sum()) << '\n'
            << "t";
  for (int i = eig.eigenvalues().size() - 1; i >= 0; --i) {
    std::cout << ' ' << format_number(c * std::abs(eig.eigenvalues()[i]));
  }
  std::cout << '\n';
  return 0;
}

int run_dist(const DeviceArgs& a) {
  const Graph g = load_graph(a.graph);
  const NoiseConfig noise = noise_from(a);
  if (g.size() > kMaxEnumerationModes) {
    throw CapacityError("dist enumerates at most " +
                        std::to_string(kMaxEnumerationModes) + " vertices");
  }
  SubspaceDistribution dist;
  if (a.c) {
    dist = enumerate_subspace(
        build_device_state(g, *a.c, noise.loss, noise.schmidt), a.k);
  } else {
    dist = PreparedGbs(g, a.k, noise).distribution();
  }
  emit(dist.to_csv(), a.out);
  return 0;
}

int run_greedy(const std::string& path, int k) {
  const Graph g = load_graph(path);
  std::cout << format_number(subgraph_density(g, greedy_peel(g, k))) << '\n';
  return 0;
}

int run_config(const std::string& path, std::optional<int> workers,
               const std::string& out) {
  ExperimentConfig config = load_config(path);
  if (workers) config.workers = *workers;
  if (!out.empty()) config.out = out;
  const ResultTable table = run_experiment(config);
  if (config.out.empty()) {
    std::cout << table.to_csv();
  } else {
    std::cerr << "wrote " << config.out << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gaussian boson sampling emulator for densest-k-subgraph search"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an Erdos-Renyi graph");
  gen_cmd->add_option("--n", gen.n, "Vertex count")->required();
  gen_cmd->add_option("--rho", gen.rho, "Edge density")->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed, "Generator seed");
  gen_cmd->add_option("--clique", gen.clique, "Vertices to join into a clique");
  gen_cmd->add_option("--out", gen.out, "Output graph file")->required();

  DeviceArgs embed;
  auto* embed_cmd =
      app.add_subcommand("embed", "Report the scaling bound and squeezing");
  embed_cmd->add_option("--graph", embed.graph, "Graph file")->required();
  embed_cmd->add_option("--c", embed.c, "Scaling parameter");
  embed_cmd->add_option("--k", embed.k, "Tune c for this click count");
  embed_cmd->add_option("--loss", embed.loss, "Uniform loss for tuning");

  DeviceArgs dist;
  auto* dist_cmd =
      app.add_subcommand("dist", "Exact k-click distribution as CSV");
  dist_cmd->add_option("--graph", dist.graph, "Graph file")->required();
  dist_cmd->add_option("--k", dist.k, "Click count")->required();
  dist_cmd->add_option("--loss", dist.loss, "Uniform loss");
  dist_cmd->add_option("--purity", dist.purity, "Schmidt modes, base and purity: l b P")
      ->expected(3);
  dist_cmd->add_option("--c", dist.c, "Fixed scaling (default: tuned)");
  dist_cmd->add_option("--out", dist.out, "Output CSV (default stdout)");

  std::string config_path;
  std::string run_out;
  std::optional<int> workers;
  auto* run_cmd = app.add_subcommand("run", "Run an experiment config");
  run_cmd->add_option("--config", config_path, "JSON config")->required();
  run_cmd->add_option("--workers", workers, "Worker threads (0 = all)");
  run_cmd->add_option("--out", run_out, "Override the output path");

  std::string greedy_graph;
  int greedy_k = 0;
  auto* greedy_cmd =
      app.add_subcommand("greedy", "Density of the greedy peeling baseline");
  greedy_cmd->add_option("--graph", greedy_graph, "Graph file")->required();
  greedy_cmd->add_option("--k", greedy_k, "Subgraph size")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*embed_cmd) return run_embed(embed);
    if (*dist_cmd) return run_dist(dist);
    if (*run_cmd) return run_config(config_path, workers, run_out);
    if (*greedy_cmd) return run_greedy(greedy_graph, greedy_k);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return is_input_error(e) ? kExitConfig : kExitRuntime;
  }
  return kExitConfig;
}
