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

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>
#include <utility>

#include <nlohmann/json.hpp>

#include "gbsdks/errors.hpp"
#include "gbsdks/graph_io.hpp"

namespace gbsdks {
namespace {

using nlohmann::json;

std::size_t line_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') ++line;
  }
  return line;
}

void check_keys(const json& obj, const std::set<std::string>& allowed,
                const std::string& where) {
  for (const auto& item : obj.items()) {
    if (!allowed.count(item.key())) {
      throw ConfigError(where + "unknown key '" + item.key() + "'");
    }
  }
}

long long get_int(const json& v, const std::string& field) {
  if (!v.is_number_integer()) {
    throw ConfigError("config: '" + field + "' must be an integer");
  }
  return v.get<long long>();
}

double get_number(const json& v, const std::string& field) {
  if (!v.is_number()) {
    throw ConfigError("config: '" + field + "' must be a number");
  }
  return v.get<double>();
}

std::string get_string(const json& v, const std::string& field) {
  if (!v.is_string()) {
    throw ConfigError("config: '" + field + "' must be a string");
  }
  return v.get<std::string>();
}

std::vector<double> get_numbers(const json& v, const std::string& field) {
  if (!v.is_array()) {
    throw ConfigError("config: '" + field + "' must be an array of numbers");
  }
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(get_number(v[i], field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

ExperimentKind parse_kind(const std::string& s) {
  if (s == "fig1" || s == "fig1-style") return ExperimentKind::kFig1;
  if (s == "scaling-n") return ExperimentKind::kScalingN;
  if (s == "distribution") return ExperimentKind::kDistribution;
  if (s == "annealing") return ExperimentKind::kAnnealing;
  if (s == "raw") return ExperimentKind::kRaw;
  throw ConfigError("config: unknown kind '" + s + "'");
}

std::string join_numbers(const std::vector<double>& xs) {
  std::string out;
  for (double x : xs) out += (out.empty() ? "" : " ") + format_number(x);
  return out;
}

std::string noise_label(double loss, double purity) {
  return "loss=" + format_number(loss) + ";purity=" + format_number(purity);
}

// Runs tasks on `workers` threads; rethrows the failure of the lowest-indexed
// task so errors do not depend on scheduling.
void run_tasks(std::vector<std::function<void()>>& tasks, int workers) {
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        tasks[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int threads =
      std::max(1, std::min<int>(workers, static_cast<int>(tasks.size())));
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

int worker_count(const ExperimentConfig& config) {
  if (config.workers > 0) return config.workers;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Mean and unbiased variance, shifted by the first value so that identical
// inputs give exactly zero variance.
std::pair<double, double> mean_variance(const std::vector<double>& xs) {
  const double count = static_cast<double>(xs.size());
  const double x0 = xs.front();
  double sum = 0.0;
  double sq = 0.0;
  for (double x : xs) {
    sum += x - x0;
    sq += (x - x0) * (x - x0);
  }
  const double var =
      xs.size() > 1 ? std::max(0.0, (sq - sum * sum / count) / (count - 1.0))
                    : 0.0;
  return {x0 + sum / count, var};
}

void aggregate(SeriesResult& s) {
  const std::size_t steps = s.runs.front().trajectory.size();
  s.mean.assign(steps, 0.0);
  s.variance.assign(steps, 0.0);
  std::vector<double> column(s.runs.size());
  for (std::size_t t = 0; t < steps; ++t) {
    for (std::size_t r = 0; r < s.runs.size(); ++r) {
      column[r] = s.runs[r].trajectory[t];
    }
    std::tie(s.mean[t], s.variance[t]) = mean_variance(column);
  }
}

// Mean density over `samples` draws from `draw`.
template <typename Draw>
double mean_sampled_density(const Graph& g, int samples, Draw&& draw) {
  double sum = 0.0;
  for (int s = 0; s < samples; ++s) {
    sum += subgraph_density(g, SubgraphSelection(draw(), g.size()));
  }
  return sum / samples;
}

std::vector<int> uniform_k_subset(int n, int k, Rng& rng) {
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i;
  for (int i = 0; i < k; ++i) {
    std::uniform_int_distribution<int> pick(i, n - 1);
    std::swap(pool[i], pool[pick(rng)]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw Error("failed writing '" + path + "'");
}

std::vector<std::string> config_header(const ExperimentConfig& c) {
  std::vector<std::string> h;
  h.push_back("# kind: " + to_string(c.kind));
  if (c.graph.path) {
    h.push_back("# graph: path=" + *c.graph.path);
  } else {
    std::string ns;
    for (int n : c.graph.n) ns += (ns.empty() ? "" : " ") + std::to_string(n);
    h.push_back("# graph: n=" + ns + " rho=" + format_number(c.graph.rho) +
                " seed=" + std::to_string(c.graph.seed));
  }
  if (!c.graph.clique.empty()) {
    std::string vs;
    for (int v : c.graph.clique) vs += (vs.empty() ? "" : " ") + std::to_string(v);
    h.push_back("# clique: " + vs);
  }
  h.push_back("# k: " + (c.k ? std::to_string(*c.k) : std::string("sqrt_n")));
  h.push_back("# steps: " + std::to_string(c.steps));
  h.push_back("# iterations: " + std::to_string(c.iterations));
  h.push_back("# master_seed: " + std::to_string(c.master_seed));
  h.push_back("# loss: " + join_numbers(c.loss));
  for (const auto& p : c.purity) {
    h.push_back("# purity: l=" + std::to_string(p.l) + " b=" +
                format_number(p.b) + " P=" + format_number(p.purity));
  }
  if (c.kind == ExperimentKind::kAnnealing) {
    h.push_back("# anneal: t0=" + format_number(c.anneal.t0) +
                " alpha=" + format_number(c.anneal.alpha));
  }
  return h;
}

std::string c_line(const std::string& label, const PreparedGbs& device) {
  const ScalingResult& s = device.scaling();
  return "# c[" + label + "]: " + format_number(s.c) +
         (s.feasible ? "" : " (k clicks out of reach)");
}

}  // namespace

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::kFig1:
      return "fig1";
    case ExperimentKind::kScalingN:
      return "scaling-n";
    case ExperimentKind::kDistribution:
      return "distribution";
    case ExperimentKind::kAnnealing:
      return "annealing";
    case ExperimentKind::kRaw:
      return "raw";
  }
  return "unknown";
}

int ExperimentConfig::resolve_k(int n) const {
  if (k) return *k;
  return static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
}

std::vector<NoisePoint> ExperimentConfig::noise_points() const {
  std::vector<NoisePoint> points;
  for (double l : loss) {
    points.push_back({NoiseConfig{l, std::nullopt}, noise_label(l, 1.0)});
  }
  for (const auto& p : purity) {
    NoiseConfig noise;
    noise.schmidt = schmidt_profile(p.l, p.b, p.purity);
    points.push_back({noise, "loss=0;purity=" + format_number(p.purity) +
                                 ";l=" + std::to_string(p.l) +
                                 ";b=" + format_number(p.b)});
  }
  return points;
}

void ExperimentConfig::validate() const {
  if (iterations < 1) throw ConfigError("config: iterations must be >= 1");
  if (steps < 1) throw ConfigError("config: steps must be >= 1");
  if (workers < 0) throw ConfigError("config: workers must be >= 0");
  if (loss.empty() && purity.empty()) {
    throw ConfigError("config: the noise grid (loss, purity) is empty");
  }
  for (double l : loss) {
    if (!(l >= 0.0 && l <= 1.0)) {
      throw ConfigError("config: loss " + format_number(l) +
                        " outside [0, 1]");
    }
  }
  for (const auto& p : purity) {
    try {
      schmidt_profile(p.l, p.b, p.purity);
    } catch (const Error& e) {
      throw ConfigError(std::string("config: purity entry: ") + e.what());
    }
  }
  if (!(anneal.t0 > 0.0)) throw ConfigError("config: anneal.t0 must be > 0");
  if (!(anneal.alpha > 0.0 && anneal.alpha < 1.0)) {
    throw ConfigError("config: anneal.alpha must lie in (0, 1)");
  }
  if (!k && !k_sqrt_n) throw ConfigError("config: set k or k_rule");
  if (graph.path.has_value() == !graph.n.empty()) {
    throw ConfigError("config: graph needs exactly one of 'path' or 'n'");
  }
  if (graph.n.size() > 1 && kind != ExperimentKind::kScalingN) {
    throw ConfigError("config: a list of graph sizes needs kind scaling-n");
  }
  if (kind == ExperimentKind::kScalingN && graph.path) {
    throw ConfigError("config: scaling-n needs generated graphs");
  }
  if (!(graph.rho >= 0.0 && graph.rho <= 1.0)) {
    throw ConfigError("config: graph.rho must lie in [0, 1]");
  }
  for (int n : graph.n) {
    if (n < 2) throw ConfigError("config: graph sizes must be >= 2");
    if (n > kMaxSamplingVertices) {
      throw CapacityError("config: n = " + std::to_string(n) +
                          " exceeds the sampling limit of " +
                          std::to_string(kMaxSamplingVertices));
    }
    if (kind == ExperimentKind::kDistribution && n > kMaxEnumerationModes) {
      throw CapacityError("config: exact distributions need n <= " +
                          std::to_string(kMaxEnumerationModes));
    }
    const int kk = resolve_k(n);
    if (kk < 2 || kk > n || (kind == ExperimentKind::kAnnealing && kk == n)) {
      throw ConfigError("config: k = " + std::to_string(kk) +
                        " unusable for n = " + std::to_string(n));
    }
  }
}

ExperimentConfig parse_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("config: malformed JSON at line " +
                     std::to_string(line_of(text, e.byte)) + ": " + e.what());
  }
  if (!doc.is_object()) throw ParseError("config: top level must be an object");
  check_keys(doc,
             {"kind", "graph", "k", "k_rule", "steps", "iterations", "loss",
              "purity", "master_seed", "out", "workers", "anneal"},
             "config: ");
  ExperimentConfig c;
  if (!doc.contains("kind")) throw ConfigError("config: 'kind' is required");
  c.kind = parse_kind(get_string(doc["kind"], "kind"));

  if (!doc.contains("graph") || !doc["graph"].is_object()) {
    throw ConfigError("config: 'graph' object is required");
  }
  const json& g = doc["graph"];
  check_keys(g, {"path", "n", "rho", "seed", "clique"}, "config: graph: ");
  if (g.contains("path")) c.graph.path = get_string(g["path"], "graph.path");
  if (g.contains("n")) {
    if (g["n"].is_array()) {
      for (std::size_t i = 0; i < g["n"].size(); ++i) {
        c.graph.n.push_back(static_cast<int>(
            get_int(g["n"][i], "graph.n[" + std::to_string(i) + "]")));
      }
      if (c.graph.n.empty()) throw ConfigError("config: graph.n is empty");
    } else {
      c.graph.n.push_back(static_cast<int>(get_int(g["n"], "graph.n")));
    }
  }
  if (g.contains("rho")) c.graph.rho = get_number(g["rho"], "graph.rho");
  if (g.contains("seed")) {
    c.graph.seed = static_cast<std::uint64_t>(get_int(g["seed"], "graph.seed"));
  }
  if (g.contains("clique")) {
    if (!g["clique"].is_array()) {
      throw ConfigError("config: 'graph.clique' must be an array");
    }
    for (std::size_t i = 0; i < g["clique"].size(); ++i) {
      c.graph.clique.push_back(static_cast<int>(get_int(
          g["clique"][i], "graph.clique[" + std::to_string(i) + "]")));
    }
  }

  if (doc.contains("k") && doc.contains("k_rule")) {
    throw ConfigError("config: give 'k' or 'k_rule', not both");
  }
  if (doc.contains("k")) c.k = static_cast<int>(get_int(doc["k"], "k"));
  if (doc.contains("k_rule")) {
    const std::string rule = get_string(doc["k_rule"], "k_rule");
    if (rule != "sqrt_n") {
      throw ConfigError("config: unknown k_rule '" + rule + "'");
    }
    c.k_sqrt_n = true;
  }
  if (doc.contains("steps")) c.steps = static_cast<int>(get_int(doc["steps"], "steps"));
  if (doc.contains("iterations")) {
    c.iterations = static_cast<int>(get_int(doc["iterations"], "iterations"));
  }
  if (doc.contains("loss")) c.loss = get_numbers(doc["loss"], "loss");
  if (doc.contains("purity")) {
    const json& ps = doc["purity"];
    if (!ps.is_array()) throw ConfigError("config: 'purity' must be an array");
    for (std::size_t i = 0; i < ps.size(); ++i) {
      const std::string where = "purity[" + std::to_string(i) + "]";
      if (!ps[i].is_object()) {
        throw ConfigError("config: '" + where + "' must be an object");
      }
      check_keys(ps[i], {"l", "b", "P"}, "config: " + where + ": ");
      for (const char* key : {"l", "b", "P"}) {
        if (!ps[i].contains(key)) {
          throw ConfigError("config: '" + where + "." + key + "' is required");
        }
      }
      c.purity.push_back(
          {static_cast<int>(get_int(ps[i]["l"], where + ".l")),
           get_number(ps[i]["b"], where + ".b"),
           get_number(ps[i]["P"], where + ".P")});
    }
  }
  if (doc.contains("master_seed")) {
    c.master_seed =
        static_cast<std::uint64_t>(get_int(doc["master_seed"], "master_seed"));
  }
  if (doc.contains("out")) c.out = get_string(doc["out"], "out");
  if (doc.contains("workers")) {
    c.workers = static_cast<int>(get_int(doc["workers"], "workers"));
  }
  if (doc.contains("anneal")) {
    const json& a = doc["anneal"];
    if (!a.is_object()) throw ConfigError("config: 'anneal' must be an object");
    check_keys(a, {"t0", "alpha"}, "config: anneal: ");
    if (a.contains("t0")) c.anneal.t0 = get_number(a["t0"], "anneal.t0");
    if (a.contains("alpha")) {
      c.anneal.alpha = get_number(a["alpha"], "anneal.alpha");
    }
  }
  c.validate();
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::vector<Graph> resolve_graphs(const ExperimentConfig& config) {
  std::vector<Graph> graphs;
  if (config.graph.path) {
    graphs.push_back(load_graph(*config.graph.path));
  } else {
    for (int n : config.graph.n) {
      graphs.push_back(erdos_renyi(n, config.graph.rho, config.graph.seed));
    }
  }
  if (!config.graph.clique.empty()) {
    for (auto& g : graphs) {
      try {
        g = plant_clique(g, SubgraphSelection(config.graph.clique, g.size()));
      } catch (const SelectionError& e) {
        throw ConfigError(std::string("config: graph.clique: ") + e.what());
      }
    }
  }
  return graphs;
}

ResultTable run_experiment(const ExperimentConfig& config) {
  config.validate();
  const std::vector<Graph> graphs = resolve_graphs(config);
  for (const Graph& g : graphs) {
    if (g.size() > kMaxSamplingVertices) {
      throw CapacityError("graph with " + std::to_string(g.size()) +
                          " vertices exceeds the sampling limit of " +
                          std::to_string(kMaxSamplingVertices));
    }
    if (config.kind == ExperimentKind::kDistribution &&
        g.size() > kMaxEnumerationModes) {
      throw CapacityError("exact distributions need n <= " +
                          std::to_string(kMaxEnumerationModes));
    }
    const int k = config.resolve_k(g.size());
    if (k < 2 || k > g.size() ||
        (config.kind == ExperimentKind::kAnnealing && k == g.size())) {
      throw ConfigError("config: k = " + std::to_string(k) +
                        " unusable for n = " + std::to_string(g.size()));
    }
  }
  const std::vector<NoisePoint> points = config.noise_points();
  const int workers = worker_count(config);

  ResultTable table;
  table.config = config;
  table.header = config_header(config);

  // Devices for every (graph, noise point), built in parallel.
  std::vector<std::vector<std::optional<PreparedGbs>>> devices(
      graphs.size(), std::vector<std::optional<PreparedGbs>>(points.size()));
  {
    std::vector<std::function<void()>> tasks;
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
      for (std::size_t p = 0; p < points.size(); ++p) {
        tasks.push_back([&, gi, p] {
          const Graph& g = graphs[gi];
          devices[gi][p].emplace(g, config.resolve_k(g.size()),
                                 points[p].noise);
        });
      }
    }
    run_tasks(tasks, workers);
  }
  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    for (std::size_t p = 0; p < points.size(); ++p) {
      const std::string prefix =
          config.kind == ExperimentKind::kScalingN
              ? "n=" + std::to_string(graphs[gi].size()) + ";"
              : std::string();
      table.header.push_back(c_line(prefix + points[p].label, *devices[gi][p]));
    }
  }

  if (config.kind == ExperimentKind::kDistribution) {
    for (std::size_t p = 0; p < points.size(); ++p) {
      const SubspaceDistribution& dist = devices[0][p]->distribution();
      if (!(dist.norm > 0.0)) {
        throw EmptyDistributionError("the k-click subspace is empty at " +
                                     points[p].label);
      }
      if (p == 0) table.patterns = dist.patterns;
      table.distribution.push_back({points[p].label, dist.weights()});
      table.header.push_back("# subspace_mass[" + points[p].label +
                             "]: " + format_number(dist.norm));
    }
  } else if (config.kind == ExperimentKind::kScalingN) {
    // rows[gi][0] uniform, rows[gi][1 + p] gbs; per-iteration sample means.
    std::vector<std::vector<std::vector<double>>> means(graphs.size());
    std::vector<std::function<void()>> tasks;
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
      means[gi].assign(points.size() + 1,
                       std::vector<double>(config.iterations, 0.0));
      const Graph& g = graphs[gi];
      const int n = g.size();
      const int k = config.resolve_k(n);
      const std::string tag = "n=" + std::to_string(n);
      for (int it = 0; it < config.iterations; ++it) {
        tasks.push_back([&, gi, it, n, k, tag] {
          Rng rng(derive_seed(config.master_seed, "uniform;" + tag, it));
          means[gi][0][it] = mean_sampled_density(
              graphs[gi], config.steps,
              [&] { return uniform_k_subset(n, k, rng); });
        });
        for (std::size_t p = 0; p < points.size(); ++p) {
          tasks.push_back([&, gi, p, it, tag] {
            Rng rng(derive_seed(config.master_seed,
                                "gbs;" + tag + ";" + points[p].label, it));
            means[gi][1 + p][it] =
                mean_sampled_density(graphs[gi], config.steps, [&] {
                  return devices[gi][p]->draw_postselected(rng).modes();
                });
          });
        }
      }
    }
    run_tasks(tasks, workers);
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
      const int n = graphs[gi].size();
      const int k = config.resolve_k(n);
      const auto [u_mean, u_var] = mean_variance(means[gi][0]);
      table.scaling.push_back({n, k, "uniform", 0.0, 1.0, u_mean, u_var, 0.0});
      for (std::size_t p = 0; p < points.size(); ++p) {
        const auto [m, v] = mean_variance(means[gi][1 + p]);
        table.scaling.push_back({n, k, "gbs", points[p].noise.loss,
                                 points[p].noise.purity(), m, v, m - u_mean});
      }
    }
  } else {
    const Graph& g = graphs[0];
    const int k = config.resolve_k(g.size());
    const double greedy = subgraph_density(g, greedy_peel(g, k));
    table.header.push_back("# greedy_density: " + format_number(greedy));

    struct Plan {
      std::string algorithm;
      std::optional<std::size_t> point;
      std::function<RunRecord(std::uint64_t)> run;
    };
    std::vector<Plan> plans;
    if (config.kind != ExperimentKind::kAnnealing) {
      plans.push_back({"uniform", std::nullopt, [&](std::uint64_t seed) {
                         return random_search_uniform(g, k, config.steps, seed);
                       }});
    }
    for (std::size_t p = 0; p < points.size(); ++p) {
      const PreparedGbs* device = &*devices[0][p];
      switch (config.kind) {
        case ExperimentKind::kFig1:
          plans.push_back({"gbs", p, [&, device](std::uint64_t seed) {
                             return random_search_gbs(*device, config.steps,
                                                      seed);
                           }});
          break;
        case ExperimentKind::kAnnealing:
          plans.push_back({"sa-classical", p, [&, device](std::uint64_t seed) {
                             return simulated_annealing(
                                 *device, config.steps, config.anneal, seed,
                                 TweakSource::kUniform);
                           }});
          plans.push_back({"sa-gbs", p, [&, device](std::uint64_t seed) {
                             return simulated_annealing(*device, config.steps,
                                                        config.anneal, seed,
                                                        TweakSource::kGbs);
                           }});
          break;
        case ExperimentKind::kRaw:
          plans.push_back({"raw-gbs", p, [&, device](std::uint64_t seed) {
                             return raw_search(*device, config.steps, seed);
                           }});
          break;
        default:
          break;
      }
    }

    table.series.resize(plans.size());
    std::vector<std::function<void()>> tasks;
    for (std::size_t s = 0; s < plans.size(); ++s) {
      SeriesResult& series = table.series[s];
      series.algorithm = plans[s].algorithm;
      if (plans[s].point) {
        series.loss = points[*plans[s].point].noise.loss;
        series.purity = points[*plans[s].point].noise.purity();
      }
      series.runs.resize(config.iterations);
      const std::string label =
          plans[s].algorithm +
          (plans[s].point ? ";" + points[*plans[s].point].label : "");
      for (int it = 0; it < config.iterations; ++it) {
        tasks.push_back([&, s, it, label] {
          table.series[s].runs[it] =
              plans[s].run(derive_seed(config.master_seed, label, it));
        });
      }
    }
    run_tasks(tasks, workers);

    SeriesResult baseline;
    baseline.algorithm = "greedy";
    for (int it = 0; it < config.iterations; ++it) {
      RunRecord rec;
      rec.algorithm = "greedy";
      rec.n = g.size();
      rec.k = k;
      rec.trajectory.assign(config.steps, greedy);
      baseline.runs.push_back(std::move(rec));
    }
    table.series.push_back(std::move(baseline));
    for (auto& s : table.series) aggregate(s);
  }

  if (!config.out.empty()) {
    write_file(config.out, table.to_csv());
    const std::string summary = table.summary_csv();
    if (!summary.empty()) write_file(config.out + ".summary.csv", summary);
  }
  return table;
}

std::string ResultTable::to_csv() const {
  std::ostringstream out;
  for (const auto& line : header) out << line << '\n';
  if (config.kind == ExperimentKind::kDistribution) {
    out << "pattern";
    for (const auto& col : distribution) out << ',' << col.label;
    out << '\n';
    for (std::size_t i = 0; i < patterns.size(); ++i) {
      out << patterns[i].bitstring();
      for (const auto& col : distribution) {
        out << ',' << format_number(col.weights[i]);
      }
      out << '\n';
    }
  } else if (config.kind == ExperimentKind::kScalingN) {
    out << "n,k,algorithm,loss,purity,mean_density,variance,advantage\n";
    for (const auto& r : scaling) {
      out << r.n << ',' << r.k << ',' << r.algorithm << ','
          << format_number(r.loss) << ',' << format_number(r.purity) << ','
          << format_number(r.mean_density) << ',' << format_number(r.variance)
          << ',' << format_number(r.advantage) << '\n';
    }
  } else {
    out << "algorithm,seed,loss,purity,step,best_density\n";
    for (const auto& s : series) {
      const std::string noise =
          format_number(s.loss) + ',' + format_number(s.purity) + ',';
      for (const auto& run : s.runs) {
        for (std::size_t t = 0; t < run.trajectory.size(); ++t) {
          out << s.algorithm << ',' << run.seed << ',' << noise << (t + 1)
              << ',' << format_number(run.trajectory[t]) << '\n';
        }
      }
    }
  }
  return out.str();
}

std::string ResultTable::summary_csv() const {
  if (series.empty()) return {};
  std::ostringstream out;
  for (const auto& line : header) out << line << '\n';
  out << "algorithm,loss,purity,step,mean,variance\n";
  for (const auto& s : series) {
    for (std::size_t t = 0; t < s.mean.size(); ++t) {
      out << s.algorithm << ',' << format_number(s.loss) << ','
          << format_number(s.purity) << ',' << (t + 1) << ','
          << format_number(s.mean[t]) << ',' << format_number(s.variance[t])
          << '\n';
    }
  }
  return out.str();
}

}  // namespace gbsdks
