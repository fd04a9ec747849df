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

#include "gbsdks/dks.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>
#include <utility>

#include "gbsdks/errors.hpp"

namespace gbsdks {
namespace {

void check_search(const Graph& g, int k, int steps) {
  if (k < 2 || k > g.size()) {
    throw ParameterError("k = " + std::to_string(k) + " must lie in [2, " +
                         std::to_string(g.size()) + "]");
  }
  if (steps < 1) throw ParameterError("steps must be at least 1");
}

// Uniform k-subset by partial Fisher-Yates.
std::vector<int> uniform_subset(std::vector<int> pool, int k, Rng& rng) {
  const int m = static_cast<int>(pool.size());
  for (int i = 0; i < k; ++i) {
    std::uniform_int_distribution<int> pick(i, m - 1);
    std::swap(pool[i], pool[pick(rng)]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

std::vector<int> iota_vector(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

RunRecord make_record(std::string algorithm, const Graph& g, int k,
                      std::uint64_t seed, const NoiseConfig& noise,
                      std::optional<double> c) {
  RunRecord rec;
  rec.algorithm = std::move(algorithm);
  rec.seed = seed;
  rec.noise = noise;
  rec.n = g.size();
  rec.k = k;
  rec.c = c;
  return rec;
}

}  // namespace

void NoiseConfig::validate() const {
  if (!(loss >= 0.0 && loss <= 1.0)) {
    throw ParameterError("loss " + std::to_string(loss) +
                         " must lie in [0, 1]");
  }
}

struct PreparedGbs::Impl {
  Graph graph;
  int k;
  NoiseConfig noise;
  ScalingResult scaling;
  CovarianceState state;
  std::optional<SubspaceDistribution> dist;
  std::optional<SubspaceSampler> sampler;
  double mean_click;
};

PreparedGbs::PreparedGbs(const Graph& g, int k, const NoiseConfig& noise) {
  check_search(g, k, 1);
  noise.validate();
  if (g.size() > kMaxSamplingVertices) {
    throw CapacityError("sampling supports at most " +
                        std::to_string(kMaxSamplingVertices) + " vertices");
  }
  ScalingResult scaling = optimize_scaling(g, k, noise.loss, noise.schmidt);
  CovarianceState state =
      build_device_state(g, scaling.c, noise.loss, noise.schmidt);
  const double mean_click = expected_clicks(state) / g.size();
  auto impl = std::make_shared<Impl>(
      Impl{g, k, noise, scaling, std::move(state), std::nullopt, std::nullopt,
           mean_click});
  if (g.size() <= kMaxEnumerationModes) {
    impl->dist = enumerate_subspace(impl->state, k);
  } else if (complement_enumeration_cost(g.size(), k) <=
             kMaxComplementSubsets) {
    impl->dist = enumerate_subspace_by_complement(impl->state, k);
  }
  if (impl->dist) impl->sampler.emplace(*impl->dist);
  impl_ = std::move(impl);
}

const Graph& PreparedGbs::graph() const { return impl_->graph; }
int PreparedGbs::k() const { return impl_->k; }
const NoiseConfig& PreparedGbs::noise() const { return impl_->noise; }
const ScalingResult& PreparedGbs::scaling() const { return impl_->scaling; }
const CovarianceState& PreparedGbs::state() const { return impl_->state; }
bool PreparedGbs::enumerated() const { return impl_->dist.has_value(); }
double PreparedGbs::mean_click_probability() const {
  return impl_->mean_click;
}

const SubspaceDistribution& PreparedGbs::distribution() const {
  if (!impl_->dist) {
    throw CapacityError("the k-click subspace is too large to enumerate");
  }
  return *impl_->dist;
}

ClickPattern PreparedGbs::draw_postselected(Rng& rng) const {
  if (impl_->sampler) return impl_->sampler->draw(rng);
  for (int attempt = 0; attempt < kMaxRejectionAttempts; ++attempt) {
    ClickPattern p = sample_chain(impl_->state, rng);
    if (p.count() == impl_->k) return p;
  }
  throw EmptyDistributionError("no " + std::to_string(impl_->k) +
                               "-click sample in " +
                               std::to_string(kMaxRejectionAttempts) +
                               " attempts");
}

RunRecord random_search_uniform(const Graph& g, int k, int steps,
                                std::uint64_t seed) {
  check_search(g, k, steps);
  RunRecord rec = make_record("uniform", g, k, seed, NoiseConfig{}, {});
  Rng rng(seed);
  const std::vector<int> all = iota_vector(g.size());
  double best = 0.0;
  for (int s = 0; s < steps; ++s) {
    SubgraphSelection sel(uniform_subset(all, k, rng), g.size());
    best = std::max(best, subgraph_density(g, sel));
    rec.trajectory.push_back(best);
  }
  return rec;
}

RunRecord random_search_gbs(const Graph& g, int k, int steps,
                            const NoiseConfig& noise, std::uint64_t seed) {
  check_search(g, k, steps);
  return random_search_gbs(PreparedGbs(g, k, noise), steps, seed);
}

RunRecord random_search_gbs(const PreparedGbs& device, int steps,
                            std::uint64_t seed) {
  const Graph& g = device.graph();
  check_search(g, device.k(), steps);
  RunRecord rec = make_record("gbs", g, device.k(), seed, device.noise(),
                              device.scaling().c);
  Rng rng(seed);
  double best = 0.0;
  for (int s = 0; s < steps; ++s) {
    const ClickPattern p = device.draw_postselected(rng);
    best = std::max(best, subgraph_density(
                              g, SubgraphSelection(p.modes(), g.size())));
    rec.trajectory.push_back(best);
  }
  return rec;
}

std::vector<int> gbs_tweak(const CovarianceState& state,
                           const SubgraphSelection& current, Rng& rng) {
  const int n = state.spatial_modes();
  if (current.parent_n() != n) {
    throw ParameterError("selection and state disagree on the vertex count");
  }
  std::vector<int> outside;
  for (int v = 0; v < n; ++v) {
    if (!current.contains(v)) outside.push_back(v);
  }
  if (outside.empty()) {
    throw ParameterError("gbs_tweak needs at least one vertex outside S");
  }
  const ClickPattern p = sample_chain(state.marginal(outside), rng);
  std::vector<int> clicked;
  for (int i : p.modes()) clicked.push_back(outside[i]);
  return clicked;
}

RunRecord simulated_annealing(const Graph& g, int k, int steps,
                              const NoiseConfig& noise,
                              const AnnealSchedule& schedule,
                              std::uint64_t seed, TweakSource source) {
  check_search(g, k, steps);
  return simulated_annealing(PreparedGbs(g, k, noise), steps, schedule, seed,
                             source);
}

RunRecord simulated_annealing(const PreparedGbs& device, int steps,
                              const AnnealSchedule& schedule,
                              std::uint64_t seed, TweakSource source) {
  const Graph& g = device.graph();
  const int n = g.size();
  const int k = device.k();
  check_search(g, k, steps);
  if (!(schedule.t0 > 0.0)) throw ParameterError("t0 must be positive");
  if (!(schedule.alpha > 0.0 && schedule.alpha < 1.0)) {
    throw ParameterError("alpha must lie in (0, 1)");
  }
  if (k == n) {
    throw ParameterError("annealing needs k < n so that tweaks exist");
  }
  const bool quantum = source == TweakSource::kGbs;
  RunRecord rec = make_record(quantum ? "sa-gbs" : "sa-classical", g, k, seed,
                              device.noise(), device.scaling().c);
  Rng rng(seed);
  const std::vector<int> all = iota_vector(n);

  SubgraphSelection current =
      quantum ? SubgraphSelection(device.draw_postselected(rng).modes(), n)
              : SubgraphSelection(uniform_subset(all, k, rng), n);
  double rho = subgraph_density(g, current);
  double best = rho;
  double temp = schedule.t0;

  for (int s = 0; s < steps; ++s) {
    std::vector<int> tweak;
    if (quantum) {
      tweak = gbs_tweak(device.state(), current, rng);
    } else {
      std::vector<int> outside;
      for (int v : all) {
        if (!current.contains(v)) outside.push_back(v);
      }
      std::binomial_distribution<int> size(
          static_cast<int>(outside.size()), device.mean_click_probability());
      const int m = size(rng);
      tweak = uniform_subset(std::move(outside), m, rng);
    }
    // One uniform per step keeps the stream aligned across acceptance rules.
    const double u = uniform01(rng);
    if (!tweak.empty()) {
      std::vector<int> merged = current.vertices();
      merged.insert(merged.end(), tweak.begin(), tweak.end());
      SubgraphSelection candidate =
          shrink_to_k(g, SubgraphSelection(std::move(merged), n), k);
      const double rho_new = subgraph_density(g, candidate);
      const bool accept =
          rho_new >= rho ||
          (schedule.metropolis && u < std::exp((rho_new - rho) / temp));
      if (accept) {
        current = std::move(candidate);
        rho = rho_new;
      }
    }
    best = std::max(best, rho);
    rec.trajectory.push_back(best);
    temp *= schedule.alpha;
  }
  return rec;
}

RunRecord raw_search(const Graph& g, int k, int steps,
                     const NoiseConfig& noise, std::uint64_t seed) {
  check_search(g, k, steps);
  return raw_search(PreparedGbs(g, k, noise), steps, seed);
}

RunRecord raw_search(const PreparedGbs& device, int steps,
                     std::uint64_t seed) {
  const Graph& g = device.graph();
  check_search(g, device.k(), steps);
  RunRecord rec = make_record("raw-gbs", g, device.k(), seed, device.noise(),
                              device.scaling().c);
  Rng rng(seed);
  double best = 0.0;
  for (int s = 0; s < steps; ++s) {
    const ClickPattern p = sample_chain(device.state(), rng);
    if (p.count() == device.k()) {
      ++rec.retained;
      best = std::max(best, subgraph_density(
                                g, SubgraphSelection(p.modes(), g.size())));
    }
    rec.trajectory.push_back(best);
  }
  return rec;
}

double expected_uniform_density(const Graph& g, int k) {
  check_search(g, k, 1);
  return density(g);
}

double expected_gbs_density(const PreparedGbs& device) {
  const SubspaceDistribution& dist = device.distribution();
  const std::vector<double> w = dist.weights();
  double mean = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 0.0) continue;
    mean += w[i] * subgraph_density(device.graph(),
                                    SubgraphSelection(dist.patterns[i].modes(),
                                                      dist.width));
  }
  return mean;
}

}  // namespace gbsdks
