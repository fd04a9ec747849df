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

#ifndef GBSDKS_DKS_HPP_
#define GBSDKS_DKS_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gbsdks/detection.hpp"
#include "gbsdks/gaussian_state.hpp"
#include "gbsdks/graph.hpp"
#include "gbsdks/rng.hpp"
#include "gbsdks/scaling.hpp"
#include "gbsdks/schmidt.hpp"

namespace gbsdks {

// Attempts allowed when postselecting chain samples on graphs too large to
// enumerate before the k-click subspace is declared unreachable.
inline constexpr int kMaxRejectionAttempts = 100000;

struct NoiseConfig {
  double loss = 0.0;
  // Absent means pure single-mode sources.
  std::optional<SchmidtProfile> schmidt;

  double purity() const { return schmidt ? schmidt->purity() : 1.0; }
  // Throws ParameterError when loss lies outside [0, 1].
  void validate() const;
};

struct RunRecord {
  std::string algorithm;
  // Best density found after each step; nondecreasing.
  std::vector<double> trajectory;
  std::uint64_t seed = 0;
  NoiseConfig noise;
  int n = 0;
  int k = 0;
  // Scaling parameter of the device state, if one was used.
  std::optional<double> c;
  // Raw search only: samples that had exactly k clicks.
  int retained = 0;
};

// A graph loaded into a simulated device: tuned scaling, the noisy state and,
// when affordable, the exact k-click distribution (full table up to
// kMaxEnumerationModes, complement method beyond). Copies share
// the immutable internals, so one instance can serve many threads.
class PreparedGbs {
 public:
  PreparedGbs(const Graph& g, int k, const NoiseConfig& noise);

  const Graph& graph() const;
  int k() const;
  const NoiseConfig& noise() const;
  const ScalingResult& scaling() const;
  const CovarianceState& state() const;
  // True when the k-click subspace was enumerated exactly.
  bool enumerated() const;
  // Throws CapacityError when !enumerated().
  const SubspaceDistribution& distribution() const;
  // Mean over modes of the single-mode click probability.
  double mean_click_probability() const;

  // One k-click pattern: exact subspace draw, or chain samples with
  // rejection. Throws EmptyDistributionError if the subspace is unreachable.
  ClickPattern draw_postselected(Rng& rng) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

struct AnnealSchedule {
  double t0 = 0.05;
  double alpha = 0.95;
  // False: accept improvements and ties only (zero-temperature limit).
  bool metropolis = true;
};

enum class TweakSource { kGbs, kUniform };

// All searches need 2 <= k <= n and steps >= 1; the RNG is seeded from `seed`.
RunRecord random_search_uniform(const Graph& g, int k, int steps,
                                std::uint64_t seed);

RunRecord random_search_gbs(const Graph& g, int k, int steps,
                            const NoiseConfig& noise, std::uint64_t seed);
RunRecord random_search_gbs(const PreparedGbs& device, int steps,
                            std::uint64_t seed);

// Vertices outside `current` that click in one threshold sample of the
// marginal state on those modes. Sorted; may be empty.
std::vector<int> gbs_tweak(const CovarianceState& state,
                           const SubgraphSelection& current, Rng& rng);

// Annealing over k-subsets. Each step proposes shrink_to_k(S u T) where T is
// a GBS tweak, or for kUniform a uniform subset of the complement whose size
// is Binomial(|complement|, mean click probability). An empty T holds.
RunRecord simulated_annealing(const Graph& g, int k, int steps,
                              const NoiseConfig& noise,
                              const AnnealSchedule& schedule,
                              std::uint64_t seed,
                              TweakSource source = TweakSource::kGbs);
RunRecord simulated_annealing(const PreparedGbs& device, int steps,
                              const AnnealSchedule& schedule,
                              std::uint64_t seed, TweakSource source);

// Unpostselected chain samples; only k-click samples update the trajectory.
RunRecord raw_search(const Graph& g, int k, int steps,
                     const NoiseConfig& noise, std::uint64_t seed);
RunRecord raw_search(const PreparedGbs& device, int steps, std::uint64_t seed);

// Mean density of a uniformly random k-subset (equals density(g)).
double expected_uniform_density(const Graph& g, int k);

// Exact mean density of one postselected sample; needs enumerated().
double expected_gbs_density(const PreparedGbs& device);

}  // namespace gbsdks

#endif  // GBSDKS_DKS_HPP_
