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

#ifndef GBSDKS_DETECTION_HPP_
#define GBSDKS_DETECTION_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "gbsdks/gaussian_state.hpp"
#include "gbsdks/rng.hpp"

namespace gbsdks {

// Largest mode count for which full outcome tables are built on request.
inline constexpr int kMaxEnumerationModes = 14;
// Hard ceiling for any 2^n table (vacuum tables, click-count masses).
inline constexpr int kMaxTableModes = 24;

// Threshold-detector outcome: bit i set when spatial mode i clicked.
class ClickPattern {
 public:
  ClickPattern() = default;
  ClickPattern(std::uint64_t mask, int width);

  std::uint64_t mask() const { return mask_; }
  int width() const { return width_; }
  int count() const;
  std::vector<int> modes() const;
  // Character i is '1' when mode i clicked.
  std::string bitstring() const;

  bool operator==(const ClickPattern& other) const = default;

 private:
  std::uint64_t mask_ = 0;
  int width_ = 0;
};

// All k-click patterns of a state with their probabilities.
struct SubspaceDistribution {
  int k = 0;
  int width = 0;
  // Sorted vertex tuples in lexicographic order.
  std::vector<ClickPattern> patterns;
  std::vector<double> probabilities;
  // Total probability of the k-click subspace.
  double norm = 0.0;

  // Probabilities conditioned on the subspace (sum to 1).
  std::vector<double> weights() const;
  // "pattern,probability" rows with conditioned probabilities.
  std::string to_csv() const;
};

// Probability that every spectral mode of the selected spatial modes is empty:
// 1 / sqrt(det Q_R) with Q = (sigma + 1) / 2 restricted to those modes.
double vacuum_probability(const CovarianceState& state, std::uint64_t spatial);

// Probability of clicks on exactly the pattern's modes, by inclusion-exclusion
// over vacuum projections (2^|C| small determinants).
double threshold_probability(const CovarianceState& state,
                             const ClickPattern& pattern);

// Photon-number-resolved probability Haf(A_S) / (prod s_i! sqrt(det Q)).
// Single spectral mode only; odd totals of pure states return exactly 0.
double pnr_probability(const CovarianceState& state,
                       const std::vector<int>& occupations);

// Vacuum probability of every subset of spatial modes, indexed by bitmask.
// Capacity-guarded at kMaxTableModes.
std::vector<double> vacuum_table(const CovarianceState& state);

// Probability of every click pattern, indexed by bitmask. Guarded at
// kMaxEnumerationModes.
std::vector<double> click_pattern_probabilities(const CovarianceState& state);

// P(click count = j) for j = 0..n. Guarded at kMaxTableModes.
std::vector<double> click_count_masses(const CovarianceState& state);

// Exact k-click subspace. Throws CapacityError above kMaxEnumerationModes
// (use sample_chain for larger states).
SubspaceDistribution enumerate_subspace(const CovarianceState& state, int k);

// Repeated draws from the conditioned k-click distribution.
// Same distribution as enumerate_subspace, computed from vacuum probabilities
// of sets missing at most k modes: det Q_{~T} = det Q det (Q^{-1})_T. Cost is
// sum_{j <= k} C(n, j) small determinants plus C(n, k) 2^k additions, so it
// reaches past kMaxEnumerationModes when k is small.
inline constexpr double kMaxComplementSubsets = 16777216.0;  // 2^24
// Number of subsets the method touches; compare with kMaxComplementSubsets.
double complement_enumeration_cost(int n, int k);
SubspaceDistribution enumerate_subspace_by_complement(
    const CovarianceState& state, int k);

class SubspaceSampler {
 public:
  explicit SubspaceSampler(const SubspaceDistribution& dist);
  ClickPattern draw(Rng& rng) const;

 private:
  std::vector<ClickPattern> patterns_;
  std::vector<double> cumulative_;
};

// count i.i.d. draws; EmptyDistributionError when the subspace has no mass.
std::vector<ClickPattern> sample_subspace(const SubspaceDistribution& dist,
                                          Rng& rng, int count);

// Exact threshold sample, mode by mode. Each conditional click probability is
// evaluated on the state conditioned on the vacuum outcomes so far, with
// inclusion-exclusion over the modes that already clicked. Consumes exactly one
// uniform draw per spatial mode.
ClickPattern sample_chain(const CovarianceState& state, Rng& rng);

}  // namespace gbsdks

#endif  // GBSDKS_DETECTION_HPP_
