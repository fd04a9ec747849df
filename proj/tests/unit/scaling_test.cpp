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

#include "gbsdks/scaling.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "gbsdks/detection.hpp"
#include "gbsdks/errors.hpp"

namespace gbsdks {
namespace {

TEST(ExpectedClicks, VanishesAtSmallScale) {
  const Graph g = erdos_renyi(10, 0.5, 1);
  EXPECT_LT(expected_clicks(g, 1e-9, 0.0), 1e-12);
}

TEST(ExpectedClicks, VanishesUnderFullLoss) {
  const Graph g = erdos_renyi(10, 0.5, 1);
  const double c = 0.9 / largest_adjacency_eigenvalue(g);
  EXPECT_NEAR(expected_clicks(g, c, 1.0), 0.0, 1e-14);
}

TEST(ExpectedClicks, TwoModeSqueezer) {
  // K2 with scale c is a two-mode squeezer with tanh r = c; each mode is
  // thermal with vacuum probability 1 / cosh^2 r.
  const double c = 0.6;
  const double p_vac = 1.0 - c * c;
  EXPECT_NEAR(expected_clicks(complete_graph(2), c, 0.0), 2.0 * (1.0 - p_vac),
              1e-13);
}

TEST(ExpectedClicks, MatchesStateEvaluation) {
  for (int seed = 0; seed < 5; ++seed) {
    const Graph g = erdos_renyi(9, 0.4, seed);
    const double c = 0.85 / largest_adjacency_eigenvalue(g);
    for (double loss : {0.0, 0.2, 0.7}) {
      EXPECT_NEAR(expected_clicks(g, c, loss),
                  expected_clicks(build_device_state(g, c, loss, std::nullopt)),
                  1e-8);
    }
  }
}

TEST(ExpectedClicks, MatchesClickCountMean) {
  const Graph g = erdos_renyi(8, 0.5, 4);
  const CovarianceState s = build_device_state(
      g, 0.9 / largest_adjacency_eigenvalue(g), 0.3, schmidt_profile(2, 1.0, 0.8));
  const std::vector<double> masses = click_count_masses(s);
  double mean = 0.0;
  for (std::size_t k = 0; k < masses.size(); ++k) mean += k * masses[k];
  EXPECT_NEAR(expected_clicks(s), mean, 1e-9);
}

TEST(ExpectedClicks, IncreasesWithScale) {
  const Graph g = erdos_renyi(12, 0.3, 2);
  const double c_max = 1.0 / largest_adjacency_eigenvalue(g);
  double previous = 0.0;
  for (int i = 1; i < 50; ++i) {
    const double e = expected_clicks(g, c_max * i / 50.0, 0.25);
    EXPECT_GT(e, previous);
    previous = e;
  }
}

TEST(ExpectedClicks, RejectsInvalidInput) {
  const Graph g = erdos_renyi(6, 0.5, 1);
  const double c_max = 1.0 / largest_adjacency_eigenvalue(g);
  EXPECT_THROW(expected_clicks(g, c_max, 0.0), ScalingError);
  EXPECT_THROW(expected_clicks(g, 0.5 * c_max, -0.1), ParameterError);
  EXPECT_THROW(expected_clicks(g, 0.5 * c_max, 1.1), ParameterError);
}

TEST(OptimizeScaling, ZeroClicksPicksFirstGridPoint) {
  const Graph g = erdos_renyi(8, 0.5, 3);
  const ScalingResult r = optimize_scaling(g, 0, 0.0);
  EXPECT_TRUE(r.exact);
  EXPECT_DOUBLE_EQ(r.c, r.c_max / 33.0);
}

TEST(OptimizeScaling, StaysBelowBound) {
  for (int seed = 0; seed < 4; ++seed) {
    const Graph g = erdos_renyi(10, 0.5, seed);
    for (int k : {2, 5, 10}) {
      const ScalingResult r = optimize_scaling(g, k, 0.2);
      EXPECT_GT(r.c, 0.0);
      EXPECT_LT(r.c * largest_adjacency_eigenvalue(g), 1.0);
      EXPECT_NEAR(r.c_max, 1.0 / largest_adjacency_eigenvalue(g), 1e-12);
    }
  }
}

TEST(OptimizeScaling, LossRaisesScale) {
  for (int seed = 0; seed < 4; ++seed) {
    const Graph g = erdos_renyi(10, 0.4, seed);
    EXPECT_GT(optimize_scaling(g, 4, 0.3).c, optimize_scaling(g, 4, 0.0).c)
        << "seed " << seed;
  }
}

TEST(OptimizeScaling, ExactObjectiveIsTheMass) {
  const Graph g = erdos_renyi(9, 0.5, 7);
  const ScalingResult r = optimize_scaling(g, 4, 0.1);
  ASSERT_TRUE(r.exact);
  ASSERT_TRUE(r.feasible);
  const double mass =
      click_count_masses(build_device_state(g, r.c, 0.1, std::nullopt))[4];
  EXPECT_NEAR(r.objective, mass, 1e-12);
  // A local maximum: nearby scales do not do better by more than the tolerance.
  for (double f : {0.97, 1.03}) {
    const double c = std::min(r.c * f, r.c_max * (1 - 1e-9));
    EXPECT_LE(click_count_masses(build_device_state(g, c, 0.1, std::nullopt))[4],
              mass + 1e-6);
  }
}

TEST(OptimizeScaling, SurrogateHitsTargetClicks) {
  const Graph g = erdos_renyi(20, 0.4, 5);
  const ScalingResult r = optimize_scaling(g, 6, 0.2);
  EXPECT_FALSE(r.exact);
  EXPECT_TRUE(r.feasible);
  EXPECT_NEAR(expected_clicks(g, r.c, 0.2), 6.0, 0.01);
}

TEST(OptimizeScaling, EdgelessGraph) {
  const Graph g = erdos_renyi(6, 0.0, 1);
  EXPECT_TRUE(optimize_scaling(g, 0, 0.0).feasible);
  EXPECT_FALSE(optimize_scaling(g, 2, 0.0).feasible);
}

TEST(OptimizeScaling, RejectsInvalidInput) {
  const Graph g = erdos_renyi(6, 0.5, 1);
  EXPECT_THROW(optimize_scaling(g, -1, 0.0), ParameterError);
  EXPECT_THROW(optimize_scaling(g, 7, 0.0), ParameterError);
  EXPECT_THROW(optimize_scaling(g, 2, 1.5), ParameterError);
}

TEST(BuildDeviceState, Shape) {
  const Graph g = erdos_renyi(5, 0.5, 1);
  const double c = 0.5 / largest_adjacency_eigenvalue(g);
  const CovarianceState s =
      build_device_state(g, c, 0.2, schmidt_profile(3, 1.0, 0.6));
  EXPECT_EQ(s.spatial_modes(), 5);
  EXPECT_EQ(s.spectral_modes(), 3);
  EXPECT_EQ(build_device_state(g, c, 0.0, std::nullopt).spectral_modes(), 1);
}

}  // namespace
}  // namespace gbsdks
