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

#include "gbsdks/schmidt.hpp"

#include <cmath>
#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "gbsdks/detection.hpp"
#include "gbsdks/errors.hpp"

namespace gbsdks {
namespace {

double sum(const std::vector<double>& x) {
  return std::accumulate(x.begin(), x.end(), 0.0);
}

double sum_sq(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

TEST(SchmidtProfile, PureSource) {
  const SchmidtProfile p = schmidt_profile(1, 3.0, 1.0);
  EXPECT_EQ(p.x(), std::vector<double>{1.0});
  EXPECT_EQ(p.s(), std::vector<double>{1.0});
  EXPECT_THROW(schmidt_profile(1, 1.0, 0.9), InfeasiblePurityError);
}

TEST(SchmidtProfile, TwoModeMinimum) {
  const SchmidtProfile p = schmidt_profile(2, 1.0, 0.5);
  ASSERT_EQ(p.x().size(), 2u);
  EXPECT_NEAR(p.x()[0], 0.5, 1e-12);
  EXPECT_NEAR(p.x()[1], 0.5, 1e-12);
}

TEST(SchmidtProfile, QuadraticRootIsExact) {
  // x^2 - x + 0.16 = 0 has roots 0.8 and 0.2.
  const SchmidtProfile p = schmidt_profile(2, 1.0, 0.68);
  EXPECT_EQ(p.x()[0], 0.8);
  EXPECT_NEAR(p.x()[1], 0.2, 1e-15);
}

TEST(SchmidtProfile, GridSatisfiesConstraints) {
  for (int l : {2, 3, 4}) {
    for (double b : {0.5, 1.0, 2.0}) {
      const PurityRange range = achievable_purity(l, b);
      for (int step = 0; step <= 6; ++step) {
        const double purity = 0.4 + 0.1 * step;
        if (purity < range.min) {
          EXPECT_THROW(schmidt_profile(l, b, purity), InfeasiblePurityError);
          continue;
        }
        const SchmidtProfile p = schmidt_profile(l, b, purity);
        ASSERT_EQ(static_cast<int>(p.x().size()), l);
        EXPECT_NEAR(sum(p.x()), 1.0, 1e-12);
        EXPECT_NEAR(sum_sq(p.x()), purity, 1e-12);
        for (std::size_t i = 0; i < p.x().size(); ++i) {
          EXPECT_GE(p.x()[i], 0.0);
          EXPECT_GE(p.x()[0], p.x()[i]);
          EXPECT_NEAR(p.s()[i] * p.s()[i], p.x()[i], 1e-15);
        }
      }
    }
  }
}

TEST(SchmidtProfile, InfeasibleReportsRange) {
  try {
    schmidt_profile(2, 1.0, 0.4);
    FAIL() << "expected InfeasiblePurityError";
  } catch (const InfeasiblePurityError& e) {
    EXPECT_NEAR(e.min_purity(), 0.5, 1e-12);
    EXPECT_NEAR(e.max_purity(), 1.0, 1e-12);
  }
  EXPECT_THROW(schmidt_profile(0, 1.0, 1.0), ParameterError);
  EXPECT_THROW(schmidt_profile(2, -1.0, 0.8), ParameterError);
  EXPECT_THROW(schmidt_profile(2, 1.0, 1.2), ParameterError);
}

TEST(SchmidtProfile, AchievableMinimumMatchesClosedForm) {
  // Uniform weights: kappa = 1 / (l - 1), minimum kappa / (1 + kappa) = 1 / l.
  for (int l = 2; l <= 6; ++l) {
    EXPECT_NEAR(achievable_purity(l, 1.0).min, 1.0 / l, 1e-12);
  }
}

TEST(EqualPhotonScale, MatchesSqueezedPhotonNumber) {
  const std::vector<double> s = schmidt_profile(3, 2.0, 0.6).s();
  for (double r : {0.0, 0.2, 1.0, 2.5}) {
    const double mu = equal_photon_scale(r, s);
    double photons = 0.0;
    for (double sj : s) photons += std::sinh(mu * sj) * std::sinh(mu * sj);
    EXPECT_NEAR(photons, std::sinh(r) * std::sinh(r),
                1e-10 * std::max(1.0, std::sinh(r) * std::sinh(r)));
  }
}

TEST(ExpandSpectral, PureProfileIsIdentity) {
  const Graph g = erdos_renyi(7, 0.5, 5);
  const CovarianceState s = embed_graph(g, 0.8 / largest_adjacency_eigenvalue(g));
  const CovarianceState e = expand_spectral(s, schmidt_profile(1, 1.0, 1.0));
  ASSERT_EQ(e.spectral_modes(), 1);
  EXPECT_LT((e.sigma() - s.sigma()).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(ExpandSpectral, VacuumStaysVacuum) {
  const CovarianceState e =
      expand_spectral(CovarianceState::vacuum(3), schmidt_profile(3, 1.0, 0.5));
  EXPECT_EQ(e.spectral_modes(), 3);
  EXPECT_LT((e.sigma() - CMatrix::Identity(18, 18)).cwiseAbs().maxCoeff(),
            1e-12);
}

TEST(ExpandSpectral, PreservesPhotonNumberPerSpatialMode) {
  for (int seed = 0; seed < 5; ++seed) {
    const Graph g = erdos_renyi(6, 0.6, seed);
    const CovarianceState s =
        embed_graph(g, 0.9 / largest_adjacency_eigenvalue(g));
    const CovarianceState e = expand_spectral(s, schmidt_profile(2, 1.0, 0.7));
    EXPECT_EQ(e.spectral_modes(), 2);
    EXPECT_LT((e.mean_photon_numbers() - s.mean_photon_numbers())
                  .cwiseAbs()
                  .maxCoeff(),
              1e-9);
    const Eigen::VectorXd nu = symplectic_eigenvalues(e);
    EXPECT_LT((nu.array() - 1.0).abs().maxCoeff(), 1e-8);
  }
}

TEST(ExpandSpectral, RejectsImpureInput) {
  const CovarianceState lossy =
      apply_uniform_loss(embed_graph(complete_graph(2), 0.5), 0.2);
  EXPECT_THROW(expand_spectral(lossy, schmidt_profile(2, 1.0, 0.7)),
               PurityError);
}

TEST(ExpandSpectral, UnitPurityLeavesSubspacesUnchanged) {
  // l = 2 with P = 1 puts all squeezing in the first Schmidt mode.
  const SchmidtProfile p = schmidt_profile(2, 1.0, 1.0);
  for (int seed = 0; seed < 4; ++seed) {
    const Graph g = erdos_renyi(8 + seed, 0.4, seed);
    const CovarianceState s =
        embed_graph(g, 0.8 / largest_adjacency_eigenvalue(g));
    const CovarianceState e = expand_spectral(s, p);
    // Joint probabilities: the one-click subspace has zero mass, so its
    // conditioned weights are not defined.
    for (int k = 0; k <= g.size(); ++k) {
      const std::vector<double> a = enumerate_subspace(s, k).probabilities;
      const std::vector<double> b = enumerate_subspace(e, k).probabilities;
      double tv = 0.0;
      for (std::size_t i = 0; i < a.size(); ++i) tv += std::abs(a[i] - b[i]);
      EXPECT_LT(0.5 * tv, 1e-9) << "seed " << seed << " k " << k;
    }
  }
}

}  // namespace
}  // namespace gbsdks
