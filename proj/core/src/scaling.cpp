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

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "gbsdks/detection.hpp"
#include "gbsdks/errors.hpp"

namespace gbsdks {
namespace {

constexpr int kGridPoints = 32;
constexpr double kBracketTol = 1e-4;
constexpr double kBoundaryGap = 1e-9;

}  // namespace

CovarianceState build_device_state(
    const Graph& g, double c, double loss,
    const std::optional<SchmidtProfile>& schmidt) {
  CovarianceState state = embed_graph(g, c);
  if (schmidt && schmidt->l() > 1) state = expand_spectral(state, *schmidt);
  if (loss > 0.0) state = apply_uniform_loss(state, loss);
  return state;
}

double expected_clicks(const Graph& g, double c, double loss) {
  if (!(loss >= 0.0 && loss <= 1.0)) {
    throw ParameterError("loss must lie in [0, 1]");
  }
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw ParameterError("scaling parameter c must be positive and finite");
  }
  Eigen::SelfAdjointEigenSolver<RMatrix> eig(g.adjacency());
  const Eigen::VectorXd& lambda = eig.eigenvalues();
  if (c * std::max(0.0, lambda.maxCoeff()) >= 1.0) {
    throw ScalingError("unphysical scaling: c * lambda_max >= 1");
  }
  const int n = g.size();
  const Eigen::ArrayXd t = c * lambda.array();
  const Eigen::ArrayXd one_minus = 1.0 - t.square();
  const Eigen::ArrayXd diag_w = (1.0 - loss * t.square()) / one_minus;
  const Eigen::ArrayXd off_w = t / one_minus;
  double clicks = n;
  for (int i = 0; i < n; ++i) {
    const Eigen::ArrayXd u2 = eig.eigenvectors().row(i).array().square();
    const double a = (u2 * diag_w).sum();
    const double b = (u2 * off_w).sum();
    const double det = a * a - (1.0 - loss) * (1.0 - loss) * b * b;
    clicks -= 1.0 / std::sqrt(det);
  }
  return clicks;
}

double expected_clicks(const CovarianceState& state) {
  double clicks = state.spatial_modes();
  for (int i = 0; i < state.spatial_modes(); ++i) {
    clicks -= vacuum_probability(state, std::uint64_t{1} << i);
  }
  return clicks;
}

ScalingResult optimize_scaling(const Graph& g, int k, double loss,
                               const std::optional<SchmidtProfile>& schmidt) {
  const int n = g.size();
  if (k < 0 || k > n) {
    throw ParameterError("optimize_scaling: k = " + std::to_string(k) +
                         " must lie in [0, " + std::to_string(n) + "]");
  }
  if (!(loss >= 0.0 && loss <= 1.0)) {
    throw ParameterError("loss must lie in [0, 1]");
  }
  const double lambda_max = largest_adjacency_eigenvalue(g);
  ScalingResult result;
  result.exact = n <= kMaxEnumerationModes;
  if (lambda_max <= 1e-12) {
    // Edgeless: every admissible c gives the vacuum.
    result.c_max = 1.0;
    result.c = 1.0 / (kGridPoints + 1);
    result.feasible = (k == 0);
    result.objective = result.exact ? (k == 0 ? 1.0 : 0.0) : k;
    return result;
  }
  result.c_max = 1.0 / lambda_max;

  // Maximised score: k-click mass, or -|<C> - k|.
  auto score = [&](double c) {
    if (result.exact) {
      return click_count_masses(build_device_state(g, c, loss, schmidt))[k];
    }
    const double clicks =
        schmidt && schmidt->l() > 1
            ? expected_clicks(build_device_state(g, c, loss, schmidt))
            : expected_clicks(g, c, loss);
    return -std::abs(clicks - k);
  };

  std::vector<double> grid(kGridPoints);
  std::vector<double> values(kGridPoints);
  int best = 0;
  for (int i = 0; i < kGridPoints; ++i) {
    grid[i] = result.c_max * (i + 1) / (kGridPoints + 1);
    values[i] = score(grid[i]);
    if (values[i] > values[best]) best = i;
  }
  double best_c = grid[best];
  double best_value = values[best];

  double lo = grid[std::max(best - 1, 0)];
  // The top bracket runs up to the bound itself: under heavy loss the target
  // can sit beyond the last grid point.
  double hi = best + 1 < kGridPoints ? grid[best + 1]
                                     : result.c_max * (1.0 - kBoundaryGap);
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - ratio * (hi - lo);
  double x2 = lo + ratio * (hi - lo);
  double f1 = score(x1);
  double f2 = score(x2);
  while (hi - lo > kBracketTol * hi) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + ratio * (hi - lo);
      f2 = score(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - ratio * (hi - lo);
      f1 = score(x1);
    }
  }
  if (f1 > best_value) {
    best_value = f1;
    best_c = x1;
  }
  if (f2 > best_value) {
    best_value = f2;
    best_c = x2;
  }
  result.c = best_c;
  if (result.exact) {
    result.objective = best_value;
    result.feasible = best_value > 1e-12;
  } else {
    result.objective = -best_value;
    result.feasible = -best_value <= 0.5;
  }
  return result;
}

}  // namespace gbsdks
