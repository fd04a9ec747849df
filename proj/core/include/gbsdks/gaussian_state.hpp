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

#ifndef GBSDKS_GAUSSIAN_STATE_HPP_
#define GBSDKS_GAUSSIAN_STATE_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gbsdks/graph.hpp"

namespace gbsdks {

using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;

// Zero-mean Gaussian state described by its complex covariance matrix in the
// doubled basis (a_0 .. a_{M-1}, a_0^dag .. a_{M-1}^dag), normalised so the
// vacuum is the identity. M = spatial_modes * spectral_modes and mode m maps to
// (spatial m / spectral_modes, spectral m % spectral_modes).
class CovarianceState {
 public:
  // Checks shape, Hermiticity and physicality (symplectic eigenvalues >= 1 -
  // 1e-9); throws ShapeError or NumericalError.
  CovarianceState(CMatrix sigma, int spatial_modes, int spectral_modes = 1,
                  std::optional<double> scaling_c = std::nullopt);

  static CovarianceState vacuum(int spatial_modes, int spectral_modes = 1);

  const CMatrix& sigma() const { return sigma_; }
  int spatial_modes() const { return spatial_; }
  int spectral_modes() const { return spectral_; }
  int total_modes() const { return spatial_ * spectral_; }
  std::optional<double> scaling_c() const { return scaling_c_; }

  // (sigma + 1) / 2: identity for the vacuum; enters every outcome
  // probability.
  CMatrix q_matrix() const;

  // True when every entry of sigma has negligible imaginary part.
  bool is_real(double tol = 1e-12) const;

  // Doubled-basis row indices belonging to one spatial mode, all its spectral
  // modes first as annihilators then as creators.
  std::vector<int> doubled_rows(int spatial) const;

  // Reduced state on a subset of spatial modes (in the given order).
  CovarianceState marginal(std::span<const int> spatial) const;

  // Mean photon number per spatial mode, summed over spectral modes.
  Eigen::VectorXd mean_photon_numbers() const;

 private:
  struct Unchecked {};
  CovarianceState(Unchecked, CMatrix sigma, int spatial, int spectral,
                  std::optional<double> scaling_c);

  CMatrix sigma_;
  int spatial_;
  int spectral_;
  std::optional<double> scaling_c_;
};

// Block-swap matrix X = [[0, 1], [1, 0]] of size 2m.
RMatrix block_swap(int m);

// Largest eigenvalue of the adjacency matrix (0 for an edgeless graph).
double largest_adjacency_eigenvalue(const Graph& g);

// Pure state sigma = 2 (1 - X A)^{-1} - 1 with kernel A = c (adj (+) adj).
// Throws ParameterError for c <= 0 and ScalingError when
// c >= 1 / lambda_max or the system is singular.
CovarianceState embed_graph(const Graph& g, double c);

// A = X (1 - 2 (sigma + 1)^{-1}); single spectral mode only.
CMatrix recover_kernel(const CovarianceState& state);

// sigma -> (1 - loss) sigma + loss * 1 on every mode.
CovarianceState apply_uniform_loss(const CovarianceState& state, double loss);

// Symplectic eigenvalues (one per mode, ascending). Pure states give all ones.
Eigen::VectorXd symplectic_eigenvalues(const CovarianceState& state);

// Diagnostic dump: {"spatial_modes", "spectral_modes", "scaling_c",
// "sigma": [[[re, im], ...], ...]}.
std::string state_to_json(const CovarianceState& state);

}  // namespace gbsdks

#endif  // GBSDKS_GAUSSIAN_STATE_HPP_
