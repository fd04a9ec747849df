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

#include "gbsdks/gaussian_state.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <cmath>
#include <string>

#include <nlohmann/json.hpp>

#include "gbsdks/errors.hpp"

namespace gbsdks {
namespace {

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

constexpr double kPhysicalityTol = 1e-9;
constexpr double kSpectrumRoundoff =
    64.0 * std::numeric_limits<double>::epsilon();

double max_abs(const CMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

Eigen::VectorXd symplectic_spectrum(const CMatrix& sigma) {
  const Eigen::Index dim = sigma.rows();
  const Eigen::Index modes = dim / 2;
  Eigen::LLT<CMatrix> llt(sigma);
  if (llt.info() != Eigen::Success) {
    throw NumericalError("covariance matrix is not positive definite");
  }
  const CMatrix lower = llt.matrixL();
  CMatrix k = CMatrix::Identity(dim, dim);
  k.bottomRightCorner(modes, modes) *= -1.0;
  const CMatrix h = lower.adjoint() * k * lower;
  Eigen::SelfAdjointEigenSolver<CMatrix> eig((h + h.adjoint()) / 2.0,
                                             Eigen::EigenvaluesOnly);
  // Eigenvalues come in pairs +-nu; the upper half holds the nu.
  return eig.eigenvalues().tail(modes);
}

}  // namespace

CovarianceState::CovarianceState(CMatrix sigma, int spatial_modes,
                                 int spectral_modes,
                                 std::optional<double> scaling_c)
    : sigma_(std::move(sigma)),
      spatial_(spatial_modes),
      spectral_(spectral_modes),
      scaling_c_(scaling_c) {
  if (spatial_ < 1 || spectral_ < 1) {
    throw ShapeError("state needs at least one spatial and spectral mode");
  }
  const Eigen::Index dim = 2 * static_cast<Eigen::Index>(total_modes());
  if (sigma_.rows() != dim || sigma_.cols() != dim) {
    throw ShapeError("covariance matrix must be " + std::to_string(dim) +
                     " x " + std::to_string(dim));
  }
  const double scale = std::max(1.0, max_abs(sigma_));
  if (max_abs(sigma_ - sigma_.adjoint()) > 1e-9 * scale) {
    throw ShapeError("covariance matrix is not Hermitian");
  }
  const RMatrix x = block_swap(total_modes());
  if (max_abs(sigma_ - x * sigma_.conjugate() * x) > 1e-9 * scale) {
    throw ShapeError("covariance matrix lacks the doubled-basis structure");
  }
  sigma_ = (sigma_ + sigma_.adjoint()).eval() / 2.0;
  const Eigen::VectorXd nu = symplectic_spectrum(sigma_);
  // Symplectic eigenvalues are sensitive to perturbations of sigma with a
  // condition number of order |sigma|, so round-off reaches eps |sigma|^2.
  const double tol =
      std::max(kPhysicalityTol, kSpectrumRoundoff * scale * scale);
  if (nu.minCoeff() < 1.0 - tol) {
    throw NumericalError("unphysical covariance: symplectic eigenvalue " +
                         format_double(nu.minCoeff()) + " < 1 at norm " +
                         format_double(scale));
  }
}

CovarianceState::CovarianceState(Unchecked, CMatrix sigma, int spatial,
                                 int spectral, std::optional<double> scaling_c)
    : sigma_(std::move(sigma)),
      spatial_(spatial),
      spectral_(spectral),
      scaling_c_(scaling_c) {}

CovarianceState CovarianceState::vacuum(int spatial_modes, int spectral_modes) {
  if (spatial_modes < 1 || spectral_modes < 1) {
    throw ShapeError("state needs at least one spatial and spectral mode");
  }
  const Eigen::Index dim = 2 * spatial_modes * spectral_modes;
  return CovarianceState(Unchecked{}, CMatrix::Identity(dim, dim),
                         spatial_modes, spectral_modes, std::nullopt);
}

CMatrix CovarianceState::q_matrix() const {
  CMatrix q = sigma_;
  q.diagonal().array() += 1.0;
  return q / 2.0;
}

bool CovarianceState::is_real(double tol) const {
  return sigma_.imag().cwiseAbs().maxCoeff() <= tol;
}

std::vector<int> CovarianceState::doubled_rows(int spatial) const {
  if (spatial < 0 || spatial >= spatial_) {
    throw ParameterError("spatial mode " + std::to_string(spatial) +
                         " out of range");
  }
  std::vector<int> rows;
  rows.reserve(2 * spectral_);
  const int m = total_modes();
  for (int s = 0; s < spectral_; ++s) rows.push_back(spatial * spectral_ + s);
  for (int s = 0; s < spectral_; ++s) {
    rows.push_back(m + spatial * spectral_ + s);
  }
  return rows;
}

CovarianceState CovarianceState::marginal(std::span<const int> spatial) const {
  if (spatial.empty()) throw ParameterError("marginal over no modes");
  std::vector<int> creators;
  std::vector<int> annihilators;
  for (int mode : spatial) {
    const std::vector<int> rows = doubled_rows(mode);
    annihilators.insert(annihilators.end(), rows.begin(),
                        rows.begin() + spectral_);
    creators.insert(creators.end(), rows.begin() + spectral_, rows.end());
  }
  std::vector<int> order = annihilators;
  order.insert(order.end(), creators.begin(), creators.end());
  const auto dim = static_cast<Eigen::Index>(order.size());
  CMatrix sub(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) sub(i, j) = sigma_(order[i], order[j]);
  }
  return CovarianceState(Unchecked{}, std::move(sub),
                         static_cast<int>(spatial.size()), spectral_,
                         scaling_c_);
}

Eigen::VectorXd CovarianceState::mean_photon_numbers() const {
  Eigen::VectorXd n = Eigen::VectorXd::Zero(spatial_);
  for (int m = 0; m < total_modes(); ++m) {
    n(m / spectral_) += (sigma_(m, m).real() - 1.0) / 2.0;
  }
  return n;
}

RMatrix block_swap(int m) {
  RMatrix x = RMatrix::Zero(2 * m, 2 * m);
  x.topRightCorner(m, m).setIdentity();
  x.bottomLeftCorner(m, m).setIdentity();
  return x;
}

double largest_adjacency_eigenvalue(const Graph& g) {
  Eigen::SelfAdjointEigenSolver<RMatrix> eig(g.adjacency(),
                                             Eigen::EigenvaluesOnly);
  return std::max(0.0, eig.eigenvalues().maxCoeff());
}

CovarianceState embed_graph(const Graph& g, double c) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw ParameterError("scaling parameter c must be positive and finite");
  }
  const double lambda_max = largest_adjacency_eigenvalue(g);
  if (c * lambda_max >= 1.0) {
    throw ScalingError("unphysical scaling: c = " + std::to_string(c) +
                       " must be below 1/lambda_max = " +
                       std::to_string(1.0 / lambda_max));
  }
  const int n = g.size();
  const RMatrix adj = g.adjacency();
  RMatrix kernel = RMatrix::Zero(2 * n, 2 * n);
  kernel.topLeftCorner(n, n) = c * adj;
  kernel.bottomRightCorner(n, n) = c * adj;
  const RMatrix system =
      RMatrix::Identity(2 * n, 2 * n) - block_swap(n) * kernel;
  Eigen::FullPivLU<RMatrix> lu(system);
  if (!lu.isInvertible() || lu.rcond() < 1e-14) {
    throw ScalingError("unphysical scaling: 1 - X A is singular");
  }
  RMatrix sigma = 2.0 * lu.inverse();
  sigma.diagonal().array() -= 1.0;
  return CovarianceState(sigma.cast<std::complex<double>>(), n, 1, c);
}

CMatrix recover_kernel(const CovarianceState& state) {
  if (state.spectral_modes() != 1) {
    throw ParameterError("recover_kernel needs a single spectral mode");
  }
  const Eigen::Index dim = state.sigma().rows();
  CMatrix sigma_q = state.sigma();
  sigma_q.diagonal().array() += 1.0;
  Eigen::PartialPivLU<CMatrix> lu(sigma_q);
  const CMatrix inv = lu.inverse();
  if (!inv.allFinite()) throw NumericalError("sigma + 1 is singular");
  const CMatrix inner = CMatrix::Identity(dim, dim) - 2.0 * inv;
  return block_swap(state.total_modes()).cast<std::complex<double>>() * inner;
}

CovarianceState apply_uniform_loss(const CovarianceState& state, double loss) {
  if (!(loss >= 0.0 && loss <= 1.0)) {
    throw ParameterError("loss must lie in [0, 1]");
  }
  CMatrix sigma = (1.0 - loss) * state.sigma();
  sigma.diagonal().array() += loss;
  return CovarianceState(std::move(sigma), state.spatial_modes(),
                         state.spectral_modes(), state.scaling_c());
}

Eigen::VectorXd symplectic_eigenvalues(const CovarianceState& state) {
  return symplectic_spectrum(state.sigma());
}

std::string state_to_json(const CovarianceState& state) {
  using nlohmann::json;
  json rows = json::array();
  const CMatrix& s = state.sigma();
  for (Eigen::Index i = 0; i < s.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < s.cols(); ++j) {
      row.push_back({s(i, j).real(), s(i, j).imag()});
    }
    rows.push_back(std::move(row));
  }
  json doc = {{"spatial_modes", state.spatial_modes()},
              {"spectral_modes", state.spectral_modes()},
              {"scaling_c", state.scaling_c() ? json(*state.scaling_c())
                                              : json(nullptr)},
              {"sigma", std::move(rows)}};
  return doc.dump();
}

}  // namespace gbsdks
