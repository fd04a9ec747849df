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

#include "gbsdks/symplectic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "gbsdks/errors.hpp"

namespace gbsdks {
namespace {

using Complex = std::complex<double>;

constexpr double kPureTol = 1e-6;
constexpr double kSymplecticTol = 1e-9;

double max_abs(const CMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

// Modified Gram-Schmidt (two passes) of `seed` columns, then completion with
// standard basis vectors until the basis spans C^n.
CMatrix complete_unitary(const CMatrix& seed, Eigen::Index n) {
  CMatrix basis(n, n);
  Eigen::Index filled = 0;
  auto try_add = [&](Eigen::VectorXcd v, double min_norm) {
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index j = 0; j < filled; ++j) {
        v -= basis.col(j) * basis.col(j).dot(v);
      }
    }
    const double norm = v.norm();
    if (norm <= min_norm) return false;
    basis.col(filled++) = v / norm;
    return true;
  };
  for (Eigen::Index j = 0; j < seed.cols(); ++j) {
    if (!try_add(seed.col(j), 1e-8)) {
      throw DecompositionError("Takagi vectors are linearly dependent", 1.0);
    }
  }
  for (Eigen::Index e = 0; e < n && filled < n; ++e) {
    try_add(Eigen::VectorXcd::Unit(n, e), 1e-3);
  }
  if (filled != n) throw DecompositionError("basis completion failed", 1.0);
  return basis;
}

}  // namespace

SqueezerBank::SqueezerBank(std::vector<double> squeezing)
    : r_(std::move(squeezing)) {
  for (double r : r_) {
    if (!(r >= 0.0) || !std::isfinite(r)) {
      throw ParameterError("squeezing parameters must be finite and >= 0");
    }
  }
}

std::vector<double> SqueezerBank::tanh_values() const {
  std::vector<double> t(r_.size());
  std::transform(r_.begin(), r_.end(), t.begin(),
                 [](double r) { return std::tanh(r); });
  return t;
}

CMatrix squeezer_matrix(const std::vector<double>& r) {
  const auto n = static_cast<Eigen::Index>(r.size());
  CMatrix s = CMatrix::Zero(2 * n, 2 * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    s(i, i) = s(n + i, n + i) = std::cosh(r[i]);
    s(i, n + i) = s(n + i, i) = std::sinh(r[i]);
  }
  return s;
}

CMatrix passive_matrix(const CMatrix& w) {
  const Eigen::Index n = w.rows();
  CMatrix p = CMatrix::Zero(2 * n, 2 * n);
  p.topLeftCorner(n, n) = w;
  p.bottomRightCorner(n, n) = w.conjugate();
  return p;
}

CMatrix SymplecticFactors::reconstruct() const {
  return passive_matrix(u) * squeezer_matrix(squeezers.squeezing()) *
         passive_matrix(v).adjoint();
}

double symplectic_defect(const CMatrix& s) {
  const Eigen::Index dim = s.rows();
  if (dim != s.cols() || dim % 2 != 0) {
    throw ShapeError("symplectic matrix must be square of even dimension");
  }
  const Eigen::Index n = dim / 2;
  CMatrix k = CMatrix::Identity(dim, dim);
  k.bottomRightCorner(n, n) *= -1.0;
  const CMatrix x = block_swap(static_cast<int>(n)).cast<Complex>();
  return std::max(max_abs(s * k * s.adjoint() - k),
                  max_abs(s - x * s.conjugate() * x));
}

TakagiFactors takagi(const CMatrix& b) {
  const Eigen::Index n = b.rows();
  if (n != b.cols()) throw ShapeError("Takagi needs a square matrix");
  const double scale = std::max(1.0, max_abs(b));
  if (max_abs(b - b.transpose()) > 1e-10 * scale) {
    throw ShapeError("Takagi needs a symmetric matrix");
  }
  if (n == 0) return {CMatrix(0, 0), Eigen::VectorXd(0)};
  const CMatrix sym = (b + b.transpose()) / 2.0;
  // [[Re B, Im B], [Im B, -Re B]] has eigenpairs (+d, (x; y)) and (-d, (-y; x))
  // with u = x + i y satisfying B conj(u) = d u.
  RMatrix h(2 * n, 2 * n);
  h.topLeftCorner(n, n) = sym.real();
  h.topRightCorner(n, n) = sym.imag();
  h.bottomLeftCorner(n, n) = sym.imag();
  h.bottomRightCorner(n, n) = -sym.real();
  Eigen::SelfAdjointEigenSolver<RMatrix> eig(h);
  const double zero_tol = 1e-12 * scale;
  std::vector<Eigen::Index> positive;
  for (Eigen::Index j = 2 * n - 1; j >= 0 && Eigen::Index(positive.size()) < n;
       --j) {
    if (eig.eigenvalues()(j) <= zero_tol) break;
    positive.push_back(j);
  }
  CMatrix seed(n, static_cast<Eigen::Index>(positive.size()));
  Eigen::VectorXd d = Eigen::VectorXd::Zero(n);
  for (std::size_t c = 0; c < positive.size(); ++c) {
    const auto col = eig.eigenvectors().col(positive[c]);
    for (Eigen::Index i = 0; i < n; ++i) seed(i, c) = Complex(col(i), col(n + i));
    d(static_cast<Eigen::Index>(c)) = eig.eigenvalues()(positive[c]);
  }
  return {complete_unitary(seed, n), d};
}

CMatrix williamson_pure(const CovarianceState& state) {
  const Eigen::VectorXd nu = symplectic_eigenvalues(state);
  const double worst = (nu.array() - 1.0).abs().maxCoeff();
  if (worst > kPureTol) {
    throw PurityError("state is not pure: largest symplectic eigenvalue " +
                          std::to_string(nu.maxCoeff()),
                      nu.maxCoeff());
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(state.sigma());
  const Eigen::VectorXd root = eig.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return eig.eigenvectors() * root.cast<Complex>().asDiagonal() *
         eig.eigenvectors().adjoint();
}

SymplecticFactors bloch_messiah(const CMatrix& s) {
  const double defect = symplectic_defect(s);
  const double scale = std::max(1.0, max_abs(s) * max_abs(s));
  if (defect > kSymplecticTol * scale) {
    throw DecompositionError(
        "matrix is not symplectic: defect " + std::to_string(defect), defect);
  }
  const Eigen::Index n = s.rows() / 2;
  // Polar decomposition S = P O with P = (S S^dag)^{1/2} positive symplectic
  // and O passive.
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(s * s.adjoint());
  const Eigen::VectorXd ev = eig.eigenvalues().cwiseMax(1e-300);
  const CMatrix& w = eig.eigenvectors();
  const CMatrix p =
      w * ev.cwiseSqrt().cast<Complex>().asDiagonal() * w.adjoint();
  const CMatrix p_inv =
      w * ev.cwiseSqrt().cwiseInverse().cast<Complex>().asDiagonal() *
      w.adjoint();
  const CMatrix passive = (p_inv * s).topLeftCorner(n, n);

  // P = diag(U, U*) D(r) diag(U^dag, U^T) where the off-diagonal block of P
  // is U sinh(r) U^T.
  const CMatrix off = p.topRightCorner(n, n);
  TakagiFactors tk = takagi((off + off.transpose()) / 2.0);
  std::vector<double> r(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) r[i] = std::asinh(tk.d(i));

  SymplecticFactors factors{tk.u, passive.adjoint() * tk.u,
                            SqueezerBank(std::move(r))};
  const double error = max_abs(factors.reconstruct() - s);
  if (error > 1e-8 * scale) {
    throw DecompositionError(
        "Bloch-Messiah reconstruction error " + std::to_string(error), error);
  }
  return factors;
}

}  // namespace gbsdks
