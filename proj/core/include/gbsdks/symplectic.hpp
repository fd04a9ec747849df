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

#ifndef GBSDKS_SYMPLECTIC_HPP_
#define GBSDKS_SYMPLECTIC_HPP_

#include <vector>

#include <Eigen/Dense>

#include "gbsdks/gaussian_state.hpp"

namespace gbsdks {

// Single-mode squeezing parameters r_i >= 0.
class SqueezerBank {
 public:
  SqueezerBank() = default;
  explicit SqueezerBank(std::vector<double> squeezing);

  const std::vector<double>& squeezing() const { return r_; }
  std::vector<double> tanh_values() const;
  int size() const { return static_cast<int>(r_.size()); }

 private:
  std::vector<double> r_;
};

// S = diag(U, U*) [[cosh r, sinh r], [sinh r, cosh r]] diag(V^dag, V^T):
// two passive interferometers around a bank of single-mode squeezers.
struct SymplecticFactors {
  CMatrix u;
  CMatrix v;
  SqueezerBank squeezers;

  // The doubled-basis symplectic matrix these factors describe.
  CMatrix reconstruct() const;
};

// Doubled-basis symplectic matrix of independent squeezers r_i (real, r >= 0
// squeezes along the same axis as embed_graph with positive tanh).
CMatrix squeezer_matrix(const std::vector<double>& r);

// Passive transformation diag(W, W*).
CMatrix passive_matrix(const CMatrix& w);

// max(|S K S^dag - K|, |S - X S* X|) in the max-entry norm.
double symplectic_defect(const CMatrix& s);

// Takagi factorisation of a complex symmetric matrix: B = U diag(d) U^T with U
// unitary and d >= 0 sorted descending. Degenerate and zero singular values
// are handled through a real symmetric embedding plus basis completion.
struct TakagiFactors {
  CMatrix u;
  Eigen::VectorXd d;
};
TakagiFactors takagi(const CMatrix& b);

// Principal square root M = sigma^{1/2} of a pure state, so that
// sigma = M M^dag. Throws PurityError when a symplectic eigenvalue departs
// from 1 by more than 1e-6.
CMatrix williamson_pure(const CovarianceState& state);

// Bloch-Messiah factorisation of a symplectic matrix, squeezing sorted
// descending. Throws DecompositionError carrying the symplectic defect when
// the input is not symplectic to 1e-9 (relative to its squared norm).
SymplecticFactors bloch_messiah(const CMatrix& s);

}  // namespace gbsdks

#endif  // GBSDKS_SYMPLECTIC_HPP_
