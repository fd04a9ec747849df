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

#ifndef GBSDKS_SCHMIDT_HPP_
#define GBSDKS_SCHMIDT_HPP_

#include <vector>

#include "gbsdks/gaussian_state.hpp"

namespace gbsdks {

// Squared Schmidt coefficients x_i of an imperfect photon source, with
// sum x_i = 1 and sum x_i^2 = purity. x_1 is the dominant weight and the rest
// follow a geometric ladder with base b:
//   x_i = k(i) (1 - x_1),   k(i) = b^{l-i} / sum_{j=1}^{l-1} b^{j-1}.
class SchmidtProfile {
 public:
  int l() const { return l_; }
  double b() const { return b_; }
  double purity() const { return purity_; }
  const std::vector<double>& x() const { return x_; }
  // Schmidt coefficients s_i = sqrt(x_i).
  const std::vector<double>& s() const { return s_; }

 private:
  friend SchmidtProfile schmidt_profile(int l, double b, double purity);
  int l_ = 1;
  double b_ = 1.0;
  double purity_ = 1.0;
  std::vector<double> x_{1.0};
  std::vector<double> s_{1.0};
};

// Purity interval reachable for a given (l, b): [kappa / (1 + kappa), 1] with
// kappa = sum_{i>=2} k(i)^2 (just {1} when l = 1).
struct PurityRange {
  double min;
  double max;
};
PurityRange achievable_purity(int l, double b);

// Solves (1 + kappa) x_1^2 - 2 kappa x_1 + kappa - P = 0 for its larger root.
// Throws ParameterError for l < 1, b <= 0 or P outside (0, 1], and
// InfeasiblePurityError (with the achievable range) when P < kappa/(1+kappa).
SchmidtProfile schmidt_profile(int l, double b, double purity);

// Per-Schmidt-mode scale mu with sum_j sinh^2(mu s_j) = sinh^2(r), so that a
// squeezer split over the Schmidt modes keeps its mean photon number.
// Bisection to 1e-12.
double equal_photon_scale(double r, const std::vector<double>& s);

// Replaces every single-spectral-mode squeezer of a pure state by a bank of
// profile.l() spectral squeezers r_ij = mu_i s_j, lifting the interferometers
// to U (x) 1 and V (x) 1. The result has spectral_modes = profile.l().
CovarianceState expand_spectral(const CovarianceState& state,
                                const SchmidtProfile& profile);

}  // namespace gbsdks

#endif  // GBSDKS_SCHMIDT_HPP_
