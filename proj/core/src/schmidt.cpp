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

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>
#include <string>

#include "gbsdks/errors.hpp"
#include "gbsdks/symplectic.hpp"

namespace gbsdks {
namespace {

void check_args(int l, double b) {
  if (l < 1) throw ParameterError("Schmidt profile needs l >= 1");
  if (!(b > 0.0) || !std::isfinite(b)) {
    throw ParameterError("Schmidt profile base b must be positive");
  }
}

// Geometric weights k(2..l); they sum to one.
std::vector<double> ladder_weights(int l, double b) {
  std::vector<double> k;
  if (l < 2) return k;
  double denom = 0.0;
  for (int j = 1; j <= l - 1; ++j) denom += std::pow(b, j - 1);
  for (int i = 2; i <= l; ++i) k.push_back(std::pow(b, l - i) / denom);
  return k;
}

double kappa_of(const std::vector<double>& k) {
  double kappa = 0.0;
  for (double w : k) kappa += w * w;
  return kappa;
}

}  // namespace

PurityRange achievable_purity(int l, double b) {
  check_args(l, b);
  if (l == 1) return {1.0, 1.0};
  const double kappa = kappa_of(ladder_weights(l, b));
  return {kappa / (1.0 + kappa), 1.0};
}

SchmidtProfile schmidt_profile(int l, double b, double purity) {
  check_args(l, b);
  if (!(purity > 0.0 && purity <= 1.0)) {
    throw ParameterError("purity must lie in (0, 1]");
  }
  const PurityRange range = achievable_purity(l, b);
  if (purity < range.min - 1e-14 || (l == 1 && purity < 1.0 - 1e-12)) {
    std::ostringstream msg;
    msg << "purity " << purity << " is not achievable with l = " << l
        << ", b = " << b << "; achievable range [" << range.min << ", "
        << range.max << "]";
    throw InfeasiblePurityError(msg.str(), range.min, range.max);
  }
  SchmidtProfile p;
  p.l_ = l;
  p.b_ = b;
  p.purity_ = purity;
  if (l == 1) return p;

  const std::vector<double> k = ladder_weights(l, b);
  const double kappa = kappa_of(k);
  // Quarter discriminant of the quadratic in x_1.
  const double disc = std::max(0.0, purity * (1.0 + kappa) - kappa);
  const double x1 = (kappa + std::sqrt(disc)) / (1.0 + kappa);
  p.x_.assign(1, x1);
  for (double w : k) p.x_.push_back(w * (1.0 - x1));
  p.s_.resize(p.x_.size());
  std::transform(p.x_.begin(), p.x_.end(), p.s_.begin(),
                 [](double x) { return std::sqrt(x); });
  return p;
}

double equal_photon_scale(double r, const std::vector<double>& s) {
  if (!(r >= 0.0)) throw ParameterError("squeezing must be >= 0");
  if (r == 0.0) return 0.0;
  const double s_max = *std::max_element(s.begin(), s.end());
  const double target = std::sinh(r) * std::sinh(r);
  auto photons = [&](double mu) {
    double total = 0.0;
    for (double sj : s) {
      const double v = std::sinh(mu * sj);
      total += v * v;
    }
    return total;
  };
  // sinh^2(r sqrt(x)) is convex in x, so photons(r) <= target, and
  // photons(r / s_max) >= sinh^2(r) by its largest term.
  double lo = r;
  double hi = r / s_max;
  while (hi - lo > 1e-12 * std::max(1.0, hi)) {
    const double mid = 0.5 * (lo + hi);
    if (photons(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

CovarianceState expand_spectral(const CovarianceState& state,
                                const SchmidtProfile& profile) {
  if (state.spectral_modes() != 1) {
    throw ParameterError("expand_spectral needs a single spectral mode input");
  }
  const CMatrix m = williamson_pure(state);
  const SymplecticFactors f = bloch_messiah(m);

  const int n = state.spatial_modes();
  const int nf = profile.l();
  const Eigen::Index total = static_cast<Eigen::Index>(n) * nf;
  const CMatrix eye = CMatrix::Identity(nf, nf);
  CMatrix u_big = CMatrix::Zero(total, total);
  CMatrix v_big = CMatrix::Zero(total, total);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      u_big.block(i * nf, j * nf, nf, nf) = f.u(i, j) * eye;
      v_big.block(i * nf, j * nf, nf, nf) = f.v(i, j) * eye;
    }
  }
  std::vector<double> r_big(static_cast<std::size_t>(total));
  for (int i = 0; i < n; ++i) {
    const double r = f.squeezers.squeezing()[i];
    const double mu = equal_photon_scale(r, profile.s());
    for (int j = 0; j < nf; ++j) r_big[i * nf + j] = mu * profile.s()[j];
  }
  const CMatrix big = passive_matrix(u_big) * squeezer_matrix(r_big) *
                      passive_matrix(v_big).adjoint();
  CMatrix sigma = big * big.adjoint();
  sigma = (sigma + sigma.adjoint()).eval() / 2.0;
  return CovarianceState(std::move(sigma), n, nf, state.scaling_c());
}

}  // namespace gbsdks
