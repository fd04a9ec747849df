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

#ifndef GBSDKS_SCALING_HPP_
#define GBSDKS_SCALING_HPP_

#include <optional>

#include "gbsdks/gaussian_state.hpp"
#include "gbsdks/graph.hpp"
#include "gbsdks/schmidt.hpp"

namespace gbsdks {

// Graph state with scale c, optionally expanded over Schmidt modes, then sent
// through uniform loss.
CovarianceState build_device_state(const Graph& g, double c, double loss,
                                   const std::optional<SchmidtProfile>& schmidt);

// Expected number of threshold clicks of the lossy graph state, from the
// eigendecomposition A = U diag(lambda) U^T with t = c lambda:
//   P_vac(i) = ( (sum_j U_ij^2 (1 - l t_j^2)/(1 - t_j^2))^2
//              - (1 - l)^2 (sum_j U_ij^2 t_j/(1 - t_j^2))^2 )^{-1/2}
//   <C> = n - sum_i P_vac(i).
double expected_clicks(const Graph& g, double c, double loss);

// sum_i (1 - P_vac(i)) evaluated on any state.
double expected_clicks(const CovarianceState& state);

struct ScalingResult {
  double c = 0.0;
  // Exact k-click mass (exact == true) or |<C> - k| (surrogate).
  double objective = 0.0;
  bool exact = false;
  // False when k clicks are out of reach; c is then a best effort.
  bool feasible = true;
  double c_max = 0.0;
};

// Scale c in (0, 1/lambda_max) that maximises P(click count = k). Graphs up to
// kMaxEnumerationModes vertices use the exact k-click mass; larger graphs
// minimise |<C>(c) - k|. Search: 32-point grid c_i = (i + 1) c_max / 33, then
// golden section on the neighbouring bracket down to 1e-4 relative width.
// Past the last grid point the bracket extends to c_max (1 - 1e-9).
ScalingResult optimize_scaling(
    const Graph& g, int k, double loss,
    const std::optional<SchmidtProfile>& schmidt = std::nullopt);

}  // namespace gbsdks

#endif  // GBSDKS_SCALING_HPP_
