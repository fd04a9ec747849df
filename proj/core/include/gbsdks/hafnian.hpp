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

#ifndef GBSDKS_HAFNIAN_HPP_
#define GBSDKS_HAFNIAN_HPP_

#include <complex>

#include <Eigen/Dense>

namespace gbsdks {

inline constexpr int kMaxEnumerationHafnianDim = 12;
inline constexpr int kMaxPowerTraceHafnianDim = 32;

// Sum over perfect matchings of the index set of products of matched entries.
// Both evaluators accept a symmetric (1e-10) matrix of even dimension and
// return 1 for the empty matrix; shape problems throw ShapeError and oversize
// inputs CapacityError.

// Direct recursion over perfect matchings, (d-1)!! terms. Reference oracle.
std::complex<double> hafnian_enumerate(const Eigen::MatrixXcd& m);

// Power-trace formula: sum over subsets Z of the d/2 index pairs (i, i + d/2)
// of (-1)^{d/2-|Z|} times the lambda^{d/2} coefficient of
// exp(sum_j tr((M X)_Z^j) lambda^j / (2j)).
std::complex<double> hafnian_power_trace(const Eigen::MatrixXcd& m);

// Default evaluator (power trace).
std::complex<double> hafnian(const Eigen::MatrixXcd& m);

}  // namespace gbsdks

#endif  // GBSDKS_HAFNIAN_HPP_
