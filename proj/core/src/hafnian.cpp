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

#include "gbsdks/hafnian.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "gbsdks/errors.hpp"

namespace gbsdks {
namespace {

using Complex = std::complex<double>;

void check_shape(const Eigen::MatrixXcd& m, int max_dim) {
  if (m.rows() != m.cols()) throw ShapeError("hafnian needs a square matrix");
  if (m.rows() % 2 != 0) {
    throw ShapeError("hafnian of odd dimension " + std::to_string(m.rows()));
  }
  if (m.rows() > max_dim) {
    throw CapacityError("hafnian dimension " + std::to_string(m.rows()) +
                        " exceeds limit " + std::to_string(max_dim));
  }
  if (m.size() == 0) return;
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale) {
    throw ShapeError("hafnian needs a symmetric matrix");
  }
}

Complex enumerate_from(const Eigen::MatrixXcd& m, std::vector<char>& used) {
  const auto dim = static_cast<int>(used.size());
  int first = 0;
  while (first < dim && used[first]) ++first;
  if (first == dim) return 1.0;
  used[first] = 1;
  Complex total = 0.0;
  for (int j = first + 1; j < dim; ++j) {
    if (used[j]) continue;
    const Complex w = m(first, j);
    if (w == Complex(0.0)) continue;
    used[j] = 1;
    total += w * enumerate_from(m, used);
    used[j] = 0;
  }
  used[first] = 0;
  return total;
}

}  // namespace

Complex hafnian_enumerate(const Eigen::MatrixXcd& m) {
  check_shape(m, kMaxEnumerationHafnianDim);
  std::vector<char> used(static_cast<std::size_t>(m.rows()), 0);
  return enumerate_from(m, used);
}

Complex hafnian_power_trace(const Eigen::MatrixXcd& m) {
  check_shape(m, kMaxPowerTraceHafnianDim);
  const int half = static_cast<int>(m.rows() / 2);
  if (half == 0) return 1.0;

  // M X swaps the two column halves.
  Eigen::MatrixXcd mx(m.rows(), m.cols());
  mx.leftCols(half) = m.rightCols(half);
  mx.rightCols(half) = m.leftCols(half);

  std::vector<Complex> traces(half + 1);
  std::vector<Complex> coeff(half + 1);
  std::vector<int> idx;
  Complex total = 0.0;
  const std::uint32_t subsets = std::uint32_t{1} << half;
  for (std::uint32_t z = 1; z < subsets; ++z) {
    idx.clear();
    for (int i = 0; i < half; ++i) {
      if ((z >> i) & 1U) idx.push_back(i);
    }
    const auto pop = static_cast<int>(idx.size());
    for (int i = 0; i < pop; ++i) idx.push_back(idx[i] + half);
    const auto d = static_cast<Eigen::Index>(idx.size());
    Eigen::MatrixXcd b(d, d);
    for (Eigen::Index r = 0; r < d; ++r) {
      for (Eigen::Index c = 0; c < d; ++c) b(r, c) = mx(idx[r], idx[c]);
    }
    Eigen::MatrixXcd power = b;
    for (int j = 1; j <= half; ++j) {
      if (j > 1) power = (power * b).eval();
      traces[j] = power.trace() / (2.0 * j);
    }
    // Coefficients of exp(q(lambda)) via n p_n = sum_j j q_j p_{n-j}.
    coeff[0] = 1.0;
    for (int k = 1; k <= half; ++k) {
      Complex acc = 0.0;
      for (int j = 1; j <= k; ++j) acc += static_cast<double>(j) * traces[j] * coeff[k - j];
      coeff[k] = acc / static_cast<double>(k);
    }
    const bool negative = ((half - pop) % 2) != 0;
    total += negative ? -coeff[half] : coeff[half];
  }
  return total;
}

Complex hafnian(const Eigen::MatrixXcd& m) { return hafnian_power_trace(m); }

}  // namespace gbsdks
