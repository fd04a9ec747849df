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

// Independent reference computations shared by the unit and acceptance tests.
// Deliberately naive: brute force over subsets, textbook statistics.

#ifndef GBSDKS_TESTS_ORACLES_HPP_
#define GBSDKS_TESTS_ORACLES_HPP_

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "gbsdks/graph.hpp"

namespace gbsdks::testing {

// Highest density over all k-subsets, by exhaustive search.
inline double brute_force_densest(const Graph& g, int k) {
  const int n = g.size();
  std::vector<std::uint64_t> nb(n);
  for (int i = 0; i < n; ++i) nb[i] = g.neighbor_mask(i);
  std::vector<int> sel(k);
  std::iota(sel.begin(), sel.end(), 0);
  long long best = 0;
  while (true) {
    std::uint64_t mask = 0;
    for (int v : sel) mask |= std::uint64_t{1} << v;
    long long twice = 0;
    for (int v : sel) twice += std::popcount(nb[v] & mask);
    best = std::max(best, twice / 2);
    int i = k - 1;
    while (i >= 0 && sel[i] == n - k + i) --i;
    if (i < 0) break;
    ++sel[i];
    for (int j = i + 1; j < k; ++j) sel[j] = sel[j - 1] + 1;
  }
  return 2.0 * static_cast<double>(best) / (k * (k - 1.0));
}

// Mean density over all k-subsets, by exhaustive search.
inline double brute_force_mean_density(const Graph& g, int k) {
  const int n = g.size();
  double sum = 0.0;
  double count = 0.0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    if (std::popcount(m) != k) continue;
    long long e = 0;
    for (int i = 0; i < n; ++i) {
      if ((m >> i) & 1U) e += std::popcount(g.neighbor_mask(i) & m);
    }
    sum += static_cast<double>(e) / (k * (k - 1.0));
    count += 1.0;
  }
  return sum / count;
}

inline Eigen::MatrixXcd random_symmetric(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  Eigen::MatrixXcd m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = i; j < dim; ++j) {
      m(i, j) = std::complex<double>(gauss(rng), gauss(rng));
      m(j, i) = m(i, j);
    }
  }
  return m;
}

inline double relative_error(std::complex<double> a, std::complex<double> b) {
  return std::abs(a - b) / std::max(1.0, std::abs(b));
}

// Average ranks with ties sharing the mean rank.
inline std::vector<double> ranks(const std::vector<double>& x) {
  std::vector<std::size_t> idx(x.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  std::vector<double> r(x.size());
  for (std::size_t i = 0; i < idx.size();) {
    std::size_t j = i;
    while (j + 1 < idx.size() && x[idx[j + 1]] == x[idx[i]]) ++j;
    const double mean = 0.5 * (static_cast<double>(i) + static_cast<double>(j));
    for (std::size_t t = i; t <= j; ++t) r[idx[t]] = mean;
    i = j + 1;
  }
  return r;
}

inline double spearman(const std::vector<double>& a,
                       const std::vector<double>& b) {
  const std::vector<double> ra = ranks(a);
  const std::vector<double> rb = ranks(b);
  const double n = static_cast<double>(a.size());
  const double ma = std::accumulate(ra.begin(), ra.end(), 0.0) / n;
  const double mb = std::accumulate(rb.begin(), rb.end(), 0.0) / n;
  double num = 0.0, da = 0.0, db = 0.0;
  for (std::size_t i = 0; i < ra.size(); ++i) {
    num += (ra[i] - ma) * (rb[i] - mb);
    da += (ra[i] - ma) * (ra[i] - ma);
    db += (rb[i] - mb) * (rb[i] - mb);
  }
  return num / std::sqrt(da * db);
}

// Pearson chi-square statistic of observed counts against probabilities,
// pooling cells with expected count below 5 into one.
struct ChiSquare {
  double statistic = 0.0;
  int dof = 0;
};
inline ChiSquare chi_square(const std::vector<long long>& observed,
                            const std::vector<double>& probabilities,
                            long long total) {
  ChiSquare out;
  double pool_obs = 0.0, pool_exp = 0.0;
  int cells = 0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double expected = probabilities[i] * static_cast<double>(total);
    if (expected < 5.0) {
      pool_obs += static_cast<double>(observed[i]);
      pool_exp += expected;
      continue;
    }
    const double d = static_cast<double>(observed[i]) - expected;
    out.statistic += d * d / expected;
    ++cells;
  }
  if (pool_exp > 0.0) {
    const double d = pool_obs - pool_exp;
    out.statistic += d * d / std::max(pool_exp, 1e-300);
    ++cells;
  }
  out.dof = std::max(1, cells - 1);
  return out;
}

// Wilson-Hilferty upper quantile of chi-square at z standard deviations.
inline double chi_square_bound(int dof, double z) {
  const double k = dof;
  const double a = 2.0 / (9.0 * k);
  return k * std::pow(1.0 - a + z * std::sqrt(a), 3.0);
}

}  // namespace gbsdks::testing

#endif  // GBSDKS_TESTS_ORACLES_HPP_
