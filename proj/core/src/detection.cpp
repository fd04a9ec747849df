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

#include "gbsdks/detection.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <complex>
#include <functional>
#include <sstream>
#include <string>

#include "gbsdks/errors.hpp"
#include "gbsdks/hafnian.hpp"

namespace gbsdks {
namespace {

using Complex = std::complex<double>;
template <typename T>
using Mat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;

inline double re(double x) { return x; }
inline double re(Complex z) { return z.real(); }
inline double cj(double x) { return x; }
inline Complex cj(Complex z) { return std::conj(z); }
inline double abs2(double x) { return x * x; }
inline double abs2(Complex z) { return std::norm(z); }

void check_width(int n, int limit, const char* what) {
  if (n > limit) {
    throw CapacityError(std::string(what) + ": " + std::to_string(n) +
                        " spatial modes exceed the limit of " +
                        std::to_string(limit));
  }
}

// Q restricted to the listed spatial modes; each mode contributes a contiguous
// block of 2 * spectral_modes rows.
template <typename T>
Mat<T> grouped_q(const CovarianceState& state, const std::vector<int>& spatial) {
  const CMatrix q = state.q_matrix();
  std::vector<int> rows;
  for (int mode : spatial) {
    const std::vector<int> r = state.doubled_rows(mode);
    rows.insert(rows.end(), r.begin(), r.end());
  }
  const auto d = static_cast<Eigen::Index>(rows.size());
  Mat<T> g(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      if constexpr (std::is_same_v<T, double>) {
        g(i, j) = q(rows[i], rows[j]).real();
      } else {
        g(i, j) = q(rows[i], rows[j]);
      }
    }
  }
  return g;
}

template <typename T>
Mat<T> gather_blocks(const Mat<T>& g, int b, const std::vector<int>& blocks) {
  const auto d = static_cast<Eigen::Index>(blocks.size()) * b;
  Mat<T> out(d, d);
  for (std::size_t p = 0; p < blocks.size(); ++p) {
    for (std::size_t q = 0; q < blocks.size(); ++q) {
      out.block(p * b, q * b, b, b) = g.block(blocks[p] * b, blocks[q] * b, b, b);
    }
  }
  return out;
}

template <typename T>
Mat<T> gather_rect(const Mat<T>& g, int b, const std::vector<int>& rows,
                   const std::vector<int>& cols) {
  Mat<T> out(static_cast<Eigen::Index>(rows.size()) * b,
             static_cast<Eigen::Index>(cols.size()) * b);
  for (std::size_t p = 0; p < rows.size(); ++p) {
    for (std::size_t q = 0; q < cols.size(); ++q) {
      out.block(p * b, q * b, b, b) = g.block(rows[p] * b, cols[q] * b, b, b);
    }
  }
  return out;
}

// 1 / sqrt(det g) for a Hermitian positive-definite g.
template <typename T>
double inverse_sqrt_det(const Mat<T>& g) {
  if (g.rows() == 0) return 1.0;
  Eigen::LLT<Mat<T>> llt(g);
  if (llt.info() != Eigen::Success) {
    throw NumericalError("vacuum projection matrix is not positive definite");
  }
  double log_root = 0.0;
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    log_root += std::log(re(llt.matrixLLT()(i, i)));
  }
  return std::exp(-log_root);
}

// 1 / sqrt(det g_S) for every subset S of the blocks, indexed by bitmask.
// Depth-first over subsets in increasing block order, extending the parent's
// Cholesky factor by one block at each step.
template <typename T>
std::vector<double> subset_table(const Mat<T>& g, int blocks, int b) {
  check_width(blocks, kMaxTableModes, "vacuum table");
  const int dim = blocks * b;
  std::vector<T> lower(static_cast<std::size_t>(dim) * dim);
  std::vector<int> orig(dim);
  std::vector<double> table(std::size_t{1} << blocks);
  table[0] = 1.0;

  std::function<void(std::uint32_t, int, int, double)> visit =
      [&](std::uint32_t mask, int next, int depth, double logdet) {
        for (int j = next; j < blocks; ++j) {
          double ld = logdet;
          for (int t = 0; t < b; ++t) {
            const int i = depth + t;
            const int p = j * b + t;
            orig[i] = p;
            T* li = &lower[static_cast<std::size_t>(i) * dim];
            for (int c = 0; c < i; ++c) {
              const T* lc = &lower[static_cast<std::size_t>(c) * dim];
              T acc = g(p, orig[c]);
              for (int k = 0; k < c; ++k) acc -= li[k] * cj(lc[k]);
              li[c] = acc / lc[c];
            }
            double diag = re(g(p, p));
            for (int k = 0; k < i; ++k) diag -= abs2(li[k]);
            if (!(diag > 0.0)) {
              throw NumericalError(
                  "vacuum projection matrix is not positive definite");
            }
            li[i] = T(std::sqrt(diag));
            ld += std::log(diag);
          }
          const std::uint32_t child = mask | (std::uint32_t{1} << j);
          table[child] = std::exp(-0.5 * ld);
          visit(child, j + 1, depth + b, ld);
        }
      };
  visit(0, 0, 0, 0.0);
  return table;
}

// Projects the `vac` blocks onto vacuum: returns their vacuum probability and
// the Schur complement on the `keep` blocks (the unnormalised conditional
// state's Q matrix).
template <typename T>
std::pair<double, Mat<T>> condition_on_vacuum(const Mat<T>& g, int b,
                                              const std::vector<int>& vac,
                                              const std::vector<int>& keep) {
  Mat<T> kk = gather_blocks(g, b, keep);
  if (vac.empty()) return {1.0, std::move(kk)};
  const Mat<T> zz = gather_blocks(g, b, vac);
  Eigen::LLT<Mat<T>> llt(zz);
  if (llt.info() != Eigen::Success) {
    throw NumericalError("vacuum projection matrix is not positive definite");
  }
  double log_root = 0.0;
  for (Eigen::Index i = 0; i < zz.rows(); ++i) {
    log_root += std::log(re(llt.matrixLLT()(i, i)));
  }
  if (!keep.empty()) {
    const Mat<T> y = llt.matrixL().solve(gather_rect(g, b, vac, keep));
    kk -= y.adjoint() * y;
    kk = (kk + kk.adjoint()).eval() / 2.0;
  }
  return {std::exp(-log_root), std::move(kk)};
}

std::vector<int> all_modes(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}

template <typename T>
double threshold_probability_impl(const CovarianceState& state,
                                  const ClickPattern& pattern) {
  const int n = state.spatial_modes();
  const int b = 2 * state.spectral_modes();
  const Mat<T> g = grouped_q<T>(state, all_modes(n));
  std::vector<int> clicked;
  std::vector<int> dark;
  for (int i = 0; i < n; ++i) {
    ((pattern.mask() >> i) & 1U ? clicked : dark).push_back(i);
  }
  auto [p_dark, cond] = condition_on_vacuum(g, b, dark, clicked);
  if (clicked.empty()) return p_dark;
  const std::vector<double> t =
      subset_table<T>(cond, static_cast<int>(clicked.size()), b);
  double sum = 0.0;
  for (std::size_t u = 0; u < t.size(); ++u) {
    sum += (std::popcount(u) % 2 == 0) ? t[u] : -t[u];
  }
  return std::max(0.0, p_dark * sum);
}

template <typename T>
ClickPattern sample_chain_impl(const CovarianceState& state, Rng& rng) {
  const int n = state.spatial_modes();
  const int b = 2 * state.spectral_modes();
  Mat<T> work = grouped_q<T>(state, all_modes(n));
  std::vector<int> active = all_modes(n);  // modes still present in `work`
  std::vector<int> clicked;
  std::uint64_t mask = 0;
  for (int j = 0; j < n; ++j) {
    auto position = [&](int mode) {
      return static_cast<int>(
          std::lower_bound(active.begin(), active.end(), mode) -
          active.begin());
    };
    std::vector<int> blocks;
    for (int mode : clicked) blocks.push_back(position(mode));
    const int pos_j = position(j);
    blocks.push_back(pos_j);
    const int c = static_cast<int>(clicked.size());
    const std::vector<double> t =
        subset_table<T>(gather_blocks(work, b, blocks), c + 1, b);
    const std::uint32_t bit_j = std::uint32_t{1} << c;
    double prefix = 0.0;
    double prefix_dark = 0.0;
    for (std::uint32_t s = 0; s < bit_j; ++s) {
      const bool negative = std::popcount(s) % 2 != 0;
      prefix += negative ? -t[s] : t[s];
      prefix_dark += negative ? -t[s | bit_j] : t[s | bit_j];
    }
    double p_dark = prefix > 0.0 ? prefix_dark / prefix : 1.0;
    p_dark = std::clamp(p_dark, 0.0, 1.0);
    if (uniform01(rng) < p_dark) {
      std::vector<int> keep;
      for (int p = 0; p < static_cast<int>(active.size()); ++p) {
        if (p != pos_j) keep.push_back(p);
      }
      work = condition_on_vacuum(work, b, {pos_j}, keep).second;
      active.erase(active.begin() + pos_j);
    } else {
      clicked.push_back(j);
      mask |= std::uint64_t{1} << j;
    }
  }
  return ClickPattern(mask, n);
}

double factorial(int s) {
  double f = 1.0;
  for (int i = 2; i <= s; ++i) f *= i;
  return f;
}

}  // namespace

ClickPattern::ClickPattern(std::uint64_t mask, int width)
    : mask_(mask), width_(width) {
  if (width < 0 || width > 64) {
    throw ParameterError("click pattern width must lie in [0, 64]");
  }
  if (width < 64 && (mask >> width) != 0) {
    throw ParameterError("click pattern has bits beyond its width");
  }
}

int ClickPattern::count() const { return std::popcount(mask_); }

std::vector<int> ClickPattern::modes() const {
  std::vector<int> out;
  for (int i = 0; i < width_; ++i) {
    if ((mask_ >> i) & 1U) out.push_back(i);
  }
  return out;
}

std::string ClickPattern::bitstring() const {
  std::string s(static_cast<std::size_t>(width_), '0');
  for (int i = 0; i < width_; ++i) {
    if ((mask_ >> i) & 1U) s[i] = '1';
  }
  return s;
}

std::vector<double> SubspaceDistribution::weights() const {
  std::vector<double> w(probabilities.size(), 0.0);
  if (norm <= 0.0) return w;
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = probabilities[i] / norm;
  return w;
}

std::string SubspaceDistribution::to_csv() const {
  std::ostringstream out;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", norm);
  out << "# k: " << k << "\n# subspace_mass: " << buf << "\n";
  out << "pattern,probability\n";
  const std::vector<double> w = weights();
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.12g", w[i]);
    out << patterns[i].bitstring() << ',' << buf << '\n';
  }
  return out.str();
}

double vacuum_probability(const CovarianceState& state, std::uint64_t spatial) {
  const int n = state.spatial_modes();
  if (n < 64 && (spatial >> n) != 0) {
    throw ParameterError("vacuum_probability: subset exceeds the mode count");
  }
  std::vector<int> modes;
  for (int i = 0; i < n; ++i) {
    if ((spatial >> i) & 1U) modes.push_back(i);
  }
  if (modes.empty()) return 1.0;
  if (state.is_real()) return inverse_sqrt_det(grouped_q<double>(state, modes));
  return inverse_sqrt_det(grouped_q<Complex>(state, modes));
}

double threshold_probability(const CovarianceState& state,
                             const ClickPattern& pattern) {
  if (pattern.width() != state.spatial_modes()) {
    throw ParameterError("click pattern width does not match the state");
  }
  if (state.is_real()) return threshold_probability_impl<double>(state, pattern);
  return threshold_probability_impl<Complex>(state, pattern);
}

double pnr_probability(const CovarianceState& state,
                       const std::vector<int>& occupations) {
  if (state.spectral_modes() != 1) {
    throw ParameterError("PNR probabilities need a single spectral mode");
  }
  const int m = state.spatial_modes();
  if (static_cast<int>(occupations.size()) != m) {
    throw ParameterError("occupation vector length does not match the state");
  }
  int total = 0;
  for (int s : occupations) {
    if (s < 0) throw ParameterError("photon counts must be nonnegative");
    total += s;
  }
  const CMatrix kernel = recover_kernel(state);
  const double scale = std::max(1.0, kernel.cwiseAbs().maxCoeff());
  const bool pure_kernel =
      kernel.topRightCorner(m, m).cwiseAbs().maxCoeff() <= 1e-12 * scale;
  if (total % 2 != 0 && pure_kernel) return 0.0;
  if (2 * total > kMaxPowerTraceHafnianDim) {
    throw CapacityError("PNR probability with " + std::to_string(total) +
                        " photons exceeds the hafnian limit");
  }
  std::vector<int> idx;
  double factorials = 1.0;
  for (int i = 0; i < m; ++i) {
    for (int r = 0; r < occupations[i]; ++r) idx.push_back(i);
    factorials *= factorial(occupations[i]);
  }
  const std::size_t half = idx.size();
  for (std::size_t r = 0; r < half; ++r) idx.push_back(idx[r] + m);
  const auto d = static_cast<Eigen::Index>(idx.size());
  CMatrix sub(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) sub(r, c) = kernel(idx[r], idx[c]);
  }
  sub = (sub + sub.transpose()).eval() / 2.0;
  const double haf = hafnian(sub).real();
  const double vac = inverse_sqrt_det<Complex>(state.q_matrix());
  return std::max(0.0, haf * vac / factorials);
}

std::vector<double> vacuum_table(const CovarianceState& state) {
  const int n = state.spatial_modes();
  check_width(n, kMaxTableModes, "vacuum_table");
  const int b = 2 * state.spectral_modes();
  if (state.is_real()) {
    return subset_table<double>(grouped_q<double>(state, all_modes(n)), n, b);
  }
  return subset_table<Complex>(grouped_q<Complex>(state, all_modes(n)), n, b);
}

namespace {

// Möbius inversion of the vacuum table: P(exactly C) =
// sum_{T subset C} (-1)^{|C \ T|} P_vac(complement of T).
std::vector<double> patterns_from_vacuum(const std::vector<double>& f, int n) {
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<double> p(f.size());
  for (std::uint32_t t = 0; t <= full; ++t) p[t] = f[full ^ t];
  for (int i = 0; i < n; ++i) {
    const std::uint32_t bit = std::uint32_t{1} << i;
    for (std::uint32_t s = 0; s <= full; ++s) {
      if (s & bit) p[s] -= p[s ^ bit];
    }
  }
  for (double& v : p) v = std::max(0.0, v);
  return p;
}

}  // namespace

std::vector<double> click_pattern_probabilities(const CovarianceState& state) {
  const int n = state.spatial_modes();
  check_width(n, kMaxEnumerationModes, "click_pattern_probabilities");
  return patterns_from_vacuum(vacuum_table(state), n);
}

std::vector<double> click_count_masses(const CovarianceState& state) {
  const int n = state.spatial_modes();
  check_width(n, kMaxTableModes, "click_count_masses");
  const std::vector<double> p = patterns_from_vacuum(vacuum_table(state), n);
  std::vector<double> masses(static_cast<std::size_t>(n) + 1, 0.0);
  for (std::size_t s = 0; s < p.size(); ++s) masses[std::popcount(s)] += p[s];
  return masses;
}

SubspaceDistribution enumerate_subspace(const CovarianceState& state, int k) {
  const int n = state.spatial_modes();
  if (n > kMaxEnumerationModes) {
    throw CapacityError("enumerate_subspace: " + std::to_string(n) +
                        " spatial modes exceed the enumeration limit of " +
                        std::to_string(kMaxEnumerationModes) +
                        "; use sample_chain instead");
  }
  if (k < 0 || k > n) {
    throw ParameterError("enumerate_subspace: k must lie in [0, n]");
  }
  const std::vector<double> all = click_pattern_probabilities(state);
  SubspaceDistribution dist;
  dist.k = k;
  dist.width = n;
  // Selector with k leading ones; prev_permutation walks the k-subsets in
  // lexicographic order of their sorted vertex tuples.
  std::vector<char> select(static_cast<std::size_t>(n), 0);
  std::fill(select.begin(), select.begin() + k, 1);
  do {
    std::uint64_t mask = 0;
    for (int i = 0; i < n; ++i) {
      if (select[i]) mask |= std::uint64_t{1} << i;
    }
    dist.patterns.emplace_back(mask, n);
    dist.probabilities.push_back(all[mask]);
    dist.norm += all[mask];
  } while (std::prev_permutation(select.begin(), select.end()));
  return dist;
}

namespace {

// Binomial coefficients C(a, j) for a <= 64, as doubles (exact below 2^53 for
// every size the guards admit).
std::vector<std::vector<double>> binomial_table(int n) {
  std::vector<std::vector<double>> c(n + 1, std::vector<double>(n + 2, 0.0));
  for (int a = 0; a <= n; ++a) {
    c[a][0] = 1.0;
    for (int j = 1; j <= a; ++j) c[a][j] = c[a - 1][j - 1] + c[a - 1][j];
  }
  return c;
}

// 1 / sqrt(det g_T) for every block subset T with |T| <= max_depth, grouped by
// size and indexed by the colex rank sum_i C(t_i, i + 1) of the sorted tuple.
template <typename T>
std::vector<std::vector<double>> low_order_table(
    const Mat<T>& g, int blocks, int b, int max_depth,
    const std::vector<std::vector<double>>& binom) {
  std::vector<std::vector<double>> table(max_depth + 1);
  for (int j = 0; j <= max_depth; ++j) {
    table[j].assign(static_cast<std::size_t>(binom[blocks][j]), 0.0);
  }
  table[0][0] = 1.0;
  const int dim = max_depth * b;
  std::vector<T> lower(static_cast<std::size_t>(std::max(dim, 1)) * dim);
  std::vector<int> orig(std::max(dim, 1));

  std::function<void(int, int, std::size_t, double)> visit =
      [&](int next, int size, std::size_t rank, double logdet) {
        if (size == max_depth) return;
        const int depth = size * b;
        for (int j = next; j < blocks; ++j) {
          double ld = logdet;
          for (int t = 0; t < b; ++t) {
            const int i = depth + t;
            const int p = j * b + t;
            orig[i] = p;
            T* li = &lower[static_cast<std::size_t>(i) * dim];
            for (int c = 0; c < i; ++c) {
              const T* lc = &lower[static_cast<std::size_t>(c) * dim];
              T acc = g(p, orig[c]);
              for (int k = 0; k < c; ++k) acc -= li[k] * cj(lc[k]);
              li[c] = acc / lc[c];
            }
            double diag = re(g(p, p));
            for (int k = 0; k < i; ++k) diag -= abs2(li[k]);
            if (!(diag > 0.0)) {
              throw NumericalError("inverse Q matrix is not positive definite");
            }
            li[i] = T(std::sqrt(diag));
            ld += std::log(diag);
          }
          const std::size_t child =
              rank + static_cast<std::size_t>(binom[j][size + 1]);
          table[size + 1][child] = std::exp(-0.5 * ld);
          visit(j + 1, size + 1, child, ld);
        }
      };
  visit(0, 0, 0, 0.0);
  return table;
}

// sum over subsets T of `c` of (-1)^{k - |T|} f(T), walking T depth first.
struct AlternatingSum {
  const std::vector<std::vector<double>>& f;
  const std::vector<std::vector<double>>& binom;
  const std::vector<int>& c;
  int k;

  double run(int i, int size, std::size_t rank) const {
    if (i == k) {
      const double v = f[size][rank];
      return (k - size) % 2 == 0 ? v : -v;
    }
    return run(i + 1, size, rank) +
           run(i + 1, size + 1,
               rank + static_cast<std::size_t>(binom[c[i]][size + 1]));
  }
};

template <typename T>
SubspaceDistribution complement_impl(const CovarianceState& state, int k) {
  const int n = state.spatial_modes();
  const int b = 2 * state.spectral_modes();
  const Mat<T> q = grouped_q<T>(state, all_modes(n));
  Eigen::LLT<Mat<T>> llt(q);
  if (llt.info() != Eigen::Success) {
    throw NumericalError("vacuum projection matrix is not positive definite");
  }
  double log_root = 0.0;
  for (Eigen::Index i = 0; i < q.rows(); ++i) {
    log_root += std::log(re(llt.matrixLLT()(i, i)));
  }
  const double p_all = std::exp(-log_root);
  Mat<T> inv = llt.solve(Mat<T>::Identity(q.rows(), q.cols()));
  inv = (inv + inv.adjoint()).eval() / 2.0;

  const auto binom = binomial_table(n);
  // det Q_{~T} = det Q * det (Q^{-1})_T, so P_vac(~T) = p_all * table(T).
  const auto f = low_order_table<T>(inv, n, b, k, binom);

  SubspaceDistribution dist;
  dist.k = k;
  dist.width = n;
  std::vector<char> select(static_cast<std::size_t>(n), 0);
  std::fill(select.begin(), select.begin() + k, 1);
  std::vector<int> members(static_cast<std::size_t>(k));
  do {
    std::uint64_t mask = 0;
    int m = 0;
    for (int i = 0; i < n; ++i) {
      if (select[i]) {
        mask |= std::uint64_t{1} << i;
        members[m++] = i;
      }
    }
    const double p =
        std::max(0.0, p_all * AlternatingSum{f, binom, members, k}.run(0, 0, 0));
    dist.patterns.emplace_back(mask, n);
    dist.probabilities.push_back(p);
    dist.norm += p;
  } while (std::prev_permutation(select.begin(), select.end()));
  return dist;
}

}  // namespace

double complement_enumeration_cost(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  const auto binom = binomial_table(n);
  double subsets = 0.0;
  for (int j = 0; j <= k; ++j) subsets += binom[n][j];
  return std::max(subsets, binom[n][k]);
}

SubspaceDistribution enumerate_subspace_by_complement(
    const CovarianceState& state, int k) {
  const int n = state.spatial_modes();
  if (k < 0 || k > n) {
    throw ParameterError("enumerate_subspace_by_complement: k must lie in "
                         "[0, n]");
  }
  check_width(n, 64, "enumerate_subspace_by_complement");
  if (complement_enumeration_cost(n, k) > kMaxComplementSubsets) {
    throw CapacityError("enumerate_subspace_by_complement: n = " +
                        std::to_string(n) + ", k = " + std::to_string(k) +
                        " needs more than 2^24 subsets; use sample_chain");
  }
  if (state.is_real()) return complement_impl<double>(state, k);
  return complement_impl<Complex>(state, k);
}

SubspaceSampler::SubspaceSampler(const SubspaceDistribution& dist) {
  double running = 0.0;
  for (std::size_t i = 0; i < dist.patterns.size(); ++i) {
    if (dist.probabilities[i] <= 0.0) continue;
    running += dist.probabilities[i];
    patterns_.push_back(dist.patterns[i]);
    cumulative_.push_back(running);
  }
  if (patterns_.empty() || !(running > 0.0)) {
    throw EmptyDistributionError("the " + std::to_string(dist.k) +
                                 "-click subspace has zero probability");
  }
}

ClickPattern SubspaceSampler::draw(Rng& rng) const {
  const double u = uniform01(rng) * cumulative_.back();
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  if (it == cumulative_.end()) --it;
  return patterns_[static_cast<std::size_t>(it - cumulative_.begin())];
}

std::vector<ClickPattern> sample_subspace(const SubspaceDistribution& dist,
                                          Rng& rng, int count) {
  if (count < 0) throw ParameterError("sample count must be >= 0");
  const SubspaceSampler sampler(dist);
  std::vector<ClickPattern> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(sampler.draw(rng));
  return out;
}

ClickPattern sample_chain(const CovarianceState& state, Rng& rng) {
  check_width(state.spatial_modes(), 64, "sample_chain");
  if (state.is_real()) return sample_chain_impl<double>(state, rng);
  return sample_chain_impl<Complex>(state, rng);
}

}  // namespace gbsdks
