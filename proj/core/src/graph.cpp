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

#include "gbsdks/graph.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "gbsdks/errors.hpp"
#include "gbsdks/rng.hpp"

namespace gbsdks {
namespace {

void check_vertex(int v, int n, const char* what) {
  if (v < 0 || v >= n) {
    throw ParameterError(std::string(what) + ": vertex " + std::to_string(v) +
                         " outside [0, " + std::to_string(n) + ")");
  }
}

void check_parent(const Graph& g, const SubgraphSelection& sel) {
  if (sel.parent_n() != g.size()) {
    throw SelectionError("selection built for a graph with " +
                         std::to_string(sel.parent_n()) +
                         " vertices applied to a graph with " +
                         std::to_string(g.size()));
  }
}

}  // namespace

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
  if (n < 1) throw ParameterError("graph needs at least one vertex");
  bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

bool Graph::has_edge(int i, int j) const {
  check_vertex(i, n_, "has_edge");
  check_vertex(j, n_, "has_edge");
  return (bits_[static_cast<std::size_t>(i) * words_ + j / 64] >> (j % 64)) &
         1U;
}

int Graph::degree(int i) const {
  check_vertex(i, n_, "degree");
  int d = 0;
  const std::uint64_t* row = &bits_[static_cast<std::size_t>(i) * words_];
  for (int w = 0; w < words_; ++w) d += std::popcount(row[w]);
  return d;
}

long long Graph::edge_count() const {
  long long twice = 0;
  for (std::uint64_t word : bits_) twice += std::popcount(word);
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (has_edge(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

Eigen::MatrixXd Graph::adjacency() const {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_, n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (has_edge(i, j)) a(i, j) = 1.0;
    }
  }
  return a;
}

std::uint64_t Graph::neighbor_mask(int i) const {
  if (n_ > kMaxSamplingVertices) {
    throw CapacityError("neighbor_mask requires at most 64 vertices");
  }
  check_vertex(i, n_, "neighbor_mask");
  return bits_[static_cast<std::size_t>(i)];
}

GraphBuilder& GraphBuilder::add_edge(int i, int j) {
  const int n = graph_.n_;
  check_vertex(i, n, "add_edge");
  check_vertex(j, n, "add_edge");
  if (i == j) {
    throw ParameterError("self loop on vertex " + std::to_string(i));
  }
  const auto words = static_cast<std::size_t>(graph_.words_);
  graph_.bits_[i * words + j / 64] |= std::uint64_t{1} << (j % 64);
  graph_.bits_[j * words + i / 64] |= std::uint64_t{1} << (i % 64);
  return *this;
}

Graph graph_from_edges(int n, std::span<const std::pair<int, int>> edges) {
  GraphBuilder builder(n);
  for (const auto& [i, j] : edges) builder.add_edge(i, j);
  return builder.build();
}

Graph graph_from_adjacency(const Eigen::MatrixXd& adjacency) {
  if (adjacency.rows() != adjacency.cols() || adjacency.rows() < 1) {
    throw ValidationError("adjacency matrix must be square and nonempty");
  }
  const int n = static_cast<int>(adjacency.rows());
  GraphBuilder builder(n);
  for (int i = 0; i < n; ++i) {
    if (adjacency(i, i) != 0.0) {
      throw ValidationError("adjacency has a nonzero diagonal at " +
                            std::to_string(i));
    }
    for (int j = i + 1; j < n; ++j) {
      const double a = adjacency(i, j);
      if (a != adjacency(j, i)) {
        throw ValidationError("adjacency is not symmetric at (" +
                              std::to_string(i) + ", " + std::to_string(j) +
                              ")");
      }
      if (a != 0.0 && a != 1.0) {
        throw ValidationError("adjacency entries must be 0 or 1");
      }
      if (a == 1.0) builder.add_edge(i, j);
    }
  }
  return builder.build();
}

Graph complete_graph(int n) {
  GraphBuilder builder(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) builder.add_edge(i, j);
  }
  return builder.build();
}

SubgraphSelection::SubgraphSelection(std::vector<int> vertices, int parent_n)
    : vertices_(std::move(vertices)), parent_n_(parent_n) {
  if (parent_n_ < 1) throw SelectionError("parent graph must be nonempty");
  if (vertices_.empty()) throw SelectionError("selection must be nonempty");
  std::vector<char> seen(static_cast<std::size_t>(parent_n_), 0);
  for (int v : vertices_) {
    if (v < 0 || v >= parent_n_) {
      throw SelectionError("selected vertex " + std::to_string(v) +
                           " outside [0, " + std::to_string(parent_n_) + ")");
    }
    if (seen[v]) {
      throw SelectionError("vertex " + std::to_string(v) + " selected twice");
    }
    seen[v] = 1;
  }
}

SubgraphSelection SubgraphSelection::from_mask(std::uint64_t mask,
                                               int parent_n) {
  if (parent_n > kMaxSamplingVertices) {
    throw CapacityError("bitmask selections support at most 64 vertices");
  }
  if (parent_n < 64 && (mask >> parent_n) != 0) {
    throw SelectionError("mask has bits beyond the parent graph");
  }
  std::vector<int> vertices;
  for (int v = 0; v < parent_n; ++v) {
    if ((mask >> v) & 1U) vertices.push_back(v);
  }
  return SubgraphSelection(std::move(vertices), parent_n);
}

SubgraphSelection SubgraphSelection::all(int parent_n) {
  std::vector<int> vertices(static_cast<std::size_t>(std::max(parent_n, 0)));
  for (int v = 0; v < parent_n; ++v) vertices[v] = v;
  return SubgraphSelection(std::move(vertices), parent_n);
}

bool SubgraphSelection::contains(int v) const {
  return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

std::uint64_t SubgraphSelection::mask() const {
  if (parent_n_ > kMaxSamplingVertices) {
    throw CapacityError("bitmask selections support at most 64 vertices");
  }
  std::uint64_t m = 0;
  for (int v : vertices_) m |= std::uint64_t{1} << v;
  return m;
}

Graph erdos_renyi(int n, double rho, std::uint64_t seed) {
  if (n < 1) throw ParameterError("erdos_renyi: n must be positive");
  if (!(rho >= 0.0)) throw ParameterError("erdos_renyi: rho must be >= 0");
  Rng rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double threshold = rho / 2.0;
  GraphBuilder builder(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      if (unit(rng) < threshold) builder.add_edge(i, j);
    }
  }
  return builder.build();
}

double density(const Graph& g) {
  const double n = g.size();
  if (g.size() < 2) {
    throw DegenerateGraphError("density needs at least two vertices");
  }
  return 2.0 * static_cast<double>(g.edge_count()) / (n * (n - 1.0));
}

long long internal_edge_count(const Graph& g, const SubgraphSelection& sel) {
  check_parent(g, sel);
  const auto& v = sel.vertices();
  long long edges = 0;
  for (std::size_t a = 0; a < v.size(); ++a) {
    for (std::size_t b = a + 1; b < v.size(); ++b) {
      if (g.has_edge(v[a], v[b])) ++edges;
    }
  }
  return edges;
}

double subgraph_density(const Graph& g, const SubgraphSelection& sel) {
  const double k = sel.size();
  if (sel.size() < 2) {
    throw DegenerateGraphError("density needs at least two vertices");
  }
  return 2.0 * static_cast<double>(internal_edge_count(g, sel)) /
         (k * (k - 1.0));
}

Graph induced_subgraph(const Graph& g, const SubgraphSelection& sel) {
  check_parent(g, sel);
  const auto& v = sel.vertices();
  GraphBuilder builder(sel.size());
  for (int a = 0; a < sel.size(); ++a) {
    for (int b = a + 1; b < sel.size(); ++b) {
      if (g.has_edge(v[a], v[b])) builder.add_edge(a, b);
    }
  }
  return builder.build();
}

Graph plant_clique(const Graph& g, const SubgraphSelection& members) {
  check_parent(g, members);
  GraphBuilder builder(g);
  const auto& v = members.vertices();
  for (std::size_t a = 0; a < v.size(); ++a) {
    for (std::size_t b = a + 1; b < v.size(); ++b) builder.add_edge(v[a], v[b]);
  }
  return builder.build();
}

SubgraphSelection shrink_to_k(const Graph& g, const SubgraphSelection& sel,
                              int k) {
  check_parent(g, sel);
  if (k < 1 || k > sel.size()) {
    throw ParameterError("shrink_to_k: k = " + std::to_string(k) +
                         " must lie in [1, " + std::to_string(sel.size()) +
                         "]");
  }
  const auto& v = sel.vertices();
  const int m = sel.size();
  std::vector<int> deg(m, 0);
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      if (g.has_edge(v[a], v[b])) {
        ++deg[a];
        ++deg[b];
      }
    }
  }
  std::vector<char> alive(m, 1);
  for (int remaining = m; remaining > k; --remaining) {
    int victim = -1;
    for (int a = 0; a < m; ++a) {
      if (!alive[a]) continue;
      if (victim < 0 || deg[a] < deg[victim] ||
          (deg[a] == deg[victim] && v[a] < v[victim])) {
        victim = a;
      }
    }
    alive[victim] = 0;
    for (int a = 0; a < m; ++a) {
      if (alive[a] && g.has_edge(v[a], v[victim])) --deg[a];
    }
  }
  std::vector<int> kept;
  kept.reserve(k);
  for (int a = 0; a < m; ++a) {
    if (alive[a]) kept.push_back(v[a]);
  }
  return SubgraphSelection(std::move(kept), g.size());
}

SubgraphSelection greedy_peel(const Graph& g, int k) {
  if (k < 1 || k > g.size()) {
    throw ParameterError("greedy_peel: k = " + std::to_string(k) +
                         " must lie in [1, " + std::to_string(g.size()) + "]");
  }
  return shrink_to_k(g, SubgraphSelection::all(g.size()), k);
}

SubgraphSelection grow_to_k(const Graph& g, const SubgraphSelection& sel,
                            int k) {
  check_parent(g, sel);
  if (k < sel.size() || k > g.size()) {
    throw ParameterError("grow_to_k: k = " + std::to_string(k) +
                         " must lie in [" + std::to_string(sel.size()) + ", " +
                         std::to_string(g.size()) + "]");
  }
  const int n = g.size();
  std::vector<int> chosen = sel.vertices();
  std::vector<char> inside(n, 0);
  std::vector<int> links(n, 0);
  for (int v : chosen) inside[v] = 1;
  for (int u = 0; u < n; ++u) {
    for (int v : chosen) {
      if (g.has_edge(u, v)) ++links[u];
    }
  }
  while (static_cast<int>(chosen.size()) < k) {
    int best = -1;
    for (int u = 0; u < n; ++u) {
      if (inside[u]) continue;
      if (best < 0 || links[u] > links[best]) best = u;
    }
    inside[best] = 1;
    chosen.push_back(best);
    for (int u = 0; u < n; ++u) {
      if (g.has_edge(u, best)) ++links[u];
    }
  }
  return SubgraphSelection(std::move(chosen), n);
}

}  // namespace gbsdks
