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

#ifndef GBSDKS_GRAPH_HPP_
#define GBSDKS_GRAPH_HPP_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace gbsdks {

// Vertex count above which sampling experiments and bitmask helpers refuse a
// graph. Plain graph algorithms work at any size.
inline constexpr int kMaxSamplingVertices = 64;

// Undirected, unweighted simple graph stored as packed adjacency bit rows.
// Immutable; build one with GraphBuilder or a generator below.
class Graph {
 public:
  // Edgeless graph on n >= 1 vertices.
  explicit Graph(int n);

  int size() const { return n_; }
  bool has_edge(int i, int j) const;
  int degree(int i) const;
  long long edge_count() const;
  // Edges (i, j) with i < j in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;
  // Dense 0/1 adjacency matrix.
  Eigen::MatrixXd adjacency() const;
  // Neighbourhood of i as a bitmask; requires size() <= 64.
  std::uint64_t neighbor_mask(int i) const;

  bool operator==(const Graph& other) const = default;

 private:
  friend class GraphBuilder;
  int n_;
  int words_;
  std::vector<std::uint64_t> bits_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(int n) : graph_(n) {}
  explicit GraphBuilder(Graph g) : graph_(std::move(g)) {}

  // Idempotent. Self loops and out-of-range endpoints throw ParameterError.
  GraphBuilder& add_edge(int i, int j);
  Graph build() const { return graph_; }

 private:
  Graph graph_;
};

Graph graph_from_edges(int n, std::span<const std::pair<int, int>> edges);
// Validates symmetry, zero diagonal and 0/1 entries (ValidationError).
Graph graph_from_adjacency(const Eigen::MatrixXd& adjacency);
Graph complete_graph(int n);

// Ordered set of distinct vertices of a parent graph.
class SubgraphSelection {
 public:
  SubgraphSelection(std::vector<int> vertices, int parent_n);
  static SubgraphSelection from_mask(std::uint64_t mask, int parent_n);
  static SubgraphSelection all(int parent_n);

  const std::vector<int>& vertices() const { return vertices_; }
  int size() const { return static_cast<int>(vertices_.size()); }
  int parent_n() const { return parent_n_; }
  bool contains(int v) const;
  // Requires parent_n() <= 64.
  std::uint64_t mask() const;

  bool operator==(const SubgraphSelection& other) const = default;

 private:
  std::vector<int> vertices_;
  int parent_n_;
};

// Random graph built by visiting every ordered pair (i, j != i) and adding the
// edge when a uniform draw falls below rho / 2. Because each unordered pair is
// visited twice its effective edge probability is rho - rho^2 / 4 (0.36 for a
// nominal rho of 0.4), not rho.
Graph erdos_renyi(int n, double rho, std::uint64_t seed);

// 2|E| / (n (n - 1)); throws DegenerateGraphError for n < 2.
double density(const Graph& g);
// density(induced_subgraph(g, sel)) without materialising the subgraph.
double subgraph_density(const Graph& g, const SubgraphSelection& sel);
// Number of edges of g with both endpoints in the selection.
long long internal_edge_count(const Graph& g, const SubgraphSelection& sel);

// Vertices relabelled 0..k-1 in selection order.
Graph induced_subgraph(const Graph& g, const SubgraphSelection& sel);

// Connects every pair of members; all other pairs are unchanged.
Graph plant_clique(const Graph& g, const SubgraphSelection& members);

// Deletes a minimum-degree vertex (smallest index on ties) of the remaining
// graph until k vertices are left. Survivors in increasing index order.
SubgraphSelection greedy_peel(const Graph& g, int k);

// Peels minimum internal-degree vertices (smallest index on ties) out of sel
// until k remain. Survivors keep their order in sel.
SubgraphSelection shrink_to_k(const Graph& g, const SubgraphSelection& sel,
                              int k);

// Appends the outside vertex with most neighbours in the current selection
// (smallest index on ties) until the selection has k vertices.
SubgraphSelection grow_to_k(const Graph& g, const SubgraphSelection& sel,
                            int k);

}  // namespace gbsdks

#endif  // GBSDKS_GRAPH_HPP_
