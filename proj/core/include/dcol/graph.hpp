#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace dcol {

using Rational = boost::rational<std::int64_t>;
using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1 with sorted adjacency.
// Immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  // Parallel edges are merged; loops and out-of-range endpoints throw.
  Graph(int n, const std::vector<Edge>& edges);

  int n() const noexcept { return static_cast<int>(adj_.size()); }
  std::size_t m() const noexcept { return m_; }
  const std::vector<int>& neighbours(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const;
  int min_degree() const;
  bool adjacent(int u, int v) const;
  bool contains(int v) const noexcept { return v >= 0 && v < n(); }
  std::vector<Edge> edges() const;

  // Induced subgraph; vertex i of the result is vs[i].
  Graph induced(const std::vector<int>& vs) const;
  Graph without_edges(const std::vector<Edge>& es) const;
  Graph with_edges(const std::vector<Edge>& es) const;

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  Graph with_labels(std::vector<std::string> labels) const;

  bool operator==(const Graph& o) const { return adj_ == o.adj_; }

 private:
  std::vector<std::vector<int>> adj_;
  std::size_t m_ = 0;
  std::vector<std::string> labels_;
};

// Accumulates edges; counts duplicates instead of failing on them.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n = 0) : n_(n) {}
  int add_vertex() { return n_++; }
  int n() const noexcept { return n_; }
  void add_edge(int u, int v);
  std::size_t duplicates() const noexcept { return duplicates_; }
  Graph build() const;

 private:
  int n_;
  std::vector<Edge> edges_;
  mutable std::size_t duplicates_ = 0;
};

struct Layering {
  std::vector<std::vector<int>> layers;
  std::optional<int> source;

  std::vector<int> layer_index(int n) const;
  // Every edge joins equal or consecutive layers.
  bool spans_ok(const Graph& g) const;
};

// Plane graph given by its internal triangular faces and the outer cycle.
struct PlaneTriangulation {
  Graph graph;
  std::vector<std::array<int, 3>> faces;
  std::vector<int> outer;

  // Throws InvalidInput describing the first failed check.
  void validate() const;
};

// Bags indexed by the nodes of a tree; bags partition the host vertices.
struct TPartition {
  Graph tree;
  std::vector<std::vector<int>> bags;

  void validate(const Graph& host) const;
  std::vector<int> bag_of(int n) const;
  // Crossing host edges per tree edge, in tree.edges() order.
  std::vector<std::pair<Edge, int>> edge_crossings(const Graph& host) const;
  int adhesion(const Graph& host) const;
};

// Combinatorial embedding: rotation[v] lists the neighbours of v in cyclic order.
struct Embedding {
  Graph graph;
  std::vector<std::vector<int>> rotation;

  // Facial walks as vertex sequences.
  std::vector<std::vector<int>> faces() const;
  // Euler's formula n - m + f = 1 + components, i.e. the rotation is planar.
  bool is_plane() const;
};

struct BlockDecomposition {
  std::vector<std::vector<int>> blocks;       // sorted vertex sets
  std::vector<std::vector<Edge>> block_edges;  // edges of each block
  std::vector<int> cut_vertices;               // sorted
};

struct Contraction {
  Graph graph;
  std::vector<int> map;  // old vertex -> new vertex
  int merged = -1;       // new id of the contracted set
};

Layering bfs_layering(const Graph& g, int r);
std::vector<int> bfs_distances(const Graph& g, int r);
std::vector<std::vector<int>> connected_components(const Graph& g);
std::vector<std::vector<int>> components_of(const Graph& g, const std::vector<char>& alive);
bool is_connected(const Graph& g);
bool is_connected_subset(const Graph& g, const std::vector<int>& s);
bool is_forest(const Graph& g);

Rational mad_exact(const Graph& g);
// Subset enumeration; only for n <= 20.
Rational mad_enumerate(const Graph& g);
// Maximum of |E(H)|/|V(H)| with a densest vertex set.
std::pair<Rational, std::vector<int>> densest_subgraph(const Graph& g);

BlockDecomposition blocks_and_cutvertices(const Graph& g);
Contraction contract_set(const Graph& g, const std::vector<int>& s);

int girth(const Graph& g);  // 0 for forests
Graph relabel(const Graph& g, const std::vector<int>& perm);  // v -> perm[v]

// Planarity via Boyer-Myrvold; nullopt when g is not planar.
std::optional<Embedding> planar_embedding(const Graph& g);
bool is_planar(const Graph& g);
// Maximal planar supergraph on the same vertices, with its embedding.
std::optional<Embedding> maximal_planar_supergraph(const Graph& g);
bool is_outerplanar(const Graph& g);

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph grid_graph(int rows, int cols);
Graph complete_bipartite(int a, int b);
Graph star_graph(int leaves);
Graph petersen_graph();
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace dcol
