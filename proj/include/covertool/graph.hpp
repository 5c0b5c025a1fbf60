#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace covertool {

using Vertex = std::string;

/// Vertex labels listed in the owning graph's vertex order.
using VertexList = std::vector<Vertex>;

/// Finite simple graph on labeled vertices.
///
/// The order in which vertices are listed at construction is the variable
/// order used by every algebraic object built from the graph. Internally
/// vertices are addressed by their position in that order.
class Graph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  Graph() = default;

  /// Throws Error on duplicate labels, loops, duplicate edges or unknown endpoints.
  Graph(std::vector<std::string> vertices,
        const std::vector<std::pair<std::string, std::string>>& edges);

  const VertexList& vertices() const noexcept { return vertices_; }
  std::size_t num_vertices() const noexcept { return vertices_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }

  /// Edges as index pairs (first < second), sorted.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool has_vertex(std::string_view label) const noexcept;
  std::size_t index_of(std::string_view label) const;
  const std::string& label(std::size_t index) const { return vertices_.at(index); }

  /// Neighbor indices in vertex order.
  const std::vector<std::size_t>& adjacent(std::size_t index) const { return adjacency_.at(index); }
  std::size_t degree(std::size_t index) const { return adjacency_.at(index).size(); }
  bool is_edge(std::size_t u, std::size_t v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  VertexList vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

/// K_{1,r} recognized inside a labeled graph.
struct StarShape {
  Vertex center;
  VertexList leaves;

  friend bool operator==(const StarShape&, const StarShape&) = default;
};

/// A vertex all of whose neighbours, except possibly one, are leaves.
struct SpecialVertex {
  Vertex vertex;
  VertexList leaf_neighbors;
  std::optional<Vertex> other_neighbor;

  friend bool operator==(const SpecialVertex&, const SpecialVertex&) = default;
};

VertexList neighbors(const Graph& g, std::string_view v);
Graph induced_subgraph(const Graph& g, const VertexList& subset);
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
std::size_t max_degree(const Graph& g);
std::optional<StarShape> star_shape(const Graph& g);

/// Leaf-adjacent vertex used to frame tree generators.
///
/// Non-leaf vertices are preferred; a leaf is returned only when the tree
/// is a single edge. Ties go to the earliest vertex in vertex order.
SpecialVertex find_special_vertex(const Graph& g);

/// All vertex subsets inducing K_{1,r} with rmin <= r <= rmax, ordered by
/// size and then lexicographically by vertex position.
std::vector<VertexList> enumerate_induced_stars(const Graph& g, std::size_t rmin, std::size_t rmax);

/// Vertex subsets inducing a connected subgraph, ordered like enumerate_induced_stars.
std::vector<VertexList> enumerate_connected_subsets(const Graph& g);

/// Simple hypergraph: no edge contains another, every edge has at least two vertices.
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(std::vector<std::string> vertices, const std::vector<std::vector<std::string>>& edges);

  const VertexList& vertices() const noexcept { return vertices_; }
  std::size_t num_vertices() const noexcept { return vertices_.size(); }

  /// Edges as sorted index lists, sorted lexicographically.
  const std::vector<std::vector<std::size_t>>& edges() const noexcept { return edges_; }
  std::size_t index_of(std::string_view label) const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  VertexList vertices_;
  std::vector<std::vector<std::size_t>> edges_;
};

namespace detail {

/// Vertex subsets as bitmasks over vertex positions; small graphs only.
using Mask = std::uint64_t;

/// Largest vertex count for which power-set enumeration is allowed.
inline constexpr std::size_t kMaxEnumerationVertices = 24;

void check_enumerable(std::size_t num_vertices);
VertexList labels_of(const VertexList& vertices, Mask mask);
Mask mask_of(const Graph& g, const VertexList& subset);

/// Orders masks by popcount, then lexicographically on member positions.
bool subset_less(Mask a, Mask b);

}  // namespace detail

}  // namespace covertool
