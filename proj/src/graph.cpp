#include "covertool/graph.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <unordered_map>

#include "covertool/error.hpp"

namespace covertool {

namespace {

std::unordered_map<std::string_view, std::size_t> index_labels(const VertexList& vertices) {
  std::unordered_map<std::string_view, std::size_t> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].empty()) throw Error("empty vertex label");
    if (!index.emplace(vertices[i], i).second) throw Error("duplicate vertex label '" + vertices[i] + "'");
  }
  return index;
}

std::size_t lookup(const VertexList& vertices, std::string_view label) {
  auto it = std::find(vertices.begin(), vertices.end(), label);
  if (it == vertices.end()) throw Error("unknown vertex '" + std::string(label) + "'");
  return static_cast<std::size_t>(it - vertices.begin());
}

}  // namespace

Graph::Graph(std::vector<std::string> vertices,
             const std::vector<std::pair<std::string, std::string>>& edges)
    : vertices_(std::move(vertices)), adjacency_(vertices_.size()) {
  const auto index = index_labels(vertices_);
  std::set<Edge> seen;
  for (const auto& [a, b] : edges) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) throw Error("edge endpoint '" + a + "' is not a vertex");
    if (ib == index.end()) throw Error("edge endpoint '" + b + "' is not a vertex");
    if (ia->second == ib->second) throw Error("loop at vertex '" + a + "'");
    Edge e = std::minmax(ia->second, ib->second);
    if (!seen.insert(e).second) throw Error("duplicate edge {" + a + ", " + b + "}");
  }
  edges_.assign(seen.begin(), seen.end());
  for (const auto& [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

bool Graph::has_vertex(std::string_view label) const noexcept {
  return std::find(vertices_.begin(), vertices_.end(), label) != vertices_.end();
}

std::size_t Graph::index_of(std::string_view label) const { return lookup(vertices_, label); }

bool Graph::is_edge(std::size_t u, std::size_t v) const {
  const auto& adj = adjacency_.at(u);
  return std::binary_search(adj.begin(), adj.end(), v);
}

namespace detail {

void check_enumerable(std::size_t num_vertices) {
  if (num_vertices > kMaxEnumerationVertices) {
    throw Error("subset enumeration limited to " + std::to_string(kMaxEnumerationVertices) + " vertices");
  }
}

VertexList labels_of(const VertexList& vertices, Mask mask) {
  VertexList out;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (mask >> i & 1U) out.push_back(vertices[i]);
  }
  return out;
}

Mask mask_of(const Graph& g, const VertexList& subset) {
  if (g.num_vertices() > 64) throw Error("vertex masks support at most 64 vertices");
  Mask mask = 0;
  for (const auto& v : subset) mask |= Mask{1} << g.index_of(v);
  return mask;
}

bool subset_less(Mask a, Mask b) {
  const int ca = std::popcount(a);
  const int cb = std::popcount(b);
  if (ca != cb) return ca < cb;
  // The first differing member decides: the set holding the smaller position wins.
  const Mask diff = a ^ b;
  if (diff == 0) return false;
  const Mask low = diff & (~diff + 1);
  return (a & low) != 0;
}

}  // namespace detail

VertexList neighbors(const Graph& g, std::string_view v) {
  VertexList out;
  for (auto u : g.adjacent(g.index_of(v))) out.push_back(g.label(u));
  return out;
}

Graph induced_subgraph(const Graph& g, const VertexList& subset) {
  std::vector<bool> keep(g.num_vertices(), false);
  for (const auto& v : subset) keep[g.index_of(v)] = true;
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < g.num_vertices(); ++i) {
    if (keep[i]) vertices.push_back(g.label(i));
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& [u, v] : g.edges()) {
    if (keep[u] && keep[v]) edges.emplace_back(g.label(u), g.label(v));
  }
  return Graph(std::move(vertices), edges);
}

bool is_connected(const Graph& g) {
  if (g.empty()) throw Error("connectivity of the empty graph is undefined");
  std::vector<bool> seen(g.num_vertices(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (auto u : g.adjacent(v)) {
      if (!seen[u]) {
        seen[u] = true;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == g.num_vertices();
}

bool is_tree(const Graph& g) {
  if (g.empty()) throw Error("tree test on the empty graph is undefined");
  return g.num_edges() + 1 == g.num_vertices() && is_connected(g);
}

std::size_t max_degree(const Graph& g) {
  if (g.empty()) throw Error("maximum degree of the empty graph is undefined");
  std::size_t best = 0;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) best = std::max(best, g.degree(v));
  return best;
}

std::optional<StarShape> star_shape(const Graph& g) {
  if (g.empty()) throw Error("star test on the empty graph is undefined");
  const auto n = g.num_vertices();
  if (n < 2 || g.num_edges() != n - 1) return std::nullopt;
  for (std::size_t c = 0; c < n; ++c) {
    if (g.degree(c) != n - 1) continue;
    StarShape shape{g.label(c), {}};
    for (auto u : g.adjacent(c)) shape.leaves.push_back(g.label(u));
    return shape;
  }
  return std::nullopt;
}

SpecialVertex find_special_vertex(const Graph& g) {
  if (g.num_vertices() < 2 || !is_tree(g)) throw Error("special vertex requires a tree with at least 2 vertices");
  auto frame = [&](std::size_t x) {
    SpecialVertex sv{g.label(x), {}, std::nullopt};
    for (auto u : g.adjacent(x)) {
      if (g.degree(u) == 1) {
        sv.leaf_neighbors.push_back(g.label(u));
      } else {
        sv.other_neighbor = g.label(u);
      }
    }
    return sv;
  };
  if (g.num_vertices() == 2) return frame(0);
  for (std::size_t x = 0; x < g.num_vertices(); ++x) {
    if (g.degree(x) < 2) continue;
    std::size_t non_leaves = 0;
    for (auto u : g.adjacent(x)) non_leaves += g.degree(u) != 1;
    if (non_leaves <= 1) return frame(x);
  }
  throw IntegrityError("tree without a special vertex");
}

namespace {

/// Number of leaves if the subgraph induced on mask is a star, otherwise 0.
std::size_t induced_star_size(const Graph& g, detail::Mask mask) {
  const auto size = static_cast<std::size_t>(std::popcount(mask));
  if (size < 2) return 0;
  std::size_t edges = 0;
  std::optional<std::size_t> center;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    if (!(mask >> v & 1U)) continue;
    std::size_t deg = 0;
    for (auto u : g.adjacent(v)) deg += mask >> u & 1U;
    edges += deg;
    if (deg == size - 1 && !center) center = v;
  }
  edges /= 2;
  return center && edges == size - 1 ? size - 1 : 0;
}

std::vector<detail::Mask> sorted_masks(std::vector<detail::Mask> masks) {
  std::sort(masks.begin(), masks.end(), detail::subset_less);
  return masks;
}

}  // namespace

std::vector<VertexList> enumerate_induced_stars(const Graph& g, std::size_t rmin, std::size_t rmax) {
  if (rmin < 1 || rmin > rmax) throw Error("star size range requires 1 <= rmin <= rmax");
  detail::check_enumerable(g.num_vertices());
  std::vector<detail::Mask> found;
  const detail::Mask end = detail::Mask{1} << g.num_vertices();
  for (detail::Mask mask = 1; mask < end; ++mask) {
    const auto r = induced_star_size(g, mask);
    if (r >= rmin && r <= rmax) found.push_back(mask);
  }
  std::vector<VertexList> out;
  for (auto mask : sorted_masks(std::move(found))) out.push_back(detail::labels_of(g.vertices(), mask));
  return out;
}

std::vector<VertexList> enumerate_connected_subsets(const Graph& g) {
  detail::check_enumerable(g.num_vertices());
  std::vector<detail::Mask> found;
  const detail::Mask end = detail::Mask{1} << g.num_vertices();
  for (detail::Mask mask = 1; mask < end; ++mask) {
    const auto start = static_cast<std::size_t>(std::countr_zero(mask));
    detail::Mask reached = detail::Mask{1} << start;
    detail::Mask frontier = reached;
    while (frontier != 0) {
      const auto v = static_cast<std::size_t>(std::countr_zero(frontier));
      frontier &= frontier - 1;
      for (auto u : g.adjacent(v)) {
        const detail::Mask bit = detail::Mask{1} << u;
        if ((mask & bit) && !(reached & bit)) {
          reached |= bit;
          frontier |= bit;
        }
      }
    }
    if (reached == mask) found.push_back(mask);
  }
  std::vector<VertexList> out;
  for (auto mask : sorted_masks(std::move(found))) out.push_back(detail::labels_of(g.vertices(), mask));
  return out;
}

Hypergraph::Hypergraph(std::vector<std::string> vertices, const std::vector<std::vector<std::string>>& edges)
    : vertices_(std::move(vertices)) {
  const auto index = index_labels(vertices_);
  for (const auto& labels : edges) {
    std::vector<std::size_t> edge;
    for (const auto& v : labels) {
      auto it = index.find(v);
      if (it == index.end()) throw Error("edge endpoint '" + v + "' is not a vertex");
      edge.push_back(it->second);
    }
    std::sort(edge.begin(), edge.end());
    if (std::adjacent_find(edge.begin(), edge.end()) != edge.end()) throw Error("hyperedge repeats a vertex");
    if (edge.size() < 2) throw Error("hyperedge with fewer than 2 vertices");
    edges_.push_back(std::move(edge));
  }
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    for (std::size_t j = 0; j < edges_.size(); ++j) {
      if (i != j && std::includes(edges_[j].begin(), edges_[j].end(), edges_[i].begin(), edges_[i].end())) {
        throw Error("hypergraph is not simple: an edge contains another");
      }
    }
  }
}

std::size_t Hypergraph::index_of(std::string_view label) const { return lookup(vertices_, label); }

}  // namespace covertool
