#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "covertool/graph.hpp"
#include "covertool/ideal.hpp"

namespace covertool {

/// Variable order of every ideal built from g: the vertex order.
Ambient ambient_of(const Graph& g);

/// K_{1,n} on vertices z, x1, ..., xn (center first).
Graph star_graph(std::size_t n);

/// x1 - x2 - ... - xn.
Graph path_graph(std::size_t n);

/// Every vertex is in w or has at most t-1 neighbours outside w.
bool is_partial_cover(const Graph& g, std::size_t t, const VertexList& w);

/// Inclusion-minimal partial t-covers by exhaustive search, ordered by size
/// and then by vertex position.
std::vector<VertexList> enumerate_minimal_partial_covers(const Graph& g, std::size_t t);

/// J_t(g): intersection of <x, y_1, ..., y_t> over vertices x and t-subsets
/// {y_1, ..., y_t} of N(x). Vertices of degree below t contribute nothing,
/// so the result is the unit ideal when t exceeds every degree.
MonomialIdeal partial_cover_ideal(const Graph& g, std::size_t t);

/// <z> + <products of n-t+1 distinct leaf variables> over {z, x1, ..., xn}.
MonomialIdeal star_generators(std::size_t n, std::size_t t);

/// Alexander dual of J_t(g); t = 1 gives the edge ideal, t = 2 the 2-path ideal.
MonomialIdeal generalized_edge_ideal(const Graph& g, std::size_t t);

/// Forms a minimal generator of J_t(tree) can take relative to the special vertex x
/// with neighbours y_1, ..., y_d.
enum class TreeGeneratorForm {
  kNeighbors,       ///< (i)   exactly d-t+1 of the y's, not x
  kCenter,          ///< (ii)  x and none of the y's
  kCenterAndLast,   ///< (iii) x and y_d only
};

struct ClassifiedGenerator {
  Monomial generator;
  VertexList frame_divisors;  ///< frame variables (x, y_1..y_d) dividing the generator
  TreeGeneratorForm form;
};

struct TreeGeneratorClassification {
  SpecialVertex frame;
  VertexList ys;  ///< y_1..y_d; the non-leaf neighbour, when present, is y_d
  std::size_t t = 0;
  MonomialIdeal ideal;
  std::vector<ClassifiedGenerator> generators;
};

/// Frame divisors and form of every minimal generator of J_t(g).
///
/// Requires a tree with at least two vertices and t <= deg(x) for the special
/// vertex x; throws IntegrityError if a generator fits none of the three forms.
TreeGeneratorClassification classify_tree_generators(const Graph& g, std::size_t t);

/// Form of a single generator in the given frame, if any.
std::optional<TreeGeneratorForm> classify_generator(const Graph& g, const SpecialVertex& frame, std::size_t t,
                                                    const Monomial& generator);

std::string to_string(TreeGeneratorForm form);

}  // namespace covertool
