#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "covertool/graph.hpp"
#include "covertool/ideal.hpp"

namespace covertool {

/// Colour index (1-based) per vertex, in vertex order.
using Coloring = std::vector<std::size_t>;

/// <x_W : W a minimal vertex cover of h>.
MonomialIdeal hypergraph_cover_ideal(const Hypergraph& h);

/// <x_E : E an edge of h>.
MonomialIdeal hypergraph_edge_ideal(const Hypergraph& h);

/// No edge of h is monochromatic under c.
bool is_proper_coloring(const Hypergraph& h, const Coloring& c);

/// Least number of colours admitting a proper colouring, by exhaustive search
/// with the first vertex's colour fixed.
std::size_t chromatic_number(const Hypergraph& h);

/// A proper colouring with exactly k colours available, if one exists.
std::optional<Coloring> find_coloring(const Hypergraph& h, std::size_t k);

/// Vertices z, x1, ..., x_{m+2}; edges {z, x_i, x_j} for all i < j.
Hypergraph build_gap_family(std::size_t m);

struct GapReport {
  std::size_t m = 0;
  std::size_t chromatic = 0;
  std::size_t astab = 0;  ///< from the star formula for J_2(K_{1,m+2})
  std::optional<std::size_t> oracle_astab;
  std::size_t oracle_s_max = 0;
  bool cover_ideal_matches_star = false;
  bool oracle_agrees = false;
  bool gap_holds = false;       ///< chi - 1 + m <= astab
  bool baseline_holds = false;  ///< chi - 1 <= astab
  bool equality = false;        ///< chi - 1 + m == astab

  bool ok() const { return cover_ideal_matches_star && oracle_agrees && gap_holds && baseline_holds; }
};

inline constexpr std::size_t kDefaultGapCap = 3;

/// Chromatic gap check for the family member with parameter m.
///
/// The oracle confirms the certified value up to s_max (default astab + 1).
/// Throws Error when m exceeds kDefaultGapCap unless force is set.
GapReport verify_gap(std::size_t m, std::optional<std::size_t> s_max = std::nullopt, bool force = false);

}  // namespace covertool
