#include "covertool/hypergraph_ext.hpp"

#include <algorithm>

#include "covertool/ass_analysis.hpp"
#include "covertool/cover_ideals.hpp"
#include "covertool/error.hpp"

namespace covertool {

MonomialIdeal hypergraph_cover_ideal(const Hypergraph& h) {
  const auto n = h.num_vertices();
  std::vector<Monomial> gens;
  for (const auto& w : minimal_transversals(n, h.edges())) gens.push_back(Monomial::square_free(n, w));
  return MonomialIdeal(Ambient(h.vertices()), std::move(gens));
}

MonomialIdeal hypergraph_edge_ideal(const Hypergraph& h) {
  const auto n = h.num_vertices();
  std::vector<Monomial> gens;
  for (const auto& e : h.edges()) gens.push_back(Monomial::square_free(n, e));
  return MonomialIdeal(Ambient(h.vertices()), std::move(gens));
}

bool is_proper_coloring(const Hypergraph& h, const Coloring& c) {
  if (c.size() != h.num_vertices()) return false;
  return std::all_of(h.edges().begin(), h.edges().end(), [&](const std::vector<std::size_t>& e) {
    return std::any_of(e.begin(), e.end(), [&](std::size_t v) { return c[v] != c[e.front()]; });
  });
}

namespace {

/// Edges grouped by their largest vertex, so an edge is checked once fully coloured.
std::vector<std::vector<const std::vector<std::size_t>*>> edges_by_last_vertex(const Hypergraph& h) {
  std::vector<std::vector<const std::vector<std::size_t>*>> out(h.num_vertices());
  for (const auto& e : h.edges()) out[e.back()].push_back(&e);
  return out;
}

bool extend(const std::vector<std::vector<const std::vector<std::size_t>*>>& closing, std::size_t k,
            std::size_t v, Coloring& c) {
  if (v == c.size()) return true;
  // The first vertex always takes colour 1.
  const std::size_t last = v == 0 ? 1 : k;
  for (std::size_t colour = 1; colour <= last; ++colour) {
    c[v] = colour;
    const bool ok = std::all_of(closing[v].begin(), closing[v].end(), [&](const std::vector<std::size_t>* e) {
      return std::any_of(e->begin(), e->end(), [&](std::size_t u) { return c[u] != colour; });
    });
    if (ok && extend(closing, k, v + 1, c)) return true;
  }
  c[v] = 0;
  return false;
}

}  // namespace

std::optional<Coloring> find_coloring(const Hypergraph& h, std::size_t k) {
  if (k == 0) return std::nullopt;
  Coloring c(h.num_vertices(), 0);
  if (extend(edges_by_last_vertex(h), k, 0, c)) return c;
  return std::nullopt;
}

std::size_t chromatic_number(const Hypergraph& h) {
  if (h.num_vertices() == 0) throw Error("chromatic number of the empty hypergraph is undefined");
  for (const auto& e : h.edges()) {
    if (e.size() < 2) throw Error("every hyperedge needs at least 2 vertices");
  }
  for (std::size_t k = 1;; ++k) {
    if (find_coloring(h, k)) return k;
  }
}

Hypergraph build_gap_family(std::size_t m) {
  if (m < 1) throw Error("gap family needs m >= 1");
  std::vector<std::string> vertices{"z"};
  for (std::size_t i = 1; i <= m + 2; ++i) vertices.push_back("x" + std::to_string(i));
  std::vector<std::vector<std::string>> edges;
  for (std::size_t i = 1; i <= m + 2; ++i) {
    for (std::size_t j = i + 1; j <= m + 2; ++j) edges.push_back({"z", vertices[i], vertices[j]});
  }
  return Hypergraph(std::move(vertices), edges);
}

GapReport verify_gap(std::size_t m, std::optional<std::size_t> s_max, bool force) {
  if (m < 1) throw Error("gap family needs m >= 1");
  if (m > kDefaultGapCap && !force) {
    throw Error("cap exceeded (override with --force): m <= " + std::to_string(kDefaultGapCap));
  }
  GapReport report;
  report.m = m;
  const auto family = build_gap_family(m);
  report.chromatic = chromatic_number(family);
  const auto n = m + 2;
  report.astab = astab_star(n, 2);

  const auto cover = hypergraph_cover_ideal(family);
  report.cover_ideal_matches_star = cover == star_generators(n, 2);

  report.oracle_s_max = s_max.value_or(report.astab + 1);
  const auto observed = empirical_astab(cover, report.oracle_s_max);
  report.oracle_astab = observed.empirical_astab;
  if (report.oracle_s_max > report.astab) {
    report.oracle_agrees = observed.empirical_astab == report.astab;
  } else {
    // Too few powers to see stabilization; the oracle must not have stabilized early.
    report.oracle_agrees = !observed.empirical_astab.has_value();
  }

  report.gap_holds = report.chromatic - 1 + m <= report.astab;
  report.baseline_holds = report.chromatic - 1 <= report.astab;
  report.equality = report.chromatic - 1 + m == report.astab;
  return report;
}

}  // namespace covertool
