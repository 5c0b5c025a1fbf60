#include "covertool/cover_ideals.hpp"

#include <algorithm>

#include "covertool/error.hpp"

namespace covertool {

namespace {

void require_positive_t(std::size_t t) {
  if (t < 1) throw Error("t must be at least 1");
}

/// Calls visit on each k-subset of items in lexicographic order.
template <typename Visit>
void for_each_subset(const std::vector<std::size_t>& items, std::size_t k, Visit&& visit) {
  if (k > items.size()) return;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  std::vector<std::size_t> chosen(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) chosen[i] = items[pick[i]];
    visit(chosen);
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == items.size() - k + (i - 1)) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

bool covers(const Graph& g, std::size_t t, detail::Mask w) {
  for (std::size_t x = 0; x < g.num_vertices(); ++x) {
    if (w >> x & 1U) continue;
    std::size_t uncovered = 0;
    for (auto y : g.adjacent(x)) uncovered += !(w >> y & 1U);
    if (uncovered > t - 1) return false;
  }
  return true;
}

}  // namespace

Ambient ambient_of(const Graph& g) { return Ambient(g.vertices()); }

Graph star_graph(std::size_t n) {
  std::vector<std::string> vertices{"z"};
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 1; i <= n; ++i) {
    vertices.push_back("x" + std::to_string(i));
    edges.emplace_back("z", vertices.back());
  }
  return Graph(std::move(vertices), edges);
}

Graph path_graph(std::size_t n) {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 1; i <= n; ++i) {
    vertices.push_back("x" + std::to_string(i));
    if (i > 1) edges.emplace_back(vertices[i - 2], vertices[i - 1]);
  }
  return Graph(std::move(vertices), edges);
}

bool is_partial_cover(const Graph& g, std::size_t t, const VertexList& w) {
  require_positive_t(t);
  std::vector<bool> in_w(g.num_vertices(), false);
  for (const auto& v : w) in_w[g.index_of(v)] = true;
  for (std::size_t x = 0; x < g.num_vertices(); ++x) {
    if (in_w[x]) continue;
    const auto& adj = g.adjacent(x);
    const auto uncovered = static_cast<std::size_t>(std::count_if(adj.begin(), adj.end(), [&](auto y) { return !in_w[y]; }));
    if (uncovered > t - 1) return false;
  }
  return true;
}

std::vector<VertexList> enumerate_minimal_partial_covers(const Graph& g, std::size_t t) {
  require_positive_t(t);
  detail::check_enumerable(g.num_vertices());
  std::vector<detail::Mask> minimal;
  const detail::Mask end = detail::Mask{1} << g.num_vertices();
  for (detail::Mask w = 0; w < end; ++w) {
    if (!covers(g, t, w)) continue;
    // Partial covers are closed upward, so single-vertex removals decide minimality.
    bool is_minimal = true;
    for (detail::Mask rest = w; rest != 0 && is_minimal; rest &= rest - 1) {
      is_minimal = !covers(g, t, w & ~(rest & (~rest + 1)));
    }
    if (is_minimal) minimal.push_back(w);
  }
  std::sort(minimal.begin(), minimal.end(), detail::subset_less);
  std::vector<VertexList> out;
  for (auto w : minimal) out.push_back(detail::labels_of(g.vertices(), w));
  return out;
}

MonomialIdeal partial_cover_ideal(const Graph& g, std::size_t t) {
  require_positive_t(t);
  const auto ambient = ambient_of(g);
  const auto n = g.num_vertices();
  auto result = MonomialIdeal::unit(ambient);
  for (std::size_t x = 0; x < n; ++x) {
    for_each_subset(g.adjacent(x), t, [&](const std::vector<std::size_t>& chosen) {
      std::vector<Monomial> gens{Monomial::variable(n, x)};
      for (auto y : chosen) gens.push_back(Monomial::variable(n, y));
      result = ideal_intersection(result, MonomialIdeal(ambient, std::move(gens)));
    });
  }
  return result;
}

MonomialIdeal star_generators(std::size_t n, std::size_t t) {
  require_positive_t(t);
  if (t > n) throw Error("star generators need t <= n");
  const auto ambient = ambient_of(star_graph(n));
  std::vector<Monomial> gens{Monomial::variable(n + 1, 0)};
  std::vector<std::size_t> leaves(n);
  for (std::size_t i = 0; i < n; ++i) leaves[i] = i + 1;
  for_each_subset(leaves, n - t + 1, [&](const std::vector<std::size_t>& chosen) {
    gens.push_back(Monomial::square_free(n + 1, chosen));
  });
  return MonomialIdeal(ambient, std::move(gens));
}

MonomialIdeal generalized_edge_ideal(const Graph& g, std::size_t t) {
  const auto cover = partial_cover_ideal(g, t);
  if (cover.is_unit()) throw Error("unit ideal - no constraints (t exceeds all degrees)");
  return alexander_dual(cover);
}

std::string to_string(TreeGeneratorForm form) {
  switch (form) {
    case TreeGeneratorForm::kNeighbors: return "i";
    case TreeGeneratorForm::kCenter: return "ii";
    case TreeGeneratorForm::kCenterAndLast: return "iii";
  }
  return "?";
}

namespace {

VertexList frame_ys(const SpecialVertex& frame) {
  VertexList ys = frame.leaf_neighbors;
  if (frame.other_neighbor) ys.push_back(*frame.other_neighbor);
  return ys;
}

}  // namespace

std::optional<TreeGeneratorForm> classify_generator(const Graph& g, const SpecialVertex& frame, std::size_t t,
                                                    const Monomial& generator) {
  const auto ys = frame_ys(frame);
  const auto d = ys.size();
  const bool has_x = generator[g.index_of(frame.vertex)] != 0;
  std::size_t y_count = 0;
  for (const auto& y : ys) y_count += generator[g.index_of(y)] != 0;
  const bool has_last = generator[g.index_of(ys.back())] != 0;
  if (!has_x && d + 1 >= t && y_count == d + 1 - t) return TreeGeneratorForm::kNeighbors;
  if (has_x && y_count == 0) return TreeGeneratorForm::kCenter;
  if (has_x && y_count == 1 && has_last) return TreeGeneratorForm::kCenterAndLast;
  return std::nullopt;
}

TreeGeneratorClassification classify_tree_generators(const Graph& g, std::size_t t) {
  require_positive_t(t);
  TreeGeneratorClassification report;
  report.frame = find_special_vertex(g);
  report.ys = frame_ys(report.frame);
  report.t = t;
  if (t > report.ys.size()) {
    throw Error("generator forms are framed for t <= deg(" + report.frame.vertex + ") = " +
                std::to_string(report.ys.size()));
  }
  report.ideal = partial_cover_ideal(g, t);
  VertexList frame_vars{report.frame.vertex};
  frame_vars.insert(frame_vars.end(), report.ys.begin(), report.ys.end());
  for (const auto& m : report.ideal.generators()) {
    ClassifiedGenerator entry{m, {}, TreeGeneratorForm::kNeighbors};
    for (const auto& v : frame_vars) {
      if (m[g.index_of(v)] != 0) entry.frame_divisors.push_back(v);
    }
    auto form = classify_generator(g, report.frame, t, m);
    if (!form) {
      throw IntegrityError("generator " + m.to_string(report.ideal.ambient()) + " fits no tree generator form");
    }
    entry.form = *form;
    report.generators.push_back(std::move(entry));
  }
  return report;
}

}  // namespace covertool
