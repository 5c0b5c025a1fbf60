#include <algorithm>

#include "covertool/cover_ideals.hpp"
#include "covertool/error.hpp"
#include "doctest.h"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace covertool;
using covertool::testing::member;

namespace {

std::vector<testing::NamedGraph> small_corpus() {
  auto graphs = testing::full_tree_corpus();
  for (auto& g : testing::cyclic_corpus()) graphs.push_back(std::move(g));
  return graphs;
}

Monomial vertex_product(const Graph& g, const VertexList& w) {
  Monomial m(g.num_vertices());
  for (const auto& v : w) m[g.index_of(v)] = 1;
  return m;
}

/// Membership in J_t(g) straight from the definition: m lies in every <x, y_1..y_t>.
bool in_cover_ideal(const Graph& g, std::size_t t, const Monomial& m) {
  for (std::size_t x = 0; x < g.num_vertices(); ++x) {
    if (m[x] != 0) continue;
    std::size_t missing = 0;
    for (auto y : g.adjacent(x)) missing += m[y] == 0;
    if (missing >= t) return false;
  }
  return true;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_SUITE("cover_ideals") {
  TEST_CASE("is_partial_cover") {
    const auto p4 = path_graph(4);
    CHECK(is_partial_cover(p4, 2, {"x2"}));
    CHECK(is_partial_cover(star_graph(3), 1, {"x1", "x2", "x3"}));
    CHECK_FALSE(is_partial_cover(star_graph(3), 2, {}));
    CHECK_FALSE(is_partial_cover(p4, 1, {"x2"}));
    CHECK(is_partial_cover(Graph({"v"}, {}), 1, {}));
    CHECK_THROWS_AS(is_partial_cover(p4, 0, {}), Error);
  }

  TEST_CASE("enumerate_minimal_partial_covers") {
    CHECK(enumerate_minimal_partial_covers(path_graph(4), 2) ==
          std::vector<VertexList>{{"x2"}, {"x3"}, {"x1", "x4"}});
    CHECK(enumerate_minimal_partial_covers(star_graph(5), 1) ==
          std::vector<VertexList>{{"z"}, {"x1", "x2", "x3", "x4", "x5"}});
    CHECK(enumerate_minimal_partial_covers(star_graph(4), 2) ==
          std::vector<VertexList>{{"z"}, {"x1", "x2", "x3"}, {"x1", "x2", "x4"}, {"x1", "x3", "x4"}, {"x2", "x3", "x4"}});
    CHECK(enumerate_minimal_partial_covers(Graph({"v"}, {}), 1) == std::vector<VertexList>{{}});
  }

  TEST_CASE("partial_cover_ideal") {
    const auto p4 = partial_cover_ideal(path_graph(4), 2);
    CHECK(p4.generator_list() == "x2, x3, x1*x4");
    // Oracle: the two primes intersected by hand.
    const auto a = ambient_of(path_graph(4));
    const auto hand = ideal_intersection(
        MonomialIdeal(a, {parse_monomial(a, "x1"), parse_monomial(a, "x2"), parse_monomial(a, "x3")}),
        MonomialIdeal(a, {parse_monomial(a, "x2"), parse_monomial(a, "x3"), parse_monomial(a, "x4")}));
    CHECK(p4 == hand);
    for (std::size_t n = 1; n <= 5; ++n) {
      const auto star = partial_cover_ideal(star_graph(n), 1);
      REQUIRE(star.num_generators() == 2);
      CHECK(star.generators()[0] == Monomial::variable(n + 1, 0));
      CHECK(star.generators()[1] == Monomial::square_free(n + 1, [&] {
              std::vector<std::size_t> leaves;
              for (std::size_t i = 1; i <= n; ++i) leaves.push_back(i);
              return leaves;
            }()));
    }
    CHECK(partial_cover_ideal(Graph({"v"}, {}), 1).is_unit());
    CHECK(partial_cover_ideal(Graph({"v"}, {}), 3).is_unit());
    CHECK(partial_cover_ideal(path_graph(3), 3).is_unit());
  }

  TEST_CASE("star_generators") {
    CHECK(star_generators(3, 2).generator_list() == "z, x1*x2, x1*x3, x2*x3");
    CHECK(star_generators(4, 1).generator_list() == "z, x1*x2*x3*x4");
    CHECK(star_generators(2, 2).generator_list() == "z, x1, x2");
    CHECK_THROWS_AS(star_generators(2, 3), Error);
    CHECK_THROWS_AS(star_generators(2, 0), Error);
  }

  TEST_CASE("generalized_edge_ideal") {
    const auto p4 = path_graph(4);
    CHECK(generalized_edge_ideal(p4, 2).generator_list() == "x1*x2*x3, x2*x3*x4");
    CHECK(generalized_edge_ideal(p4, 1).generator_list() == "x1*x2, x2*x3, x3*x4");
    CHECK(alexander_dual(generalized_edge_ideal(p4, 2)) == partial_cover_ideal(p4, 2));
    CHECK_THROWS_WITH_AS(generalized_edge_ideal(path_graph(3), 3),
                         "unit ideal - no constraints (t exceeds all degrees)", Error);
  }

  TEST_CASE("classify_tree_generators") {
    SUBCASE("P_4, t = 2") {
      const auto report = classify_tree_generators(path_graph(4), 2);
      CHECK(report.frame.vertex == "x2");
      CHECK(report.ys == VertexList{"x1", "x3"});
      REQUIRE(report.generators.size() == 3);
      CHECK(report.generators[0].generator.to_string(report.ideal.ambient()) == "x2");
      CHECK(report.generators[0].form == TreeGeneratorForm::kCenter);
      CHECK(report.generators[0].frame_divisors == VertexList{"x2"});
      CHECK(report.generators[1].form == TreeGeneratorForm::kNeighbors);  // x3 = y_d alone
      CHECK(report.generators[2].form == TreeGeneratorForm::kNeighbors);  // x1*x4
      CHECK(report.generators[2].frame_divisors == VertexList{"x1"});
    }
    SUBCASE("K_{1,3}, t = 2") {
      const auto report = classify_tree_generators(star_graph(3), 2);
      CHECK(report.frame.vertex == "z");
      REQUIRE(report.generators.size() == 4);
      CHECK(report.generators[0].form == TreeGeneratorForm::kCenter);
      for (std::size_t i = 1; i < 4; ++i) CHECK(report.generators[i].form == TreeGeneratorForm::kNeighbors);
    }
    SUBCASE("single edge, t = 1") {
      const auto report = classify_tree_generators(Graph({"u", "v"}, {{"u", "v"}}), 1);
      REQUIRE(report.generators.size() == 2);
      CHECK(report.generators[0].frame_divisors == VertexList{"u"});
      CHECK(report.generators[0].form == TreeGeneratorForm::kCenter);
      CHECK(report.generators[1].form == TreeGeneratorForm::kNeighbors);
    }
    CHECK(to_string(TreeGeneratorForm::kCenterAndLast) == "iii");
    CHECK_THROWS_AS(classify_tree_generators(testing::cycle_graph(4), 1), Error);
    CHECK_THROWS_AS(classify_tree_generators(path_graph(4), 3), Error);
  }
}

TEST_SUITE("cover_ideals properties") {
  TEST_CASE("the intersection and partial-cover constructions agree on the corpus") {
    for (const auto& [name, g] : small_corpus()) {
      for (std::size_t t = 1; t <= max_degree(g); ++t) {
        CAPTURE(name);
        CAPTURE(t);
        const auto ideal = partial_cover_ideal(g, t);
        std::vector<Monomial> from_covers;
        for (const auto& w : enumerate_minimal_partial_covers(g, t)) {
          REQUIRE(is_partial_cover(g, t, w));
          from_covers.push_back(vertex_product(g, w));
        }
        CHECK(ideal == MonomialIdeal(ambient_of(g), from_covers));
        CHECK(ideal.is_square_free());
        CHECK(testing::is_minimal_canonical(ideal));
      }
    }
  }

  TEST_CASE("square-free membership matches the defining primes") {
    for (const auto& [name, g] : small_corpus()) {
      if (g.num_vertices() > 7) continue;
      for (std::size_t t = 1; t <= max_degree(g); ++t) {
        const auto ideal = partial_cover_ideal(g, t);
        for (detail::Mask w = 0; w < (detail::Mask{1} << g.num_vertices()); ++w) {
          const auto m = vertex_product(g, detail::labels_of(g.vertices(), w));
          REQUIRE(ideal.contains(m) == in_cover_ideal(g, t, m));
        }
      }
    }
  }

  TEST_CASE("star_generators matches J_t(K_{1,n}) for n <= 6") {
    for (std::size_t n = 1; n <= 6; ++n) {
      for (std::size_t t = 1; t <= n; ++t) {
        CAPTURE(n);
        CAPTURE(t);
        const auto closed = star_generators(n, t);
        CHECK(closed == partial_cover_ideal(star_graph(n), t));
        CHECK(closed.num_generators() == 1 + binomial(n, n - t + 1));
      }
    }
  }

  TEST_CASE("J_{t+1} contains J_t") {
    for (const auto& [name, g] : small_corpus()) {
      for (std::size_t t = 1; t < max_degree(g); ++t) {
        const auto lower = partial_cover_ideal(g, t);
        const auto upper = partial_cover_ideal(g, t + 1);
        for (const auto& m : lower.generators()) REQUIRE(upper.contains(m));
      }
    }
  }

  TEST_CASE("generalized edge ideal equals the direct sum formula") {
    for (const auto& [name, g] : small_corpus()) {
      CAPTURE(name);
      CHECK(generalized_edge_ideal(g, 1) == testing::edge_ideal_direct(g));
      for (std::size_t t = 1; t <= max_degree(g); ++t) {
        CHECK(generalized_edge_ideal(g, t) == testing::generalized_edge_ideal_direct(g, t));
      }
    }
  }

  TEST_CASE("every tree generator fits exactly one form") {
    for (const auto& [name, g] : testing::full_tree_corpus()) {
      const auto frame = find_special_vertex(g);
      auto ys = frame.leaf_neighbors;
      if (frame.other_neighbor) ys.push_back(*frame.other_neighbor);
      for (std::size_t t = 1; t <= ys.size(); ++t) {
        CAPTURE(name);
        CAPTURE(t);
        const auto report = classify_tree_generators(g, t);
        CHECK(report.ideal == partial_cover_ideal(g, t));
        const auto x = g.index_of(frame.vertex);
        const auto d = ys.size();
        for (const auto& entry : report.generators) {
          const auto& m = entry.generator;
          std::size_t hits = 0;
          for (const auto& y : ys) hits += m[g.index_of(y)] != 0;
          const bool last = m[g.index_of(ys.back())] != 0;
          const bool form_i = m[x] == 0 && hits == d - t + 1;
          const bool form_ii = m[x] != 0 && hits == 0;
          const bool form_iii = m[x] != 0 && hits == 1 && last;
          CHECK(form_i + form_ii + form_iii == 1);
          const auto expected = form_i ? TreeGeneratorForm::kNeighbors
                                : form_ii ? TreeGeneratorForm::kCenter
                                          : TreeGeneratorForm::kCenterAndLast;
          CHECK(entry.form == expected);
        }
      }
    }
  }
}
