#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "covertool/ass_analysis.hpp"
#include "covertool/cover_ideals.hpp"
#include "covertool/hypergraph_ext.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace covertool;

namespace {

struct Outcome {
  bool pass = true;
  std::size_t cases = 0;
  std::string detail;

  void expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

MonomialPrime maximal(std::size_t num_vars) {
  std::vector<std::size_t> all(num_vars);
  for (std::size_t i = 0; i < num_vars; ++i) all[i] = i;
  return MonomialPrime(all);
}

std::vector<MonomialPrime> oracle_ass(const Graph& g, std::size_t t, std::size_t s) {
  return associated_primes(ideal_power(partial_cover_ideal(g, t), s));
}

std::string cell(std::size_t n, std::size_t t, std::size_t s) {
  return "n=" + std::to_string(n) + " t=" + std::to_string(t) + " s=" + std::to_string(s);
}

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Outcome star_closed_form() {
  Outcome out;
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::size_t t = 1; t <= n; ++t) {
      for (std::size_t s = 1; s <= 4; ++s) {
        out.expect(oracle_ass(star_graph(n), t, s) == predict_ass_star(n, t, s).primes, cell(n, t, s));
      }
    }
  }
  return out;
}

Outcome max_ideal_criterion() {
  Outcome out;
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::size_t t = 1; t <= n; ++t) {
      for (std::size_t s = 1; s <= 4; ++s) {
        const auto ass = oracle_ass(star_graph(n), t, s);
        const bool member = std::binary_search(ass.begin(), ass.end(), maximal(n + 1));
        out.expect(member == max_ideal_in_ass_star(n, t, s), cell(n, t, s));
        if (t >= 2) out.expect(member == (s * (t - 1) >= n - 1), cell(n, t, s));
      }
    }
  }
  return out;
}

Outcome tree_closed_form() {
  Outcome out;
  for (const auto& [name, g] : testing::acceptance_trees()) {
    const auto delta = max_degree(g);
    for (std::size_t t = 1; t <= delta; ++t) {
      for (std::size_t s = 1; s <= astab_tree(g, t) + 1; ++s) {
        out.expect(oracle_ass(g, t, s) == predict_ass_tree(g, t, s).primes, name + " " + cell(0, t, s));
      }
    }
  }
  return out;
}

Outcome astab_and_persistence() {
  Outcome out;
  for (const auto& [name, g] : testing::acceptance_trees()) {
    const auto delta = max_degree(g);
    for (std::size_t t = 1; t <= delta; ++t) {
      const auto expected = t == 1 ? 1 : std::max<std::size_t>(1, ceil_div(delta - 1, t - 1));
      out.expect(astab_tree(g, t) == expected, name + " formula t=" + std::to_string(t));
      const auto report = empirical_astab(partial_cover_ideal(g, t), expected + 1);
      out.expect(report.empirical_astab == expected, name + " empirical t=" + std::to_string(t));
      out.expect(report.persistence_ok, name + " persistence t=" + std::to_string(t));
    }
  }
  return out;
}

Outcome generator_duality() {
  Outcome out;
  auto graphs = testing::full_tree_corpus();
  for (auto& g : testing::cyclic_corpus()) graphs.push_back(std::move(g));
  for (const auto& [name, g] : graphs) {
    for (std::size_t t = 1; t <= max_degree(g); ++t) {
      std::vector<Monomial> covers;
      for (const auto& w : enumerate_minimal_partial_covers(g, t)) {
        Monomial m(g.num_vertices());
        for (const auto& v : w) m[g.index_of(v)] = 1;
        covers.push_back(m);
      }
      out.expect(partial_cover_ideal(g, t) == MonomialIdeal(ambient_of(g), covers), name + " t=" + std::to_string(t));
    }
  }
  return out;
}

Outcome star_generator_count() {
  Outcome out;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::size_t t = 1; t <= n; ++t) {
      const auto closed = star_generators(n, t);
      out.expect(closed == partial_cover_ideal(star_graph(n), t), cell(n, t, 0));
      out.expect(closed.num_generators() == 1 + binomial(n, n - t + 1), cell(n, t, 0) + " count");
    }
  }
  return out;
}

Outcome witness_construction() {
  Outcome out;
  for (std::size_t n = 2; n <= 5; ++n) {
    for (std::size_t t = 2; t <= n; ++t) {
      const auto s0 = astab_star(n, t);
      for (std::size_t s = s0; s <= s0 + 2; ++s) {
        const auto cert = build_star_witness(n, t, s);
        out.expect(cert.not_in_power && cert.colon_is_prime, cell(n, t, s));
      }
    }
  }
  return out;
}

Outcome complete_intersection() {
  Outcome out;
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<MonomialPrime> expected;
    for (std::size_t i = 1; i <= n; ++i) expected.emplace_back(std::vector<std::size_t>{0, i});
    for (std::size_t s = 1; s <= 3; ++s) out.expect(oracle_ass(star_graph(n), 1, s) == expected, cell(n, 1, s));
  }
  return out;
}

Outcome hypergraph_gap() {
  Outcome out;
  for (std::size_t m = 1; m <= 3; ++m) {
    const auto r = verify_gap(m);
    const auto label = "m=" + std::to_string(m);
    out.expect(r.chromatic == 2, label + " chromatic");
    out.expect(r.astab == m + 1, label + " astab");
    out.expect(r.oracle_astab == m + 1, label + " oracle astab");
    out.expect(r.gap_holds && r.equality && r.ok(), label + " inequality");
  }
  return out;
}

Outcome property_suites() {
  Outcome out;
  std::mt19937 rng(1);
  const auto a = testing::variables(3);
  const auto grid = testing::monomial_grid(3, 4);
  for (int round = 0; round < 1000; ++round) {
    const auto i = testing::random_ideal(rng, a, 4, 3);
    const auto j = testing::random_ideal(rng, a, 4, 3);
    const auto t = testing::random_monomial(rng, 3, 2);
    const auto q = colon(i, t);
    const auto meet = ideal_intersection(i, j);
    bool ok = true;
    for (const auto& m : grid) {
      ok = ok && testing::member(q.generators(), m) == testing::member(i.generators(), m * t);
      ok = ok && testing::member(meet.generators(), m) ==
                     (testing::member(i.generators(), m) && testing::member(j.generators(), m));
      ok = ok && testing::member(i.generators(), m) == i.contains(m);
    }
    out.expect(ok, "colon/intersection/membership round " + std::to_string(round));
    if (!i.is_unit()) {
      auto back = MonomialIdeal::unit(a);
      for (const auto& c : irreducible_decomposition(i)) back = ideal_intersection(back, c.to_ideal(a));
      out.expect(back == i, "decomposition round " + std::to_string(round));
    }
  }
  for (const auto& [name, g] : testing::full_tree_corpus()) {
    for (std::size_t t = 1; t <= max_degree(g); ++t) {
      for (std::size_t s = 1; s <= 2; ++s) {
        out.expect(connectivity_check(ass_of_power(g, t, s), g), name + " connectivity");
      }
    }
  }
  for (const auto& [name, g] : testing::cyclic_corpus()) {
    for (std::size_t t = 1; t <= max_degree(g); ++t) {
      out.expect(connectivity_check(ass_of_power(g, t, 2), g), name + " connectivity");
    }
  }
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const auto& [name, g] : testing::nonisomorphic_trees(n)) {
      for (std::size_t t = 1; t <= max_degree(g); ++t) {
        for (std::size_t s = 1; s <= 3; ++s) {
          const auto direct = oracle_ass(g, t, s);
          for (detail::Mask mask = 1; mask < (detail::Mask{1} << n); ++mask) {
            out.expect(localization_check(g, t, s, detail::labels_of(g.vertices(), mask), direct),
                       name + " localization");
          }
        }
      }
    }
  }
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"star closed form", star_closed_form},
      {"maximal ideal criterion", max_ideal_criterion},
      {"tree closed form", tree_closed_form},
      {"astab and persistence", astab_and_persistence},
      {"generator duality", generator_duality},
      {"star generators", star_generator_count},
      {"witness construction", witness_construction},
      {"complete intersection stability", complete_intersection},
      {"hypergraph chromatic gap", hypergraph_gap},
      {"property suites", property_suites},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criteria[k].second();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    std::printf("%s %2zu. %-32s %6zu checks  %6.2fs%s%s\n", outcome.pass ? "PASS" : "FAIL", k + 1,
                criteria[k].first.c_str(), outcome.cases, elapsed.count(), outcome.pass ? "" : "  first failure: ",
                outcome.detail.c_str());
    failures += !outcome.pass;
  }
  return failures == 0 ? 0 : 1;
}
