#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "covertool/cover_ideals.hpp"
#include "covertool/graph.hpp"
#include "covertool/ideal.hpp"

namespace covertool {

enum class AssMethod { kOracle, kClosedForm, kLocalized };
enum class AssMode { kDirect, kLocalized };

std::string to_string(AssMethod method);

/// Ass(J_t(graph)^s) together with how it was obtained.
struct AssReport {
  Graph graph;
  std::size_t t = 0;
  std::size_t s = 0;
  AssMethod method = AssMethod::kOracle;
  std::vector<MonomialPrime> primes;  ///< sorted, distinct
  std::map<std::string, bool> checks;
  std::vector<std::string> notes;

  Ambient ambient() const { return ambient_of(graph); }
  bool has_prime(const MonomialPrime& p) const;
};

enum class AstabStatus {
  kCertified,     ///< closed-form value for trees, consistent with the explored powers
  kEmpirical,     ///< stable from astab through s_max; nothing known beyond
  kUndetermined,  ///< no stabilization observed up to s_max
};

std::string to_string(AstabStatus status);

struct StabilityReport {
  Ambient ambient;
  std::size_t s_max = 0;
  std::vector<std::vector<MonomialPrime>> ass_by_power;  ///< index k holds Ass(I^{k+1})
  AstabStatus status = AstabStatus::kUndetermined;
  std::optional<std::size_t> astab;
  std::optional<std::size_t> empirical_astab;
  bool persistence_ok = true;
  std::optional<std::size_t> first_violation;  ///< least s with Ass(I^s) not inside Ass(I^{s+1})
  std::optional<bool> formula_agrees;          ///< trees only: closed form vs explored powers
};

/// Monomial T certifying that <z, x1, ..., xn> is associated to J_t(K_{1,n})^s.
struct WitnessCertificate {
  std::size_t n = 0;
  std::size_t t = 0;
  std::size_t s = 0;
  std::size_t s0 = 0;  ///< least power at which the maximal ideal appears
  std::size_t e = 0;   ///< copies of z, s - s0
  Ambient ambient;
  Monomial witness;
  MonomialPrime prime;
  bool not_in_power = false;
  bool colon_is_prime = false;
  bool empty_sequence = false;  ///< the cyclic-sequence product had no factors, so T = z^e
  std::optional<bool> annihilator_bound;

  bool valid() const { return not_in_power && colon_is_prime; }
};

/// Oracle or localized computation of Ass(J_t(g)^s).
///
/// The localized mode tests, for each connected vertex subset P, whether the
/// maximal ideal of the subring on P is associated to J_t(g_P)^s. With
/// tree_fast_path set and g a tree only star-shaped subsets are examined.
AssReport ass_of_power(const Graph& g, std::size_t t, std::size_t s, AssMode mode = AssMode::kDirect,
                       bool tree_fast_path = false);

bool max_ideal_in_ass_star(std::size_t n, std::size_t t, std::size_t s);
AssReport predict_ass_star(std::size_t n, std::size_t t, std::size_t s);
AssReport predict_ass_tree(const Graph& g, std::size_t t, std::size_t s);

/// 1 for t = 1, otherwise the least s with s(t-1) >= max degree - 1.
std::size_t astab_tree(const Graph& g, std::size_t t);

/// Same formula for K_{1,n}; defined for any 1 <= t <= n.
std::size_t astab_star(std::size_t n, std::size_t t);

/// Ass(I^s) for s = 1..s_max and the least power from which they stay constant.
/// Never certified.
StabilityReport empirical_astab(const MonomialIdeal& ideal, std::size_t s_max);

/// Checks Ass(I^s) inside Ass(I^{s+1}) for s < s_max. Requires s_max >= 2.
StabilityReport check_persistence(const MonomialIdeal& ideal, std::size_t s_max);

/// Stability of J_t(g): empirical, upgraded to certified for trees when the
/// closed-form value agrees with every explored power.
StabilityReport graph_stability(const Graph& g, std::size_t t, std::size_t s_max);

/// Cyclic-sequence witness for the maximal ideal of J_t(K_{1,n})^s.
WitnessCertificate build_star_witness(std::size_t n, std::size_t t, std::size_t s);

/// For a witness T = z^e T' of the maximal ideal, whether T divides z^e (x1...xn)^{s-e-1}.
/// Throws Error if T is not such a witness.
bool verify_annihilator_divisibility(std::size_t n, std::size_t t, std::size_t s, const Monomial& witness);

/// [prime on p is in Ass(J_t(g)^s)] == [maximal ideal is in Ass(J_t(g_p)^s)].
bool localization_check(const Graph& g, std::size_t t, std::size_t s, const VertexList& p);

/// Same check against an already computed Ass(J_t(g)^s).
bool localization_check(const Graph& g, std::size_t t, std::size_t s, const VertexList& p,
                        const std::vector<MonomialPrime>& direct_primes);

/// Every prime of the report induces a connected subgraph of g.
bool connectivity_check(const AssReport& report, const Graph& g);

}  // namespace covertool
