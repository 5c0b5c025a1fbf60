#include "covertool/ass_analysis.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "covertool/error.hpp"

namespace covertool {

namespace {

constexpr const char* kUnitMessage = "unit ideal - no constraints (t exceeds all degrees)";

MonomialIdeal proper_cover_ideal(const Graph& g, std::size_t t) {
  auto ideal = partial_cover_ideal(g, t);
  if (ideal.is_unit()) throw Error(kUnitMessage);
  return ideal;
}

void require_star_parameters(std::size_t n, std::size_t t, std::size_t s) {
  if (t < 1 || s < 1) throw Error("t and s must be at least 1");
  if (t > n) throw Error("star parameters need t <= n");
}

void require_tree(const Graph& g) {
  if (g.empty() || !is_tree(g)) throw Error("closed form proven only for trees");
}

std::vector<std::size_t> indices_of(const Graph& g, const VertexList& labels) {
  std::vector<std::size_t> out;
  for (const auto& v : labels) out.push_back(g.index_of(v));
  return out;
}

MonomialPrime full_prime(std::size_t num_vars) {
  std::vector<std::size_t> all(num_vars);
  for (std::size_t i = 0; i < num_vars; ++i) all[i] = i;
  return MonomialPrime(std::move(all));
}

bool contains_prime(const std::vector<MonomialPrime>& primes, const MonomialPrime& p) {
  return std::binary_search(primes.begin(), primes.end(), p);
}

/// Whether the maximal ideal of the subring on p is associated to J_t(g_p)^s.
bool maximal_ideal_associated_locally(const Graph& g, std::size_t t, std::size_t s, const VertexList& p) {
  const auto local = induced_subgraph(g, p);
  const auto ideal = partial_cover_ideal(local, t);
  if (ideal.is_unit()) return false;
  return contains_prime(associated_primes(ideal_power(ideal, s)), full_prime(local.num_vertices()));
}

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

std::size_t stable_index(std::size_t max_degree, std::size_t t) {
  if (t == 1) return 1;
  return std::max<std::size_t>(1, ceil_div(max_degree - 1, t - 1));
}

StabilityReport stability_profile(const MonomialIdeal& ideal, std::size_t s_max) {
  if (ideal.is_zero() || ideal.is_unit()) throw Error("stability needs a proper nonzero ideal");
  StabilityReport report;
  report.ambient = ideal.ambient();
  report.s_max = s_max;
  auto power = ideal;
  for (std::size_t s = 1; s <= s_max; ++s) {
    if (s > 1) power = ideal_product(power, ideal);
    report.ass_by_power.push_back(associated_primes(power));
  }
  std::size_t s0 = s_max;
  while (s0 > 1 && report.ass_by_power[s0 - 2] == report.ass_by_power[s_max - 1]) --s0;
  if (s0 < s_max) {
    report.status = AstabStatus::kEmpirical;
    report.empirical_astab = s0;
    report.astab = s0;
  }
  for (std::size_t s = 1; s < s_max; ++s) {
    const auto& now = report.ass_by_power[s - 1];
    const auto& next = report.ass_by_power[s];
    if (!std::includes(next.begin(), next.end(), now.begin(), now.end())) {
      report.persistence_ok = false;
      report.first_violation = s;
      break;
    }
  }
  return report;
}

}  // namespace

std::string to_string(AssMethod method) {
  switch (method) {
    case AssMethod::kOracle: return "oracle";
    case AssMethod::kClosedForm: return "closed_form";
    case AssMethod::kLocalized: return "localized";
  }
  return "?";
}

std::string to_string(AstabStatus status) {
  switch (status) {
    case AstabStatus::kCertified: return "certified";
    case AstabStatus::kEmpirical: return "empirical (uncertified beyond s_max)";
    case AstabStatus::kUndetermined: return "not determined up to s_max";
  }
  return "?";
}

bool AssReport::has_prime(const MonomialPrime& p) const { return contains_prime(primes, p); }

AssReport ass_of_power(const Graph& g, std::size_t t, std::size_t s, AssMode mode, bool tree_fast_path) {
  if (s < 1) throw Error("s must be at least 1");
  const auto ideal = proper_cover_ideal(g, t);
  AssReport report{g, t, s, AssMethod::kOracle, {}, {}, {}};
  if (mode == AssMode::kDirect) {
    report.primes = associated_primes(ideal_power(ideal, s));
  } else {
    report.method = AssMethod::kLocalized;
    std::vector<VertexList> candidates;
    if (tree_fast_path && is_tree(g)) {
      candidates = enumerate_induced_stars(g, t, g.num_vertices());
      report.notes.push_back("trees-only fast path: star-shaped subsets only");
    } else {
      if (tree_fast_path) report.notes.push_back("fast path ignored: graph is not a tree");
      candidates = enumerate_connected_subsets(g);
    }
    for (const auto& p : candidates) {
      if (maximal_ideal_associated_locally(g, t, s, p)) report.primes.emplace_back(indices_of(g, p));
    }
    std::sort(report.primes.begin(), report.primes.end());
  }
  report.checks["connected_supports"] = connectivity_check(report, g);
  return report;
}

bool max_ideal_in_ass_star(std::size_t n, std::size_t t, std::size_t s) {
  require_star_parameters(n, t, s);
  if (t == 1) return n == 1;
  return s * (t - 1) >= n - 1;
}

AssReport predict_ass_star(std::size_t n, std::size_t t, std::size_t s) {
  require_star_parameters(n, t, s);
  if (n > 60) throw Error("star prediction limited to n <= 60");
  AssReport report{star_graph(n), t, s, AssMethod::kClosedForm, {}, {}, {}};
  const auto rmax = std::min(n, s * (t - 1) + 1);
  // Center z is variable 0, leaf x_i is variable i.
  for (std::uint64_t leaves = 1; leaves < (std::uint64_t{1} << n); ++leaves) {
    const auto r = static_cast<std::size_t>(std::popcount(leaves));
    if (r < t || r > rmax) continue;
    std::vector<std::size_t> vars{0};
    for (std::size_t i = 0; i < n; ++i) {
      if (leaves >> i & 1U) vars.push_back(i + 1);
    }
    report.primes.emplace_back(std::move(vars));
  }
  std::sort(report.primes.begin(), report.primes.end());
  return report;
}

AssReport predict_ass_tree(const Graph& g, std::size_t t, std::size_t s) {
  require_tree(g);
  if (t < 1 || s < 1) throw Error("t and s must be at least 1");
  if (t > max_degree(g)) throw Error(kUnitMessage);
  AssReport report{g, t, s, AssMethod::kClosedForm, {}, {}, {}};
  const auto rmax = std::min(g.num_vertices(), s * (t - 1) + 1);
  if (t <= rmax) {
    for (const auto& p : enumerate_induced_stars(g, t, rmax)) report.primes.emplace_back(indices_of(g, p));
  }
  std::sort(report.primes.begin(), report.primes.end());
  return report;
}

std::size_t astab_tree(const Graph& g, std::size_t t) {
  require_tree(g);
  if (t < 1) throw Error("t must be at least 1");
  const auto delta = max_degree(g);
  if (t > delta) throw Error("astab formula needs t <= max degree");
  return stable_index(delta, t);
}

std::size_t astab_star(std::size_t n, std::size_t t) {
  require_star_parameters(n, t, 1);
  return stable_index(n, t);
}

StabilityReport empirical_astab(const MonomialIdeal& ideal, std::size_t s_max) {
  if (s_max < 1) throw Error("s_max must be at least 1");
  return stability_profile(ideal, s_max);
}

StabilityReport check_persistence(const MonomialIdeal& ideal, std::size_t s_max) {
  if (s_max < 2) throw Error("persistence needs s_max >= 2");
  return stability_profile(ideal, s_max);
}

StabilityReport graph_stability(const Graph& g, std::size_t t, std::size_t s_max) {
  if (s_max < 1) throw Error("s_max must be at least 1");
  auto report = stability_profile(proper_cover_ideal(g, t), s_max);
  if (!is_tree(g)) return report;
  const auto k = astab_tree(g, t);
  bool agrees = true;
  if (k < s_max) {
    agrees = report.empirical_astab == k;
  } else if (k == s_max && s_max > 1) {
    agrees = report.ass_by_power[s_max - 2] != report.ass_by_power[s_max - 1];
  }
  report.formula_agrees = agrees;
  if (agrees) {
    report.status = AstabStatus::kCertified;
    report.astab = k;
  }
  return report;
}

WitnessCertificate build_star_witness(std::size_t n, std::size_t t, std::size_t s) {
  require_star_parameters(n, t, s);
  if (t < 2) throw Error("witness construction needs t >= 2");
  if (s * (t - 1) < n - 1) throw Error("maximal ideal not associated at this power: requires s(t-1) >= n-1");
  WitnessCertificate cert;
  cert.n = n;
  cert.t = t;
  cert.s = s;
  cert.s0 = stable_index(n, t);
  cert.e = s - cert.s0;
  cert.ambient = ambient_of(star_graph(n));
  cert.prime = full_prime(n + 1);
  cert.witness = Monomial::variable(n + 1, 0, static_cast<Exponent>(cert.e));
  // First s0(n-t+1)-1 terms of x1, ..., xn, x1, ..., xn, ...
  const auto length = cert.s0 * (n - t + 1) - 1;
  for (std::size_t k = 0; k < length; ++k) ++cert.witness[1 + k % n];
  cert.empty_sequence = length == 0;
  const auto power = ideal_power(star_generators(n, t), s);
  cert.not_in_power = !power.contains(cert.witness);
  cert.colon_is_prime = colon(power, cert.witness) == cert.prime.to_ideal(cert.ambient);
  if (cert.valid()) cert.annihilator_bound = verify_annihilator_divisibility(n, t, s, cert.witness);
  return cert;
}

bool verify_annihilator_divisibility(std::size_t n, std::size_t t, std::size_t s, const Monomial& witness) {
  require_star_parameters(n, t, s);
  if (witness.num_vars() != n + 1) throw Error("witness must live over z, x1, ..., xn");
  const auto power = ideal_power(star_generators(n, t), s);
  if (power.contains(witness)) throw Error("not a witness: T lies in J_t^s");
  if (!(colon(power, witness) == full_prime(n + 1).to_ideal(power.ambient()))) {
    throw Error("not a witness: J_t^s : T is not the maximal ideal");
  }
  const auto e = static_cast<std::size_t>(witness[0]);
  if (e + 1 > s) return false;
  Monomial bound = Monomial::variable(n + 1, 0, static_cast<Exponent>(e));
  for (std::size_t i = 1; i <= n; ++i) bound[i] = static_cast<Exponent>(s - e - 1);
  return witness.divides(bound);
}

bool localization_check(const Graph& g, std::size_t t, std::size_t s, const VertexList& p) {
  const auto direct = associated_primes(ideal_power(proper_cover_ideal(g, t), s));
  return localization_check(g, t, s, p, direct);
}

bool localization_check(const Graph& g, std::size_t t, std::size_t s, const VertexList& p,
                        const std::vector<MonomialPrime>& direct_primes) {
  if (p.empty()) return true;
  const bool global = contains_prime(direct_primes, MonomialPrime(indices_of(g, p)));
  return global == maximal_ideal_associated_locally(g, t, s, p);
}

bool connectivity_check(const AssReport& report, const Graph& g) {
  const auto ambient = report.ambient();
  return std::all_of(report.primes.begin(), report.primes.end(), [&](const MonomialPrime& p) {
    return is_connected(induced_subgraph(g, p.labels(ambient)));
  });
}

}  // namespace covertool
