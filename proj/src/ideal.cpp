#include "covertool/ideal.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>

#include "covertool/error.hpp"

namespace covertool {

namespace {

void require_same_ambient(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (!(a.ambient() == b.ambient())) throw Error("ideals live over different variable sets");
}

void require_matches(const Ambient& ambient, const Monomial& m) {
  if (m.num_vars() != ambient.size()) throw Error("monomial does not match the ambient variable count");
}

/// Sorted, duplicate-free candidates -> minimal generators. Keeps canonical order.
std::vector<Monomial> minimal_subset(std::vector<Monomial> candidates) {
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  std::vector<Monomial> kept;
  kept.reserve(candidates.size());
  for (auto& m : candidates) {
    // Canonical order is degree-first, so any divisor of m is already in kept.
    const bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Monomial& g) {
      return g.degree() < m.degree() && g.divides(m);
    });
    if (!redundant) kept.push_back(std::move(m));
  }
  return kept;
}

/// gens + m where gens is minimal and no generator divides m.
std::vector<Monomial> insert_generator(const std::vector<Monomial>& gens, const Monomial& m) {
  std::vector<Monomial> out;
  out.reserve(gens.size() + 1);
  bool placed = false;
  for (const auto& g : gens) {
    if (m.divides(g)) continue;
    if (!placed && m < g) {
      out.push_back(m);
      placed = true;
    }
    out.push_back(g);
  }
  if (!placed) out.push_back(m);
  return out;
}


using Components = std::vector<IrreducibleComponent>;

struct GeneratorsHash {
  std::size_t operator()(const std::vector<Monomial>& gens) const noexcept {
    std::size_t h = gens.size();
    for (const auto& g : gens) h = h * 1000003U ^ MonomialHash{}(g);
    return h;
  }
};

std::uint64_t support_mask(const IrreducibleComponent& c) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < c.bounds.size(); ++i) {
    if (c.bounds[i] != 0) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

/// Sorts, deduplicates and drops every component that contains another.
Components irredundant(Components parts) {
  std::sort(parts.begin(), parts.end());
  parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
  std::vector<std::uint64_t> masks(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) masks[i] = support_mask(parts[i]);
  std::vector<bool> keep(parts.size(), true);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = 0; j < parts.size() && keep[i]; ++j) {
      keep[i] = i == j || (masks[j] & ~masks[i]) != 0 || !parts[i].contains(parts[j]);
    }
  }
  Components out;
  out.reserve(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (keep[i]) out.push_back(std::move(parts[i]));
  }
  return out;
}

/// Splitting recursion. Distinct branches reach the same ideal very often, so
/// results are memoized per generator set.
class Decomposer {
 public:
  const Components& run(const std::vector<Monomial>& gens) {
    if (auto it = memo_.find(gens); it != memo_.end()) return it->second;
    Components result;
    auto split = std::find_if(gens.begin(), gens.end(), [](const Monomial& g) { return !g.is_pure_power(); });
    if (split == gens.end()) {
      IrreducibleComponent c{std::vector<Exponent>(gens.front().num_vars(), 0)};
      for (const auto& g : gens) {
        const auto i = g.support().front();
        c.bounds[i] = g[i];
      }
      result.push_back(std::move(c));
    } else {
      const auto var = split->support().front();
      const auto power = Monomial::variable(split->num_vars(), var, (*split)[var]);
      const auto rest = *split / power;
      result = run(insert_generator(gens, power));
      const auto& other = run(insert_generator(gens, rest));
      result.insert(result.end(), other.begin(), other.end());
      result = irredundant(std::move(result));
    }
    return memo_.emplace(gens, std::move(result)).first->second;
  }

 private:
  std::unordered_map<std::vector<Monomial>, Components, GeneratorsHash> memo_;
};

}  // namespace

MonomialIdeal::MonomialIdeal(Ambient ambient, std::vector<Monomial> generators) : ambient_(std::move(ambient)) {
  for (const auto& g : generators) require_matches(ambient_, g);
  gens_ = minimal_subset(std::move(generators));
}

MonomialIdeal MonomialIdeal::unit(Ambient ambient) {
  const auto n = ambient.size();
  return MonomialIdeal(std::move(ambient), {Monomial(n)});
}

bool MonomialIdeal::is_square_free() const noexcept {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_square_free(); });
}

bool MonomialIdeal::contains(const Monomial& m) const noexcept {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

std::string MonomialIdeal::generator_list() const {
  std::string out;
  for (const auto& g : gens_) {
    if (!out.empty()) out += ", ";
    out += g.to_string(ambient_);
  }
  return out;
}

MonomialPrime::MonomialPrime(std::vector<std::size_t> vars) : support(std::move(vars)) {
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  if (support.empty()) throw Error("a monomial prime needs at least one variable");
}

std::vector<std::string> MonomialPrime::labels(const Ambient& ambient) const {
  std::vector<std::string> out;
  for (auto i : support) out.push_back(ambient.name(i));
  return out;
}

std::string MonomialPrime::to_string(const Ambient& ambient) const {
  std::string out = "<";
  for (std::size_t k = 0; k < support.size(); ++k) {
    if (k != 0) out += ", ";
    out += ambient.name(support[k]);
  }
  return out + ">";
}

MonomialIdeal MonomialPrime::to_ideal(const Ambient& ambient) const {
  std::vector<Monomial> gens;
  for (auto i : support) gens.push_back(Monomial::variable(ambient.size(), i));
  return MonomialIdeal(ambient, std::move(gens));
}

std::strong_ordering operator<=>(const MonomialPrime& a, const MonomialPrime& b) {
  if (auto c = a.support.size() <=> b.support.size(); c != 0) return c;
  return a.support <=> b.support;
}

std::vector<std::size_t> IrreducibleComponent::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    if (bounds[i] != 0) out.push_back(i);
  }
  return out;
}

MonomialIdeal IrreducibleComponent::to_ideal(const Ambient& ambient) const {
  std::vector<Monomial> gens;
  for (auto i : support()) gens.push_back(Monomial::variable(ambient.size(), i, bounds[i]));
  return MonomialIdeal(ambient, std::move(gens));
}

bool IrreducibleComponent::contains(const IrreducibleComponent& other) const noexcept {
  if (bounds.size() != other.bounds.size()) return false;
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    if (other.bounds[i] == 0) continue;
    if (bounds[i] == 0 || bounds[i] > other.bounds[i]) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const IrreducibleComponent& a, const IrreducibleComponent& b) {
  auto count = [](const IrreducibleComponent& c) {
    return std::count_if(c.bounds.begin(), c.bounds.end(), [](Exponent e) { return e != 0; });
  };
  if (auto c = count(a) <=> count(b); c != 0) return c;
  if (auto c = a.bounds.size() <=> b.bounds.size(); c != 0) return c;
  // Lexicographic on supports: the earliest differing variable present in a sorts first.
  for (std::size_t i = 0; i < a.bounds.size(); ++i) {
    const bool in_a = a.bounds[i] != 0;
    const bool in_b = b.bounds[i] != 0;
    if (in_a != in_b) return in_a ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.bounds <=> b.bounds;
}

MonomialIdeal minimalize(const Ambient& ambient, std::vector<Monomial> generators) {
  return MonomialIdeal(ambient, std::move(generators));
}

MonomialIdeal add_generator(const MonomialIdeal& ideal, const Monomial& m) {
  require_matches(ideal.ambient(), m);
  if (ideal.contains(m)) return ideal;
  return MonomialIdeal(MonomialIdeal::Minimal{}, ideal.ambient(), insert_generator(ideal.generators(), m));
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ambient(a, b);
  std::vector<Monomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.ambient(), std::move(gens));
}

MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ambient(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.num_generators() * b.num_generators());
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) gens.push_back(g * h);
  }
  return MonomialIdeal(a.ambient(), std::move(gens));
}

MonomialIdeal ideal_power(const MonomialIdeal& ideal, std::size_t s) {
  auto result = MonomialIdeal::unit(ideal.ambient());
  for (std::size_t k = 0; k < s; ++k) result = ideal_product(result, ideal);
  return result;
}

MonomialIdeal ideal_intersection(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ambient(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.num_generators() * b.num_generators());
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) gens.push_back(lcm(g, h));
  }
  return MonomialIdeal(a.ambient(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& t) {
  require_matches(ideal.ambient(), t);
  std::vector<Monomial> gens;
  gens.reserve(ideal.num_generators());
  for (const auto& g : ideal.generators()) gens.push_back(g / gcd(g, t));
  return MonomialIdeal(ideal.ambient(), std::move(gens));
}

bool contains(const MonomialIdeal& ideal, const Monomial& m) {
  require_matches(ideal.ambient(), m);
  return ideal.contains(m);
}

std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw Error("irreducible decomposition of the zero ideal is undefined");
  if (ideal.is_unit()) throw Error("irreducible decomposition of the unit ideal is undefined");
  if (ideal.ambient().size() > 64) throw Error("irreducible decomposition supports at most 64 variables");
  Decomposer decomposer;
  return decomposer.run(ideal.generators());
}

std::vector<MonomialPrime> associated_primes(const MonomialIdeal& ideal) {
  std::vector<MonomialPrime> primes;
  for (const auto& c : irreducible_decomposition(ideal)) primes.push_back(c.radical());
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

std::vector<Exponent> witness_box(const MonomialIdeal& ideal) {
  std::vector<Exponent> box(ideal.ambient().size(), 0);
  for (const auto& g : ideal.generators()) {
    for (std::size_t i = 0; i < box.size(); ++i) box[i] = std::max(box[i], g[i]);
  }
  for (auto& b : box) b *= static_cast<Exponent>(ideal.num_generators());
  return box;
}

namespace {

/// The prime ideal : t equals, if it is prime (as a variable bitmask).
std::optional<std::uint64_t> colon_as_prime(const std::vector<Monomial>& gens, const Monomial& t,
                                            std::vector<Monomial>& quotients) {
  quotients.clear();
  std::uint64_t linear = 0;
  for (const auto& g : gens) {
    auto q = g / gcd(g, t);
    if (q.is_one()) return std::nullopt;
    if (q.degree() == 1) linear |= std::uint64_t{1} << q.support().front();
    quotients.push_back(std::move(q));
  }
  for (const auto& q : quotients) {
    bool covered = false;
    for (std::size_t i = 0; i < q.num_vars() && !covered; ++i) covered = q[i] != 0 && (linear >> i & 1U);
    if (!covered) return std::nullopt;
  }
  return linear;
}

/// Visits every T with 0 <= T_i <= cap_i; stops when visit returns true.
template <typename Visit>
void for_each_in_box(const std::vector<Exponent>& cap, Visit&& visit) {
  Monomial t(cap.size());
  while (true) {
    if (visit(t)) return;
    std::size_t i = 0;
    while (i < cap.size() && t[i] == cap[i]) t[i++] = 0;
    if (i == cap.size()) return;
    ++t[i];
  }
}

std::vector<Exponent> reduced_box(const MonomialIdeal& ideal) {
  std::vector<Exponent> cap(ideal.ambient().size(), 0);
  for (const auto& g : ideal.generators()) {
    for (std::size_t i = 0; i < cap.size(); ++i) cap[i] = std::max(cap[i], g[i]);
  }
  return cap;
}

void require_witness_input(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit()) throw Error("witness search needs a proper nonzero ideal");
  if (ideal.ambient().size() > 64) throw Error("witness search supports at most 64 variables");
}

std::uint64_t prime_mask(const MonomialPrime& prime) {
  std::uint64_t mask = 0;
  for (auto i : prime.support) mask |= std::uint64_t{1} << i;
  return mask;
}

}  // namespace

std::optional<Monomial> witness_search(const MonomialIdeal& ideal, const MonomialPrime& prime) {
  require_witness_input(ideal);
  if (prime.support.back() >= ideal.ambient().size()) return std::nullopt;
  const auto target = prime_mask(prime);
  std::optional<Monomial> found;
  std::vector<Monomial> scratch;
  for_each_in_box(reduced_box(ideal), [&](const Monomial& t) {
    if (colon_as_prime(ideal.generators(), t, scratch) == target) found = t;
    return found.has_value();
  });
  if (found && !(colon(ideal, *found) == prime.to_ideal(ideal.ambient()))) {
    throw IntegrityError("witness failed its colon certification");
  }
  return found;
}

std::vector<Monomial> all_witnesses(const MonomialIdeal& ideal, const MonomialPrime& prime) {
  require_witness_input(ideal);
  std::vector<Monomial> found;
  if (prime.support.back() >= ideal.ambient().size()) return found;
  const auto target = prime_mask(prime);
  std::vector<Monomial> scratch;
  for_each_in_box(reduced_box(ideal), [&](const Monomial& t) {
    if (colon_as_prime(ideal.generators(), t, scratch) == target) found.push_back(t);
    return false;
  });
  return found;
}

std::map<MonomialPrime, Monomial> witness_primes(const MonomialIdeal& ideal) {
  require_witness_input(ideal);
  std::map<MonomialPrime, Monomial> found;
  std::vector<Monomial> scratch;
  for_each_in_box(reduced_box(ideal), [&](const Monomial& t) {
    if (auto mask = colon_as_prime(ideal.generators(), t, scratch)) {
      std::vector<std::size_t> vars;
      for (std::size_t i = 0; i < 64; ++i) {
        if (*mask >> i & 1U) vars.push_back(i);
      }
      found.try_emplace(MonomialPrime(std::move(vars)), t);
    }
    return false;
  });
  return found;
}

MonomialIdeal alexander_dual(const MonomialIdeal& ideal) {
  if (!ideal.is_square_free()) throw Error("Alexander dual requires a square-free ideal");
  const auto n = ideal.ambient().size();
  if (ideal.is_unit()) return MonomialIdeal::zero(ideal.ambient());
  if (ideal.is_zero()) return MonomialIdeal::unit(ideal.ambient());
  std::vector<Monomial> gens;
  for (const auto& c : irreducible_decomposition(ideal)) gens.push_back(Monomial::square_free(n, c.support()));
  return MonomialIdeal(ideal.ambient(), std::move(gens));
}

std::vector<std::vector<std::size_t>> minimal_transversals(std::size_t num_vertices,
                                                           const std::vector<std::vector<std::size_t>>& edges) {
  if (num_vertices > 24) throw Error("transversal enumeration limited to 24 vertices");
  std::vector<std::uint64_t> edge_masks;
  for (const auto& e : edges) {
    std::uint64_t mask = 0;
    for (auto v : e) {
      if (v >= num_vertices) throw Error("edge vertex out of range");
      mask |= std::uint64_t{1} << v;
    }
    edge_masks.push_back(mask);
  }
  auto meets_all = [&](std::uint64_t w) {
    return std::all_of(edge_masks.begin(), edge_masks.end(), [&](std::uint64_t e) { return (e & w) != 0; });
  };
  std::vector<std::uint64_t> minimal;
  const std::uint64_t end = std::uint64_t{1} << num_vertices;
  for (std::uint64_t w = 0; w < end; ++w) {
    if (!meets_all(w)) continue;
    bool is_minimal = true;
    for (std::uint64_t rest = w; rest != 0 && is_minimal; rest &= rest - 1) {
      is_minimal = !meets_all(w & ~(rest & (~rest + 1)));
    }
    if (is_minimal) minimal.push_back(w);
  }
  std::sort(minimal.begin(), minimal.end(), [](std::uint64_t a, std::uint64_t b) {
    if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
    const auto diff = a ^ b;
    return diff != 0 && (a & diff & (~diff + 1)) != 0;
  });
  std::vector<std::vector<std::size_t>> out;
  for (auto w : minimal) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < num_vertices; ++i) {
      if (w >> i & 1U) members.push_back(i);
    }
    out.push_back(std::move(members));
  }
  return out;
}

}  // namespace covertool
