#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "covertool/monomial.hpp"

namespace covertool {

/// Monomial ideal stored by its minimal generators in canonical order.
///
/// The unit ideal is {1}; the zero ideal has no generators.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;

  /// Minimalizes the given generators.
  MonomialIdeal(Ambient ambient, std::vector<Monomial> generators);

  static MonomialIdeal unit(Ambient ambient);
  static MonomialIdeal zero(Ambient ambient) { return MonomialIdeal(std::move(ambient), {}); }

  const Ambient& ambient() const noexcept { return ambient_; }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }
  std::size_t num_generators() const noexcept { return gens_.size(); }

  bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_one(); }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_square_free() const noexcept;

  bool contains(const Monomial& m) const noexcept;

  /// Comma-separated generators, e.g. `x2, x3, x1*x4`.
  std::string generator_list() const;

  /// Bracketed generator list, e.g. `[x2, x3, x1*x4]`.
  std::string to_string() const { return "[" + generator_list() + "]"; }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  struct Minimal {};
  MonomialIdeal(Minimal, Ambient ambient, std::vector<Monomial> generators)
      : ambient_(std::move(ambient)), gens_(std::move(generators)) {}

  friend MonomialIdeal add_generator(const MonomialIdeal& ideal, const Monomial& m);

  Ambient ambient_;
  std::vector<Monomial> gens_;
};

/// Prime generated by a set of variables, kept as sorted variable indices.
struct MonomialPrime {
  std::vector<std::size_t> support;

  MonomialPrime() = default;
  explicit MonomialPrime(std::vector<std::size_t> vars);

  std::vector<std::string> labels(const Ambient& ambient) const;

  /// `<z, x1>` rendering.
  std::string to_string(const Ambient& ambient) const;
  MonomialIdeal to_ideal(const Ambient& ambient) const;

  friend bool operator==(const MonomialPrime&, const MonomialPrime&) = default;

  /// Fewer variables first, then lexicographic on indices.
  friend std::strong_ordering operator<=>(const MonomialPrime& a, const MonomialPrime& b);
};

/// Ideal generated by pure powers x_i^{bounds[i]}; a zero bound means x_i is absent.
struct IrreducibleComponent {
  std::vector<Exponent> bounds;

  std::vector<std::size_t> support() const;
  MonomialPrime radical() const { return MonomialPrime(support()); }
  MonomialIdeal to_ideal(const Ambient& ambient) const;

  /// Ideal containment: *this contains other.
  bool contains(const IrreducibleComponent& other) const noexcept;

  friend bool operator==(const IrreducibleComponent&, const IrreducibleComponent&) = default;
  friend std::strong_ordering operator<=>(const IrreducibleComponent& a, const IrreducibleComponent& b);
};

MonomialIdeal minimalize(const Ambient& ambient, std::vector<Monomial> generators);

/// I + <m>, reusing the minimal generators of I.
MonomialIdeal add_generator(const MonomialIdeal& ideal, const Monomial& m);

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_power(const MonomialIdeal& ideal, std::size_t s);
MonomialIdeal ideal_intersection(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& t);
bool contains(const MonomialIdeal& ideal, const Monomial& m);

/// Irredundant decomposition into irreducible components, canonically sorted.
///
/// Splits the first non-pure-power generator m = x_i^a * v (x_i the lowest
/// variable of m) into the branches I + <x_i^a> and I + <v>, then drops
/// components that contain another. Throws Error for the unit or zero ideal.
std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& ideal);

/// Radicals of the irreducible components, sorted and deduplicated.
std::vector<MonomialPrime> associated_primes(const MonomialIdeal& ideal);

/// Per-variable exponent bound of the witness box: max exponent over the
/// generators times the number of generators.
std::vector<Exponent> witness_box(const MonomialIdeal& ideal);

/// Some T inside the witness box with ideal : T = prime, if one exists.
///
/// Colon by T only depends on min(T_i, max generator exponent of x_i), so
/// the search runs over that reduced box; every hit also lies in the full box.
std::optional<Monomial> witness_search(const MonomialIdeal& ideal, const MonomialPrime& prime);

/// Every witness for prime in the reduced box, in enumeration order.
std::vector<Monomial> all_witnesses(const MonomialIdeal& ideal, const MonomialPrime& prime);

/// All primes that admit a witness in the box, each with its first witness.
std::map<MonomialPrime, Monomial> witness_primes(const MonomialIdeal& ideal);

/// Alexander dual of a square-free ideal: each irreducible component
/// <x_i : i in W> becomes the generator x_W. Throws Error otherwise.
MonomialIdeal alexander_dual(const MonomialIdeal& ideal);

/// Minimal vertex subsets meeting every edge, by exhaustive enumeration,
/// ordered by size and then lexicographically. Small vertex counts only.
std::vector<std::vector<std::size_t>> minimal_transversals(std::size_t num_vertices,
                                                           const std::vector<std::vector<std::size_t>>& edges);

}  // namespace covertool
