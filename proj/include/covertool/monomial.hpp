#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace covertool {

using Exponent = std::uint32_t;

/// Ordered set of variable names shared by monomials and ideals.
///
/// Copies share storage; two ambients compare equal when their names match.
class Ambient {
 public:
  Ambient() : names_(std::make_shared<const std::vector<std::string>>()) {}
  explicit Ambient(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_->size(); }
  const std::string& name(std::size_t i) const { return names_->at(i); }
  const std::vector<std::string>& names() const noexcept { return *names_; }
  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index_of(std::string_view name) const;

  friend bool operator==(const Ambient& a, const Ambient& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

/// Dense exponent vector over an ambient's variable order.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t num_vars, std::size_t index, Exponent power = 1);

  /// Product of the listed variables, each to the first power.
  static Monomial square_free(std::size_t num_vars, const std::vector<std::size_t>& support);

  std::size_t num_vars() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<Exponent>& exponents() const noexcept { return exps_; }

  std::uint64_t degree() const noexcept;
  bool is_one() const noexcept;
  bool is_square_free() const noexcept;

  /// Single variable raised to a positive power.
  bool is_pure_power() const noexcept;
  std::vector<std::size_t> support() const;

  bool divides(const Monomial& other) const noexcept;

  /// Throws std::overflow_error when an exponent leaves the Exponent range.
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  Monomial pow(std::uint64_t k) const;

  /// Exact quotient; throws Error unless divisor divides *this.
  Monomial operator/(const Monomial& divisor) const;

  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// Canonical order: total degree ascending, then larger exponents on
  /// earlier variables first.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

  /// `x1^2*x3` style rendering; `1` for the empty product.
  std::string to_string(const Ambient& ambient) const;

 private:
  std::vector<Exponent> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Parses `x1^2*x3` (or `1`) over the given ambient.
Monomial parse_monomial(const Ambient& ambient, std::string_view text);

}  // namespace covertool
