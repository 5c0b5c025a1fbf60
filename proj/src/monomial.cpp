#include "covertool/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "covertool/error.hpp"

namespace covertool {

namespace {

Exponent checked_add(Exponent a, Exponent b) {
  if (a > std::numeric_limits<Exponent>::max() - b) throw std::overflow_error("monomial exponent overflow");
  return a + b;
}

void require_same_size(const Monomial& a, const Monomial& b) {
  if (a.num_vars() != b.num_vars()) throw Error("monomials over different variable counts");
}

}  // namespace

Ambient::Ambient(std::vector<std::string> names) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) throw Error("empty variable name");
    for (std::size_t j = 0; j < i; ++j) {
      if (names[i] == names[j]) throw Error("duplicate variable '" + names[i] + "'");
    }
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

std::optional<std::size_t> Ambient::find(std::string_view name) const {
  auto it = std::find(names_->begin(), names_->end(), name);
  if (it == names_->end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_->begin());
}

std::size_t Ambient::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw Error("unknown variable '" + std::string(name) + "'");
}

Monomial Monomial::variable(std::size_t num_vars, std::size_t index, Exponent power) {
  Monomial m(num_vars);
  m.exps_.at(index) = power;
  return m;
}

Monomial Monomial::square_free(std::size_t num_vars, const std::vector<std::size_t>& support) {
  Monomial m(num_vars);
  for (auto i : support) m.exps_.at(i) = 1;
  return m;
}

std::uint64_t Monomial::degree() const noexcept {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Monomial::is_one() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::is_square_free() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
}

bool Monomial::is_pure_power() const noexcept {
  return std::count_if(exps_.begin(), exps_.end(), [](Exponent e) { return e != 0; }) == 1;
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0) out.push_back(i);
  }
  return out;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (exps_.size() != other.exps_.size()) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  require_same_size(a, b);
  Monomial out(a.num_vars());
  for (std::size_t i = 0; i < a.num_vars(); ++i) out.exps_[i] = checked_add(a.exps_[i], b.exps_[i]);
  return out;
}

Monomial Monomial::pow(std::uint64_t k) const {
  Monomial out(num_vars());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0 && k > std::numeric_limits<Exponent>::max() / exps_[i]) {
      throw std::overflow_error("monomial exponent overflow");
    }
    out.exps_[i] = static_cast<Exponent>(exps_[i] * k);
  }
  return out;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  if (!divisor.divides(*this)) throw Error("monomial quotient is not exact");
  Monomial out(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] -= divisor.exps_[i];
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_size(a, b);
  Monomial out(a.num_vars());
  for (std::size_t i = 0; i < a.num_vars(); ++i) out.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  return out;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same_size(a, b);
  Monomial out(a.num_vars());
  for (std::size_t i = 0; i < a.num_vars(); ++i) out.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  if (auto c = a.num_vars() <=> b.num_vars(); c != 0) return c;
  for (std::size_t i = 0; i < a.num_vars(); ++i) {
    if (a.exps_[i] != b.exps_[i]) return b.exps_[i] <=> a.exps_[i];
  }
  return std::strong_ordering::equal;
}

std::string Monomial::to_string(const Ambient& ambient) const {
  if (ambient.size() != exps_.size()) throw Error("monomial does not match ambient");
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ambient.name(i);
    if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto e : m.exponents()) {
    h ^= e;
    h *= 1099511628211ULL;
  }
  return h;
}

Monomial parse_monomial(const Ambient& ambient, std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  Monomial m(ambient.size());
  if (text == "1") return m;
  if (text.empty()) throw Error("empty monomial");
  while (true) {
    const auto star = text.find('*');
    auto factor = trim(text.substr(0, star));
    Exponent power = 1;
    if (const auto caret = factor.find('^'); caret != std::string_view::npos) {
      const auto digits = trim(factor.substr(caret + 1));
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), power);
      if (ec != std::errc() || ptr != digits.data() + digits.size()) {
        throw Error("bad exponent in '" + std::string(factor) + "'");
      }
      factor = trim(factor.substr(0, caret));
    }
    const auto i = ambient.index_of(factor);
    m[i] = checked_add(m[i], power);
    if (star == std::string_view::npos) break;
    text = text.substr(star + 1);
  }
  return m;
}

}  // namespace covertool
