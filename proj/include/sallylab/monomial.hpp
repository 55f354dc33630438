#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace sallylab {

using Exponent = std::uint32_t;

/// A monomial x_0^{a_0} ... x_{d-1}^{a_{d-1}} stored as its exponent vector.
/// The dimension d is at least one. Arithmetic that would overflow an
/// exponent throws ArithmeticOverflow.
class Monomial {
 public:
  using Storage = boost::container::small_vector<Exponent, 4>;

  explicit Monomial(std::span<const Exponent> exponents);
  Monomial(std::initializer_list<Exponent> exponents);

  static Monomial one(std::size_t dim);
  static Monomial variable(std::size_t dim, std::size_t index, Exponent power = 1);

  std::size_t dim() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const noexcept { return exps_[i]; }
  std::span<const Exponent> exponents() const noexcept { return {exps_.data(), exps_.size()}; }
  std::uint64_t degree() const noexcept;

  bool is_one() const noexcept;
  /// True iff this monomial divides `other` (componentwise <=).
  bool divides(const Monomial& other) const noexcept;
  /// Index i if the monomial is x_i^k with k >= 1.
  std::optional<std::size_t> pure_power_variable() const noexcept;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  Monomial() = default;
  Storage exps_;

  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial colon_quotient(const Monomial& f, const Monomial& g);
};

Monomial lcm(const Monomial& a, const Monomial& b);
/// lcm(f, g) / g, the generator of (f) : (g).
Monomial colon_quotient(const Monomial& f, const Monomial& g);

/// Graded-lexicographic order: total degree first, then the larger exponent
/// of the earliest variable comes first (x^2 < xy < y^2 in degree two).
std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b) noexcept;
inline bool grlex_less(const Monomial& a, const Monomial& b) noexcept {
  return grlex_compare(a, b) < 0;
}

/// Positional variable name: x, y, z, w for d <= 4, otherwise x1 ... xd.
std::string variable_name(std::size_t index, std::size_t dim);
/// Renders e.g. "x^2*y^3"; the unit monomial renders as "1".
std::string to_string(const Monomial& m);

void check_same_dim(std::size_t a, std::size_t b, const char* where);

}  // namespace sallylab
