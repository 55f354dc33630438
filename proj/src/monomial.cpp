#include "sallylab/monomial.hpp"

#include <limits>
#include <stdexcept>

#include "sallylab/errors.hpp"

namespace sallylab {

Monomial::Monomial(std::span<const Exponent> exponents)
    : exps_(exponents.begin(), exponents.end()) {
  if (exps_.empty()) throw std::invalid_argument("a monomial needs at least one variable");
}

Monomial::Monomial(std::initializer_list<Exponent> exponents)
    : Monomial(std::span<const Exponent>(exponents.begin(), exponents.size())) {}

Monomial Monomial::one(std::size_t dim) {
  if (dim == 0) throw std::invalid_argument("a monomial needs at least one variable");
  Monomial m;
  m.exps_.assign(dim, 0);
  return m;
}

Monomial Monomial::variable(std::size_t dim, std::size_t index, Exponent power) {
  Monomial m = one(dim);
  if (index >= dim) throw std::out_of_range("variable index out of range");
  m.exps_[index] = power;
  return m;
}

std::uint64_t Monomial::degree() const noexcept {
  std::uint64_t deg = 0;
  for (Exponent e : exps_) deg += e;
  return deg;
}

bool Monomial::is_one() const noexcept {
  for (Exponent e : exps_)
    if (e != 0) return false;
  return true;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  const std::size_t d = exps_.size();
  for (std::size_t i = 0; i < d; ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

std::optional<std::size_t> Monomial::pure_power_variable() const noexcept {
  std::optional<std::size_t> var;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (var) return std::nullopt;
    var = i;
  }
  return var;
}

void check_same_dim(std::size_t a, std::size_t b, const char* where) {
  if (a != b)
    throw MixedDimension(std::string(where) + ": dimensions " + std::to_string(a) +
                         " and " + std::to_string(b) + " disagree");
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  check_same_dim(a.dim(), b.dim(), "monomial product");
  Monomial out;
  out.exps_.resize(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Exponent sum;
    if (__builtin_add_overflow(a.exps_[i], b.exps_[i], &sum))
      throw ArithmeticOverflow("exponent overflow in monomial product");
    out.exps_[i] = sum;
  }
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  check_same_dim(a.dim(), b.dim(), "lcm");
  Monomial out;
  out.exps_.resize(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  return out;
}

Monomial colon_quotient(const Monomial& f, const Monomial& g) {
  check_same_dim(f.dim(), g.dim(), "colon");
  Monomial out;
  out.exps_.resize(f.dim());
  for (std::size_t i = 0; i < f.dim(); ++i)
    out.exps_[i] = f.exps_[i] > g.exps_[i] ? f.exps_[i] - g.exps_[i] : 0;
  return out;
}

std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b) noexcept {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  const std::size_t d = std::min(a.dim(), b.dim());
  for (std::size_t i = 0; i < d; ++i)
    if (a[i] != b[i]) return b[i] <=> a[i];
  return a.dim() <=> b.dim();
}

std::string variable_name(std::size_t index, std::size_t dim) {
  static constexpr const char* kShort[] = {"x", "y", "z", "w"};
  if (dim <= 4) return kShort[index];
  return "x" + std::to_string(index + 1);
}

std::string to_string(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += variable_name(i, m.dim());
    if (m[i] != 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace sallylab
