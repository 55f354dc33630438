#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sallylab/integer.hpp"
#include "sallylab/monomial.hpp"

namespace sallylab {

/// A monomial ideal in d variables, held as its minimal generating set in
/// graded-lexicographic order. Two ideals are equal iff their generator
/// lists are identical. The zero ideal has no generators; the unit ideal is
/// generated by the monomial 1.
class MonomialIdeal {
 public:
  /// Minimalizes `gens`; throws MixedDimension if some generator is not in
  /// `dim` variables.
  MonomialIdeal(std::size_t dim, std::vector<Monomial> gens);

  static MonomialIdeal zero(std::size_t dim);
  static MonomialIdeal unit(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  std::span<const Monomial> generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_one(); }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  MonomialIdeal(std::size_t dim, std::vector<Monomial> minimal, int);
  std::size_t dim_;
  std::vector<Monomial> gens_;

  friend MonomialIdeal minimalize(std::size_t dim, std::vector<Monomial> gens);
};

MonomialIdeal minimalize(std::size_t dim, std::vector<Monomial> gens);

/// The maximal ideal (x_1, ..., x_d).
MonomialIdeal max_ideal(std::size_t dim);

bool member(const Monomial& m, const MonomialIdeal& ideal);
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& ideal, std::size_t k);
/// I^0, I^1, ..., I^k.
std::vector<MonomialIdeal> powers(const MonomialIdeal& ideal, std::size_t k);
MonomialIdeal intersection(const MonomialIdeal& a, const MonomialIdeal& b);
/// I : J. Throws ZeroDivisorIdeal when J is the zero ideal.
MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& by);

/// True iff `inner` is contained in `outer`.
bool contains(const MonomialIdeal& outer, const MonomialIdeal& inner);
bool equals(const MonomialIdeal& a, const MonomialIdeal& b);

/// For each variable, the smallest exponent k with x_i^k a generator; empty
/// if some variable has no pure-power generator (the ideal is not m-primary).
/// The unit ideal yields all zeros.
std::optional<std::vector<Exponent>> pure_power_bounds(const MonomialIdeal& ideal);
bool is_m_primary(const MonomialIdeal& ideal);

/// Exponents (a_1, ..., a_d) when the ideal is exactly (x_1^{a_1}, ..., x_d^{a_d})
/// with every a_i >= 1.
std::optional<std::vector<Exponent>> parameter_exponents(const MonomialIdeal& ideal);

/// Length of A / I: the number of standard monomials. Throws NotMPrimary.
Integer colength(const MonomialIdeal& ideal);
/// Length of I / J for J inside I. Throws NotContained or NotMPrimary.
Integer quotient_length(const MonomialIdeal& inner, const MonomialIdeal& outer);

std::string to_string(const MonomialIdeal& ideal);

}  // namespace sallylab
