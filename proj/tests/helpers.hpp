#pragma once

#include <initializer_list>
#include <vector>

#include "sallylab/ideal.hpp"

namespace testing {

using sallylab::Exponent;
using sallylab::Monomial;
using sallylab::MonomialIdeal;

inline MonomialIdeal ideal(std::size_t dim, std::initializer_list<std::initializer_list<Exponent>> gens) {
  std::vector<Monomial> out;
  for (auto g : gens) out.emplace_back(g);
  return MonomialIdeal(dim, out);
}

inline MonomialIdeal pure_powers(std::size_t dim, Exponent a) {
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < dim; ++i) out.push_back(Monomial::variable(dim, i, a));
  return MonomialIdeal(dim, out);
}

inline MonomialIdeal with(const MonomialIdeal& q, std::initializer_list<std::initializer_list<Exponent>> extra) {
  std::vector<Monomial> out(q.generators().begin(), q.generators().end());
  for (auto g : extra) out.emplace_back(g);
  return MonomialIdeal(q.dim(), out);
}

// The worked examples.
inline MonomialIdeal family_q(Exponent l) { return pure_powers(2, 2 * l + 2); }
inline MonomialIdeal family_i(Exponent l) {
  const auto q = family_q(l);
  std::vector<Monomial> gens(q.generators().begin(), q.generators().end());
  for (Exponent i = 0; i <= l; ++i) gens.push_back(Monomial{2 * i + 1, 2 * l - 2 * i + 1});
  return MonomialIdeal(2, gens);
}
inline MonomialIdeal free_q() { return pure_powers(2, 5); }
inline MonomialIdeal free_i() { return with(free_q(), {{2, 3}, {3, 2}}); }
inline MonomialIdeal ex1_q() { return pure_powers(2, 7); }
inline MonomialIdeal ex1_i() { return with(ex1_q(), {{1, 6}, {2, 5}, {4, 3}, {5, 2}}); }
inline MonomialIdeal ex2_q() { return pure_powers(2, 8); }
inline MonomialIdeal ex2_i() { return with(ex2_q(), {{2, 6}, {3, 5}, {5, 3}, {6, 2}}); }
inline MonomialIdeal ex3_q() { return pure_powers(2, 7); }
inline MonomialIdeal ex3_i() { return with(ex3_q(), {{1, 6}, {3, 4}, {4, 3}, {6, 1}}); }
inline MonomialIdeal dim3_q() { return pure_powers(3, 3); }
inline MonomialIdeal dim3_i() {
  return with(dim3_q(), {{2, 1, 0}, {1, 2, 0}, {0, 2, 1}, {0, 1, 2}, {2, 0, 1}, {1, 0, 2}});
}

}  // namespace testing
