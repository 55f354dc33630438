#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sallylab/ideal.hpp"

namespace sallylab {

/// conv(generator exponents) + the nonnegative orthant. Membership is decided
/// exactly: v belongs iff max { sum(lambda) : sum_j lambda_j g_j <= v,
/// lambda >= 0 } reaches 1, solved by a rational simplex with Bland's rule.
class NewtonPolyhedron {
 public:
  explicit NewtonPolyhedron(const MonomialIdeal& ideal);

  std::size_t dim() const noexcept { return dim_; }
  std::span<const Monomial> vertices() const noexcept { return vertices_; }
  bool contains(std::span<const Exponent> point) const;

 private:
  std::size_t dim_;
  std::vector<Monomial> vertices_;
};

bool newton_member(std::span<const Exponent> point, const MonomialIdeal& ideal);

/// Integral closure of an m-primary monomial ideal. Throws NotMPrimary.
MonomialIdeal integral_closure(const MonomialIdeal& ideal);
bool is_integrally_closed(const MonomialIdeal& ideal);

/// Q is a reduction of I iff Q is inside I and I lies in the Newton
/// polyhedron of Q. Both ideals must be m-primary.
bool is_reduction(const MonomialIdeal& q, const MonomialIdeal& ideal);

inline constexpr std::size_t kDefaultReductionBudget = 10;
/// Least r <= r_max with I^{r+1} = Q I^r. Throws NotAReduction or BudgetExceeded.
std::size_t reduction_number(const MonomialIdeal& q, const MonomialIdeal& ideal,
                             std::size_t r_max = kDefaultReductionBudget);

struct RatliffRushClosure {
  MonomialIdeal ideal;
  /// n at which I^{n+1} : I^n first repeated.
  std::size_t stable_at;
  /// Always true: a repeated chain term is not a proof of stabilization.
  bool heuristic = true;
};

inline constexpr std::size_t kDefaultRatliffRushBudget = 10;
/// Union of the chain I^{n+1} : I^n, stopped at the first repeated term.
/// Throws BudgetExceeded when nothing repeats by n_max.
RatliffRushClosure ratliff_rush(const MonomialIdeal& ideal,
                                std::size_t n_max = kDefaultRatliffRushBudget);

}  // namespace sallylab
