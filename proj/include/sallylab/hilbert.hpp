#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sallylab/ideal.hpp"
#include "sallylab/integer.hpp"

namespace sallylab {

/// H(n) = length(A / I^{n+1}) for n = 0..N.
struct HilbertFunctionTable {
  MonomialIdeal ideal;
  std::vector<Integer> values;

  std::size_t window() const noexcept { return values.size() - 1; }
};

/// Coefficients of the Hilbert polynomial in the binomial basis,
///   P(n) = sum_i (-1)^i e_i C(n+d-i, d-i),
/// and the least n from which P agrees with the tabulated function.
struct HilbertCoefficients {
  std::size_t dim;
  std::vector<Integer> e;
  std::size_t postulation;
};

/// 2d + 6: every instance we know of postulates by n = 1.
constexpr std::size_t default_window(std::size_t dim) noexcept { return 2 * dim + 6; }

/// Throws NotMPrimary.
HilbertFunctionTable hilbert_function(const MonomialIdeal& ideal, std::size_t window);
/// Same, reusing already computed powers I^0..I^{N+1}.
HilbertFunctionTable hilbert_function(std::span<const MonomialIdeal> powers_from_zero);

/// Fits the top d+1 values with backward differences (exact, integral) and
/// requires the fit to reproduce one more value. Throws InsufficientWindow.
HilbertCoefficients binomial_fit(std::span<const Integer> values, std::size_t dim);
inline HilbertCoefficients binomial_fit(const HilbertFunctionTable& table, std::size_t dim) {
  return binomial_fit(table.values, dim);
}

Integer eval_binomial_poly(std::span<const Integer> e, std::size_t dim, long long n);

/// e_0(I) == length(A/Q) for a parameter reduction Q. Throws NotAReduction
/// or NotParameterIdeal.
bool multiplicity_crosscheck(const MonomialIdeal& ideal, const MonomialIdeal& q,
                             std::size_t window);

}  // namespace sallylab
