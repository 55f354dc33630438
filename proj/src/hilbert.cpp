#include "sallylab/hilbert.hpp"

#include "sallylab/closures.hpp"
#include "sallylab/errors.hpp"

namespace sallylab {

HilbertFunctionTable hilbert_function(const MonomialIdeal& ideal, std::size_t window) {
  const auto ladder = powers(ideal, window + 1);
  return hilbert_function(ladder);
}

HilbertFunctionTable hilbert_function(std::span<const MonomialIdeal> powers_from_zero) {
  if (powers_from_zero.size() < 2)
    throw std::invalid_argument("hilbert_function needs I^0 and at least I^1");
  HilbertFunctionTable table{powers_from_zero[1], {}};
  table.values.reserve(powers_from_zero.size() - 1);
  for (std::size_t n = 1; n < powers_from_zero.size(); ++n)
    table.values.push_back(colength(powers_from_zero[n]));
  return table;
}

Integer eval_binomial_poly(std::span<const Integer> e, std::size_t dim, long long n) {
  Integer out = 0;
  for (std::size_t i = 0; i <= dim && i < e.size(); ++i) {
    const long lower = static_cast<long>(dim - i);
    const Integer term = e[i] * binomial(Integer(n) + lower, lower);
    if (i % 2 == 0)
      out += term;
    else
      out -= term;
  }
  return out;
}

HilbertCoefficients binomial_fit(std::span<const Integer> values, std::size_t dim) {
  if (values.size() < dim + 2)
    throw InsufficientWindow("binomial_fit needs at least d+2 = " + std::to_string(dim + 2) +
                             " values, got " + std::to_string(values.size()));
  const long long top = static_cast<long long>(values.size()) - 1;

  // With c_k the coefficient of C(n+k, k), the backward difference maps
  // C(n+k, k) to C(n+k-1, k-1), so the d-th difference at the top is c_d.
  // Peel the coefficients off from the highest degree down.
  std::vector<Integer> residual(values.begin() + (top - static_cast<long long>(dim)),
                                values.end());
  std::vector<Integer> c(dim + 1);
  for (std::size_t k = dim + 1; k-- > 0;) {
    std::vector<Integer> diff = residual;
    for (std::size_t step = 0; step < k; ++step)
      for (std::size_t j = diff.size(); j-- > step + 1;) diff[j] -= diff[j - 1];
    c[k] = diff.back();
    for (std::size_t j = 0; j < residual.size(); ++j) {
      const long long n = top - static_cast<long long>(dim) + static_cast<long long>(j);
      residual[j] -= c[k] * binomial(Integer(n) + static_cast<long>(k), static_cast<long>(k));
    }
  }

  HilbertCoefficients out{dim, std::vector<Integer>(dim + 1), 0};
  for (std::size_t i = 0; i <= dim; ++i) {
    const Integer& ck = c[dim - i];
    out.e[i] = (i % 2 == 0) ? ck : Integer(-ck);
  }

  const long long check = top - static_cast<long long>(dim) - 1;
  if (eval_binomial_poly(out.e, dim, check) != values[static_cast<std::size_t>(check)])
    throw InsufficientWindow("Hilbert function is not yet polynomial on the top " +
                             std::to_string(dim + 2) + " values; enlarge the window");
  long long n = check;
  while (n > 0 && eval_binomial_poly(out.e, dim, n - 1) == values[static_cast<std::size_t>(n - 1)])
    --n;
  out.postulation = static_cast<std::size_t>(n);
  return out;
}

bool multiplicity_crosscheck(const MonomialIdeal& ideal, const MonomialIdeal& q,
                             std::size_t window) {
  if (!parameter_exponents(q)) throw NotParameterIdeal(to_string(q) + " is not d pure powers");
  if (!is_reduction(q, ideal))
    throw NotAReduction(to_string(q) + " is not a reduction of " + to_string(ideal));
  const auto fit = binomial_fit(hilbert_function(ideal, window), ideal.dim());
  return fit.e[0] == colength(q);
}

}  // namespace sallylab
