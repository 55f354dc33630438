#include "sallylab/integer.hpp"

namespace sallylab {

Integer binomial(const Integer& a, long k) {
  if (k < 0) return 0;
  Integer num = 1;
  Integer den = 1;
  for (long i = 0; i < k; ++i) {
    num *= a - i;
    den *= i + 1;
  }
  return num / den;
}

Integer graded_dim(std::size_t vars, long long n) {
  if (n < 0) return 0;
  if (vars == 0) return n == 0 ? 1 : 0;
  return binomial(Integer(n) + static_cast<long long>(vars) - 1,
                  static_cast<long>(vars) - 1);
}

std::string to_decimal(const Integer& value) { return value.str(); }

}  // namespace sallylab
