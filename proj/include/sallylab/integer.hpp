#pragma once

#include <cstddef>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace sallylab {

/// Signed arbitrary-precision integer used for every length and coefficient.
using Integer = boost::multiprecision::cpp_int;

/// Binomial coefficient C(a, k) read as a polynomial in `a`, so negative `a`
/// is allowed. C(a, k) = 0 whenever k < 0.
Integer binomial(const Integer& a, long k);
inline Integer binomial(long long a, long k) { return binomial(Integer(a), k); }

/// Number of monomials of degree n in `vars` variables (the n-th graded piece
/// of a polynomial ring). Zero for n < 0; for vars == 0 it is [n == 0].
Integer graded_dim(std::size_t vars, long long n);

std::string to_decimal(const Integer& value);

}  // namespace sallylab
