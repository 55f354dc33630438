#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sallylab/ideal.hpp"
#include "sallylab/monomial.hpp"

namespace sallylab {

/// A pair (Q, I) with Q = (x_1^{a_1}, ..., x_d^{a_d}) and I = Q + (extra).
///
/// JSON form, variables positional (index 0 = x, 1 = y, ...):
///   {"dim": 2, "Q": [[7,0],[0,7]], "extra": [[1,6],[2,5]], "label": "..."}
/// Each exponent vector may also be written as a monomial string such as
/// "x^2*y^5" (or "x1^2*x2^5"). "extra" and "label" are optional.
struct IdealSpec {
  std::size_t dim = 0;
  std::vector<Monomial> q;
  std::vector<Monomial> extra;
  std::optional<std::string> label;

  MonomialIdeal q_ideal() const;
  MonomialIdeal ideal() const;

  friend bool operator==(const IdealSpec&, const IdealSpec&) = default;
};

/// Throws ParseError (malformed JSON or wrong field types, with the field
/// path or line/column) and ValidationError (negative exponents, dimension
/// mismatches, Q not d pure powers).
IdealSpec parse_spec(std::string_view text);
std::string render_spec(const IdealSpec& spec);

/// Parses "x^2*y^3", "x1*x3^4" or "1". Throws ParseError.
Monomial parse_monomial(std::string_view text, std::size_t dim);

}  // namespace sallylab
