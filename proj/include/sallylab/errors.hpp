#pragma once

#include <stdexcept>
#include <string>

namespace sallylab {

/// Base of every error raised by the library. `kind()` is the stable
/// machine-readable name used in structured diagnostics.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define SALLYLAB_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                         \
   public:                                                            \
    explicit Name(const std::string& what) : Error(#Name, what) {}    \
  }

SALLYLAB_DEFINE_ERROR(MixedDimension);
SALLYLAB_DEFINE_ERROR(ZeroDivisorIdeal);
SALLYLAB_DEFINE_ERROR(NotMPrimary);
SALLYLAB_DEFINE_ERROR(NotContained);
SALLYLAB_DEFINE_ERROR(ArithmeticOverflow);
SALLYLAB_DEFINE_ERROR(BudgetExceeded);
SALLYLAB_DEFINE_ERROR(NotAReduction);
SALLYLAB_DEFINE_ERROR(NotParameterIdeal);
SALLYLAB_DEFINE_ERROR(InsufficientWindow);
SALLYLAB_DEFINE_ERROR(NegativeRank);
SALLYLAB_DEFINE_ERROR(RangeViolation);
SALLYLAB_DEFINE_ERROR(HypothesisViolated);
SALLYLAB_DEFINE_ERROR(ParseError);
SALLYLAB_DEFINE_ERROR(ValidationError);

#undef SALLYLAB_DEFINE_ERROR

}  // namespace sallylab
