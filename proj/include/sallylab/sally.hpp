#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sallylab/hilbert.hpp"
#include "sallylab/ideal.hpp"
#include "sallylab/integer.hpp"

namespace sallylab {

struct HypothesisFlags {
  bool is_reduction = false;
  bool i2_eq_qi = false;    // I^2 = QI
  bool i3_eq_qi2 = false;   // I^3 = QI^2
  bool mi2_in_qi = false;   // m I^2 inside QI
  bool integrally_closed = false;
  /// Only evaluated for d = 2; heuristic (see ratliff_rush).
  std::optional<bool> ratliff_rush_closed;

  /// I^3 = QI^2 and m I^2 inside QI.
  bool hypotheses() const noexcept { return i3_eq_qi2 && mi2_in_qi; }
};

/// Throws NotMPrimary or MixedDimension.
HypothesisFlags check_hypotheses(const MonomialIdeal& ideal, const MonomialIdeal& q);

/// s_n = length(I^{n+1} / I Q^n) for n = 0..N, with s_0 = 0. Throws
/// NotParameterIdeal or NotAReduction.
std::vector<Integer> sally_lengths(const MonomialIdeal& ideal, const MonomialIdeal& q,
                                   std::size_t window);

/// Rank of the Sally module, e_1 - e_0 + length(A/I). Throws NegativeRank.
Integer sally_rank(const HilbertCoefficients& coeffs, const Integer& colength_i);

/// length(A/I) - e_0 + e_1 - e_2 - 1, checked against -1 <= m <= rank - 1.
/// Throws HypothesisViolated for d < 2 and RangeViolation outside the range.
Integer m_invariant(const HilbertCoefficients& coeffs, const Integer& colength_i);

enum class SallyClass { Zero, Free, NearFree, S1Three, S1FourDimTwo, Unclassified };
std::string to_string(SallyClass tag);

struct DepthPrediction {
  enum class Kind { Exact, AtLeast, Unknown };
  Kind kind = Kind::Unknown;
  long value = 0;
};
std::string to_string(const DepthPrediction& depth);

/// coeff * dim_n(B(-shift)) where B is a polynomial ring in `vars` variables.
struct GradedTerm {
  Integer coeff;
  std::size_t vars;
  long shift;
};

/// Predicted Sally lengths s_n, as an alternating sum of shifted polynomial
/// rings (a graded free resolution or a short exact sequence).
struct SallyPrediction {
  std::vector<GradedTerm> terms;
  long from = 0;
  std::string shape;

  Integer at(long n) const;
};

/// coeff * C(n + offset, lower), with C(., j) = 0 for j < 0.
struct BinomialTerm {
  Integer coeff;
  long offset;
  long lower;
};

struct HilbertPrediction {
  /// Displayed: `terms` as a closed form in n. Resolution: the Sally length
  /// identity fed with the predicted s_n.
  enum class Route { Displayed, Resolution };
  Route route = Route::Displayed;
  std::vector<BinomialTerm> terms;
  long from = 0;
};

struct Classification {
  SallyClass tag = SallyClass::Unclassified;
  /// 1 or 2 for the two-way cases, 0 otherwise.
  int subcase = 0;
  /// Number of generators of the ideal quotient in the m = 0 case.
  std::optional<long> c;
  DepthPrediction depth;
  std::optional<SallyPrediction> sally;
  std::optional<HilbertPrediction> hilbert;
  std::optional<Integer> expected_rank;
  std::optional<Integer> expected_e2;
};

struct SallyProfile {
  std::size_t dim;
  MonomialIdeal ideal;
  MonomialIdeal q;
  std::size_t window;
  HilbertFunctionTable table;
  HilbertCoefficients coefficients;
  std::vector<Integer> s;  // s[0] = 0
  Integer colength_i;
  Integer colength_q;
  Integer rank;
  /// Present for d >= 2.
  std::optional<Integer> m_inv;
  HypothesisFlags flags;
  /// Present when I^2 = QI or the hypotheses I^3 = QI^2 and mI^2 in QI hold.
  std::optional<Classification> classification;
};

/// Builds the full numerical profile. Throws NotParameterIdeal,
/// NotAReduction, InsufficientWindow, NegativeRank and RangeViolation
/// (m out of range, or a classification constraint broken).
SallyProfile compute_profile(const MonomialIdeal& ideal, const MonomialIdeal& q,
                             std::size_t window);

/// Throws HypothesisViolated unless I^2 = QI or (d >= 2, I^3 = QI^2 and
/// mI^2 in QI); RangeViolation for constraints the theory forbids.
Classification classify(const SallyProfile& profile);

struct InequalityCheck {
  std::string name;
  bool applicable = false;
  bool holds = true;
  std::string detail;
};

struct InequalityReport {
  std::vector<InequalityCheck> checks;
  bool all_hold() const;
  const InequalityCheck* find(const std::string& name) const;
};

/// Northcott, Narita, Huneke-Ooishi, the Sally length identity, the main
/// inequality and m-range when I^3 = QI^2 and mI^2 in QI, the reverse
/// Sally-Itoh inequality and the free-case equality for closed ideals.
InequalityReport check_inequalities(const SallyProfile& profile);

/// Right-hand side of the Sally length identity without the s_n term:
/// e_0 C(n+d, d) - (e_0 - length(A/I)) C(n+d-1, d-1).
Integer sally_identity_bound(const Integer& e0, const Integer& colength_i, std::size_t dim,
                             long n);

struct PointCheck {
  long n;
  Integer predicted;
  Integer computed;
  bool ok() const { return predicted == computed; }
};

struct ClosedFormReport {
  std::vector<PointCheck> hilbert;
  std::vector<PointCheck> sally;
  std::vector<InequalityCheck> relations;
  bool all_hold() const;
};

ClosedFormReport verify_closed_form(const Classification& cls, const SallyProfile& profile);

/// Hilbert function of a graded free resolution
///   ... -> (+) B(-b) -> (+) B(-a) -> S -> 0
/// over a polynomial ring B in `dim` variables; `steps[0]` lists the
/// generator shifts a, `steps[1]` the first syzygy shifts b, and so on.
SallyPrediction resolution_series(const std::vector<std::vector<long>>& steps, std::size_t dim,
                                  std::string shape);

}  // namespace sallylab
