#include "sallylab/sally.hpp"

#include <algorithm>

#include "sallylab/closures.hpp"
#include "sallylab/errors.hpp"

namespace sallylab {

namespace {

std::string str(const Integer& v) { return v.str(); }

HypothesisFlags hypotheses_from_ladder(const MonomialIdeal& ideal, const MonomialIdeal& q,
                                       const MonomialIdeal& i2, const MonomialIdeal& i3) {
  HypothesisFlags flags;
  flags.is_reduction = is_reduction(q, ideal);
  const MonomialIdeal qi = product(q, ideal);
  flags.i2_eq_qi = i2 == qi;
  flags.i3_eq_qi2 = i3 == product(q, i2);
  flags.mi2_in_qi = contains(qi, product(max_ideal(ideal.dim()), i2));
  flags.integrally_closed = is_integrally_closed(ideal);
  if (ideal.dim() == 2) {
    try {
      flags.ratliff_rush_closed = ratliff_rush(ideal).ideal == ideal;
    } catch (const BudgetExceeded&) {
      flags.ratliff_rush_closed.reset();
    }
  }
  return flags;
}

Integer eval_terms(const std::vector<BinomialTerm>& terms, long n) {
  Integer out = 0;
  for (const auto& t : terms) out += t.coeff * binomial(Integer(n) + t.offset, t.lower);
  return out;
}

std::vector<BinomialTerm> leading_terms(const Integer& e0, const Integer& e1, std::size_t dim) {
  const long d = static_cast<long>(dim);
  return {{e0, d, d}, {-e1, d - 1, d - 1}};
}

}  // namespace

HypothesisFlags check_hypotheses(const MonomialIdeal& ideal, const MonomialIdeal& q) {
  check_same_dim(ideal.dim(), q.dim(), "check_hypotheses");
  if (!is_m_primary(ideal)) throw NotMPrimary("ideal is not m-primary: " + to_string(ideal));
  if (!is_m_primary(q)) throw NotMPrimary("Q is not m-primary: " + to_string(q));
  const MonomialIdeal i2 = product(ideal, ideal);
  return hypotheses_from_ladder(ideal, q, i2, product(i2, ideal));
}

std::vector<Integer> sally_lengths(const MonomialIdeal& ideal, const MonomialIdeal& q,
                                   std::size_t window) {
  check_same_dim(ideal.dim(), q.dim(), "sally_lengths");
  if (!parameter_exponents(q)) throw NotParameterIdeal(to_string(q) + " is not d pure powers");
  if (!is_reduction(q, ideal))
    throw NotAReduction(to_string(q) + " is not a reduction of " + to_string(ideal));
  std::vector<Integer> s{0};
  MonomialIdeal ideal_power = ideal;  // I^n
  MonomialIdeal iq = ideal;           // I Q^n
  for (std::size_t n = 1; n <= window; ++n) {
    ideal_power = product(ideal_power, ideal);
    iq = product(iq, q);
    s.push_back(quotient_length(iq, ideal_power));
  }
  return s;
}

Integer sally_rank(const HilbertCoefficients& coeffs, const Integer& colength_i) {
  if (coeffs.e.size() < 2) throw HypothesisViolated("rank needs e_1 (dimension >= 1)");
  Integer rank = coeffs.e[1] - coeffs.e[0] + colength_i;
  if (rank < 0)
    throw NegativeRank("e_1 - e_0 + length(A/I) = " + str(rank) + " < 0 violates Northcott");
  return rank;
}

Integer m_invariant(const HilbertCoefficients& coeffs, const Integer& colength_i) {
  if (coeffs.dim < 2) throw HypothesisViolated("m is defined for d >= 2");
  const Integer rank = sally_rank(coeffs, colength_i);
  Integer m = colength_i - coeffs.e[0] + coeffs.e[1] - coeffs.e[2] - 1;
  if (m < -1 || m > rank - 1)
    throw RangeViolation("m = " + str(m) + " outside [-1, " + str(rank - 1) + "]");
  return m;
}

std::string to_string(SallyClass tag) {
  switch (tag) {
    case SallyClass::Zero: return "ZERO";
    case SallyClass::Free: return "FREE";
    case SallyClass::NearFree: return "NEAR_FREE";
    case SallyClass::S1Three: return "S1_3";
    case SallyClass::S1FourDimTwo: return "S1_4_D2";
    case SallyClass::Unclassified: return "UNCLASSIFIED";
  }
  return "?";
}

std::string to_string(const DepthPrediction& depth) {
  switch (depth.kind) {
    case DepthPrediction::Kind::Exact: return std::to_string(depth.value);
    case DepthPrediction::Kind::AtLeast: return ">= " + std::to_string(depth.value);
    case DepthPrediction::Kind::Unknown: return "unknown";
  }
  return "?";
}

Integer SallyPrediction::at(long n) const {
  Integer out = 0;
  for (const auto& t : terms) out += t.coeff * graded_dim(t.vars, n - t.shift);
  return out;
}

SallyPrediction resolution_series(const std::vector<std::vector<long>>& steps, std::size_t dim,
                                  std::string shape) {
  SallyPrediction out;
  out.shape = std::move(shape);
  for (std::size_t k = 0; k < steps.size(); ++k)
    for (long shift : steps[k]) out.terms.push_back({k % 2 == 0 ? 1 : -1, dim, shift});
  return out;
}

Integer sally_identity_bound(const Integer& e0, const Integer& colength_i, std::size_t dim,
                             long n) {
  const long d = static_cast<long>(dim);
  return e0 * binomial(Integer(n) + d, d) - (e0 - colength_i) * binomial(Integer(n) + d - 1, d - 1);
}

Classification classify(const SallyProfile& p) {
  const std::size_t dim = p.dim;
  const long d = static_cast<long>(dim);
  const auto& e = p.coefficients.e;
  Classification cls;

  if (p.flags.i2_eq_qi) {
    cls.tag = SallyClass::Zero;
    cls.depth = {DepthPrediction::Kind::Exact, d};
    cls.sally = SallyPrediction{{}, 0, "S = 0"};
    cls.hilbert = HilbertPrediction{HilbertPrediction::Route::Displayed,
                                    leading_terms(e[0], e[1], dim), 0};
    cls.expected_rank = 0;
    if (dim >= 2) cls.expected_e2 = 0;
    return cls;
  }
  if (dim < 2 || !p.flags.hypotheses())
    throw HypothesisViolated("classification needs d >= 2, I^3 = QI^2 and m I^2 inside QI");
  if (p.window < 2) throw InsufficientWindow("classification needs s_1 and s_2");

  const Integer m = m_invariant(p.coefficients, p.colength_i);
  const Integer& rank = p.rank;
  const Integer& s1 = p.s[1];
  const Integer& s2 = p.s[2];

  if (m == -1) {
    cls.tag = SallyClass::Free;
    cls.depth = {DepthPrediction::Kind::AtLeast, d - 1};
    cls.sally = SallyPrediction{{{rank, dim, 1}}, 0, "S = B(-1)^rank"};
    auto terms = leading_terms(e[0], e[1], dim);
    terms.push_back({rank, d - 2, d - 2});
    cls.hilbert = HilbertPrediction{HilbertPrediction::Route::Displayed, std::move(terms), 0};
    cls.expected_e2 = rank;
    return cls;
  }

  if (s1 == 3 && s2 < 3 * d) {
    cls.tag = SallyClass::S1Three;
    if (s2 == 3 * d - 1) {
      cls.subcase = 1;
      cls.depth = {DepthPrediction::Kind::Exact, d - 2};
      cls.sally = resolution_series({{1, 1, 1}, {2}}, dim, "0 -> B(-2) -> B(-1)^3 -> S -> 0");
      cls.expected_rank = 2;
      cls.expected_e2 = 1;
      if (d >= 3) {
        auto terms = leading_terms(e[0], e[1], dim);
        terms.push_back({1, d - 2, d - 2});
        terms.push_back({1, d - 3, d - 3});
        cls.hilbert = HilbertPrediction{HilbertPrediction::Route::Displayed, std::move(terms), 0};
      } else {
        cls.hilbert = HilbertPrediction{HilbertPrediction::Route::Resolution, {}, 0};
      }
    } else if (s2 == 3 * d - 3 && d >= 3) {
      cls.subcase = 2;
      cls.depth = {DepthPrediction::Kind::Exact, d - 3};
      cls.sally = resolution_series({{1, 1, 1}, {2, 2, 2}, {3}}, dim,
                                    "0 -> B(-3) -> B(-2)^3 -> B(-1)^3 -> S -> 0");
      cls.expected_rank = 1;
      cls.expected_e2 = 0;
      if (d >= 4) {
        auto terms = leading_terms(e[0], e[1], dim);
        terms.push_back({1, d - 4, d - 4});
        cls.hilbert = HilbertPrediction{HilbertPrediction::Route::Displayed, std::move(terms), 0};
      } else {
        cls.hilbert = HilbertPrediction{HilbertPrediction::Route::Resolution, {}, 0};
      }
    } else {
      throw RangeViolation("s_1 = 3 and s_2 = " + str(s2) + " < 3d, but s_2 is neither 3d-1" +
                           (d >= 3 ? " nor 3d-3" : " (nor 3d-3, excluded for d = 2)"));
    }
    return cls;
  }

  if (d == 2 && s1 == 4 && s2 < 8) {
    cls.tag = SallyClass::S1FourDimTwo;
    cls.depth = {DepthPrediction::Kind::Exact, 0};
    auto terms = leading_terms(e[0], e[1], dim);
    if (s2 == 7) {
      cls.subcase = 1;
      cls.sally = resolution_series({{1, 1, 1, 1}, {2}}, dim, "0 -> B(-2) -> B(-1)^4 -> S -> 0");
      cls.expected_rank = 3;
      cls.expected_e2 = 2;
      terms.push_back({2, 0, 0});
    } else if (s2 == 6) {
      cls.subcase = 2;
      cls.sally =
          resolution_series({{1, 1, 1, 1}, {2, 2}}, dim, "0 -> B(-2)^2 -> B(-1)^4 -> S -> 0");
      cls.expected_rank = 2;
      cls.expected_e2 = 0;
    } else {
      throw RangeViolation("d = 2, s_1 = 4 and s_2 = " + str(s2) + " < 8, but s_2 is not 6 or 7");
    }
    cls.hilbert = HilbertPrediction{HilbertPrediction::Route::Displayed, std::move(terms), 1};
    return cls;
  }

  if (m == 0) {
    const Integer c = s1 - rank + 1;
    if (c < 2 || c > d)
      throw RangeViolation("m = 0 but c = s_1 - rank + 1 = " + str(c) + " is outside [2, d]");
    const long cv = c.convert_to<long>();
    cls.tag = SallyClass::NearFree;
    cls.c = cv;
    cls.depth = {DepthPrediction::Kind::Exact, d - cv};
    cls.sally = SallyPrediction{{{rank - 1, dim, 1}, {1, dim, 0}, {-1, dim - cv, 0}},
                                0,
                                "0 -> B(-1)^(rank-1) -> S -> (X_1..X_c)B -> 0"};
    auto terms = leading_terms(e[0], e[1], dim);
    terms.push_back({rank - 1, d - 2, d - 2});
    if (cv < d) terms.push_back({1, d - cv - 1, d - cv - 1});
    cls.hilbert =
        HilbertPrediction{HilbertPrediction::Route::Displayed, std::move(terms), cv < d ? 0 : 1};
    cls.expected_e2 = rank - 1;
    return cls;
  }

  cls.tag = SallyClass::Unclassified;
  return cls;
}

SallyProfile compute_profile(const MonomialIdeal& ideal, const MonomialIdeal& q,
                             std::size_t window) {
  check_same_dim(ideal.dim(), q.dim(), "compute_profile");
  if (window < 2) throw InsufficientWindow("profiles need a window of at least 2");
  if (!parameter_exponents(q)) throw NotParameterIdeal(to_string(q) + " is not d pure powers");
  if (!is_m_primary(ideal)) throw NotMPrimary("ideal is not m-primary: " + to_string(ideal));
  if (!is_reduction(q, ideal))
    throw NotAReduction(to_string(q) + " is not a reduction of " + to_string(ideal));

  const std::size_t dim = ideal.dim();
  const auto ladder = powers(ideal, window + 1);
  SallyProfile p{dim,
                 ideal,
                 q,
                 window,
                 hilbert_function(ladder),
                 {},
                 {0},
                 0,
                 colength(q),
                 0,
                 std::nullopt,
                 hypotheses_from_ladder(ideal, q, ladder[2], ladder[3]),
                 std::nullopt};
  p.coefficients = binomial_fit(p.table, dim);
  p.colength_i = p.table.values[0];

  MonomialIdeal iq = ideal;
  for (std::size_t n = 1; n <= window; ++n) {
    iq = product(iq, q);
    p.s.push_back(colength(iq) - p.table.values[n]);
  }
  p.rank = sally_rank(p.coefficients, p.colength_i);
  if (dim >= 2) {
    const auto& e = p.coefficients.e;
    if (p.flags.hypotheses() && !p.flags.i2_eq_qi)
      p.m_inv = m_invariant(p.coefficients, p.colength_i);
    else
      p.m_inv = p.colength_i - e[0] + e[1] - e[2] - 1;
  }
  if (p.flags.i2_eq_qi || (dim >= 2 && p.flags.hypotheses())) p.classification = classify(p);
  return p;
}

bool InequalityReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const InequalityCheck& c) { return !c.applicable || c.holds; });
}

const InequalityCheck* InequalityReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

InequalityReport check_inequalities(const SallyProfile& p) {
  InequalityReport report;
  const auto& e = p.coefficients.e;
  const Integer& len = p.colength_i;
  const bool d2 = p.dim >= 2;
  auto add = [&](std::string name, bool applicable, bool holds, std::string detail) {
    report.checks.push_back({std::move(name), applicable, applicable ? holds : true,
                             std::move(detail)});
  };

  add("northcott", true, e[1] >= e[0] - len,
      "e1 = " + str(e[1]) + " >= e0 - len(A/I) = " + str(e[0] - len));
  add("narita", d2, d2 && e[2] >= 0, d2 ? "e2 = " + str(e[2]) + " >= 0" : "needs d >= 2");
  add("huneke_ooishi", true, (e[1] == e[0] - len) == p.flags.i2_eq_qi,
      std::string("e1 == e0 - len(A/I) is ") + (e[1] == e[0] - len ? "true" : "false") +
          ", I^2 == QI is " + (p.flags.i2_eq_qi ? "true" : "false"));

  bool identity = true;
  long first_bad = -1;
  for (std::size_t n = 0; n < p.table.values.size() && n < p.s.size(); ++n) {
    const long ln = static_cast<long>(n);
    if (p.table.values[n] != sally_identity_bound(e[0], len, p.dim, ln) - p.s[n]) {
      identity = false;
      first_bad = ln;
      break;
    }
  }
  add("sally_identity", true, identity,
      identity ? "H(n) = e0 C(n+d,d) - (e0 - len(A/I)) C(n+d-1,d-1) - s_n for all n in window"
               : "fails at n = " + std::to_string(first_bad));

  const bool hyp = d2 && p.flags.hypotheses();
  add("main_inequality", hyp, hyp && e[1] >= e[0] - len + e[2],
      hyp ? "e1 = " + str(e[1]) + " >= e0 - len(A/I) + e2 = " + str(e[0] - len + e[2])
            : "needs d >= 2, I^3 = QI^2, m I^2 in QI");

  const bool ranged = hyp && !p.flags.i2_eq_qi && p.m_inv.has_value();
  add("m_range", ranged, ranged && *p.m_inv >= -1 && *p.m_inv <= p.rank - 1,
      ranged ? "-1 <= m = " + str(*p.m_inv) + " <= rank - 1 = " + str(p.rank - 1)
             : "needs the hypotheses I^3 = QI^2 and mI^2 in QI and I^2 != QI");

  const bool ic = d2 && p.flags.integrally_closed;
  add("sally_itoh_reverse", ic, ic && e[2] >= e[1] - e[0] + len,
      ic ? "e2 = " + str(e[2]) + " >= e1 - e0 + len(A/I) = " + str(e[1] - e[0] + len)
         : "needs an integrally closed ideal, d >= 2");

  const bool closed_case =
      hyp && (p.flags.integrally_closed ||
                (p.dim == 2 && p.flags.ratliff_rush_closed.value_or(false)));
  add("closed_free_case", closed_case, closed_case && e[1] == e[0] - len + e[2],
      closed_case ? "e1 = " + str(e[1]) + " == e0 - len(A/I) + e2 = " + str(e[0] - len + e[2])
                  : "needs the hypotheses I^3 = QI^2 and mI^2 in QI and I integrally or Ratliff-Rush closed");
  return report;
}

bool ClosedFormReport::all_hold() const {
  auto ok = [](const PointCheck& c) { return c.ok(); };
  return std::all_of(hilbert.begin(), hilbert.end(), ok) &&
         std::all_of(sally.begin(), sally.end(), ok) &&
         std::all_of(relations.begin(), relations.end(),
                     [](const InequalityCheck& c) { return !c.applicable || c.holds; });
}

ClosedFormReport verify_closed_form(const Classification& cls, const SallyProfile& p) {
  ClosedFormReport report;
  const long top = static_cast<long>(p.window);
  if (cls.sally) {
    for (long n = std::max(0L, cls.sally->from); n <= top; ++n)
      report.sally.push_back({n, cls.sally->at(n), p.s[static_cast<std::size_t>(n)]});
  }
  if (cls.hilbert) {
    for (long n = std::max(0L, cls.hilbert->from); n <= top; ++n) {
      Integer predicted;
      if (cls.hilbert->route == HilbertPrediction::Route::Displayed)
        predicted = eval_terms(cls.hilbert->terms, n);
      else
        predicted = sally_identity_bound(p.coefficients.e[0], p.colength_i, p.dim, n) -
                    (cls.sally ? cls.sally->at(n) : Integer(0));
      report.hilbert.push_back({n, predicted, p.table.values[static_cast<std::size_t>(n)]});
    }
  }
  if (cls.expected_rank)
    report.relations.push_back({"rank", true, *cls.expected_rank == p.rank,
                                "predicted " + str(*cls.expected_rank) + ", computed " +
                                    str(p.rank)});
  if (cls.expected_e2 && p.coefficients.e.size() > 2)
    report.relations.push_back({"e2", true, *cls.expected_e2 == p.coefficients.e[2],
                                "predicted " + str(*cls.expected_e2) + ", computed " +
                                    str(p.coefficients.e[2])});
  return report;
}

}  // namespace sallylab
