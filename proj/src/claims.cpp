#include "sallylab/claims.hpp"

#include "sallylab/closures.hpp"
#include "sallylab/errors.hpp"

namespace sallylab {

std::string to_string(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::Pass: return "PASS";
    case ClaimStatus::Fail: return "FAIL";
    case ClaimStatus::Skip: return "SKIP";
  }
  return "?";
}

namespace {

using Ctx = ClaimContext;

std::string boolean(bool b) { return b ? "true" : "false"; }

std::string join(const std::vector<Integer>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + values[i].str();
  return out + "]";
}

Monomial mono(std::initializer_list<Exponent> e) { return Monomial(e); }

IdealSpec make_spec(std::string label, std::size_t dim, std::vector<Monomial> q,
                    std::vector<Monomial> extra) {
  return IdealSpec{dim, std::move(q), std::move(extra), std::move(label)};
}

std::vector<Monomial> pure_powers(std::size_t dim, Exponent a) {
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < dim; ++i) out.push_back(Monomial::variable(dim, i, a));
  return out;
}

std::vector<Integer> table_slice(const std::vector<Integer>& values, long from, long to) {
  std::vector<Integer> out;
  for (long n = from; n <= to; ++n) out.push_back(values.at(static_cast<std::size_t>(n)));
  return out;
}

template <typename F>
std::vector<Integer> sequence(long from, long to, F f) {
  std::vector<Integer> out;
  for (long n = from; n <= to; ++n) out.push_back(f(n));
  return out;
}

Claim constant(std::string id, std::string description, std::string provenance,
               std::string expected, std::function<std::string(const Ctx&)> computed) {
  return {std::move(id), std::move(description), std::move(provenance),
          [value = std::move(expected)](const Ctx&) { return value; }, std::move(computed)};
}

const Integer& e_at(const Ctx& c, std::size_t i) { return c.profile.coefficients.e.at(i); }
const Integer& len(const Ctx& c) { return c.profile.colength_i; }

std::string tag_of(const Ctx& c) {
  if (!c.profile.classification) return "none";
  const auto& cls = *c.profile.classification;
  std::string out = to_string(cls.tag);
  if (cls.subcase) out += cls.subcase == 1 ? " (i)" : " (ii)";
  return out;
}

std::string check_holds(const Ctx& c, const std::string& name) {
  const auto* check = c.inequalities.find(name);
  if (!check) return "missing";
  if (!check->applicable) return "not applicable";
  return boolean(check->holds);
}

// Claims shared by every fixture.
void add_common(std::vector<Claim>& claims, const std::string& p, long identity_to) {
  claims.push_back(constant(
      p + "/sally-identity",
      "H(n) = e0 C(n+d,d) - (e0 - len(A/I)) C(n+d-1,d-1) - s_n for 0 <= n <= " +
          std::to_string(identity_to),
      "identity", "true", [identity_to](const Ctx& c) {
        for (long n = 0; n <= identity_to; ++n) {
          const auto i = static_cast<std::size_t>(n);
          if (c.profile.table.values.at(i) !=
              sally_identity_bound(e_at(c, 0), len(c), c.profile.dim, n) - c.profile.s.at(i))
            return std::string("false at n = ") + std::to_string(n);
        }
        return std::string("true");
      }));
  claims.push_back(constant(p + "/northcott", "e1 >= e0 - len(A/I)", "identity", "true",
                            [](const Ctx& c) { return check_holds(c, "northcott"); }));
  claims.push_back(constant(p + "/main-inequality", "e1 >= e0 - len(A/I) + e2", "stated", "true",
                            [](const Ctx& c) { return check_holds(c, "main_inequality"); }));
  claims.push_back(constant(p + "/multiplicity", "e0(I) = len(A/Q)", "identity", "true",
                            [](const Ctx& c) { return boolean(e_at(c, 0) == c.profile.colength_q); }));
}

void add_hypotheses(std::vector<Claim>& claims, const std::string& p) {
  claims.push_back(constant(p + "/I3=QI2", "I^3 = QI^2", "stated", "true",
                            [](const Ctx& c) { return boolean(c.profile.flags.i3_eq_qi2); }));
  claims.push_back(constant(p + "/mI2-in-QI", "m I^2 is contained in QI", "stated", "true",
                            [](const Ctx& c) { return boolean(c.profile.flags.mi2_in_qi); }));
}

Claim sally_claim(const std::string& p, const std::string& what, long from, long to,
                  std::function<Integer(long)> formula, std::string provenance = "stated") {
  return {p + "/sally-lengths", "s_n = " + what + " for " + std::to_string(from) + " <= n <= " +
                                    std::to_string(to),
          std::move(provenance),
          [=](const Ctx&) { return join(sequence(from, to, formula)); },
          [=](const Ctx& c) { return join(table_slice(c.profile.s, from, to)); }};
}

Claim resolution_claim(const std::string& p, std::vector<std::vector<long>> steps,
                       std::string shape) {
  return {p + "/resolution", "Hilbert series of " + shape + " equals s_n on the window",
          "stated",
          [](const Ctx& c) { return join(table_slice(c.profile.s, 0, static_cast<long>(c.profile.window))); },
          [=](const Ctx& c) {
            const auto pred = resolution_series(steps, c.profile.dim, shape);
            return join(sequence(0, static_cast<long>(c.profile.window),
                                 [&](long n) { return pred.at(n); }));
          }};
}

Fixture family(long l) {
  const std::string p = "family-l" + std::to_string(l);
  const auto a = static_cast<Exponent>(2 * l + 2);
  std::vector<Monomial> extra;
  for (long i = 0; i <= l; ++i)
    extra.push_back(mono({static_cast<Exponent>(2 * i + 1), static_cast<Exponent>(2 * l - 2 * i + 1)}));
  Fixture fx{make_spec(p, 2, pure_powers(2, a), std::move(extra)), default_window(2), {}};
  auto& claims = fx.claims;
  const Integer e0 = 4 * (l + 1) * (l + 1);
  const Integer e1 = 2 * l * l + 3 * l + 1;

  add_hypotheses(claims, p);
  claims.push_back(constant(p + "/I2!=QI", "I^2 differs from QI", "stated", "true",
                            [](const Ctx& c) { return boolean(!c.profile.flags.i2_eq_qi); }));
  claims.push_back(constant(p + "/colength", "len(A/I) = 2l^2 + 6l + 3 by lattice count", "derived",
                            std::to_string(2 * l * l + 6 * l + 3),
                            [](const Ctx& c) { return len(c).str(); }));
  claims.push_back(constant(p + "/coefficients", "(e0, e1, e2) = (4(l+1)^2, 2l^2+3l+1, 0)", "stated",
                            join({e0, e1, 0}),
                            [](const Ctx& c) { return join(c.profile.coefficients.e); }));
  claims.push_back(constant(p + "/postulation", "the Hilbert polynomial takes over by n = 1",
                            "stated", "true", [](const Ctx& c) {
                              return boolean(c.profile.coefficients.postulation <= 1);
                            }));
  claims.push_back({p + "/hilbert-function",
                    "H(n) = 4(l+1)^2 C(n+2,2) - (2l^2+3l+1)(n+1) for 1 <= n <= 8", "stated",
                    [=](const Ctx&) {
                      return join(sequence(1, 8, [&](long n) {
                        return Integer(e0 * binomial(n + 2, 2) - e1 * (n + 1));
                      }));
                    },
                    [](const Ctx& c) { return join(table_slice(c.profile.table.values, 1, 8)); }});
  claims.push_back(constant(p + "/rank", "Sally module rank = l", "stated", std::to_string(l),
                            [](const Ctx& c) { return c.profile.rank.str(); }));
  claims.push_back(constant(p + "/m-invariant", "m = l - 1", "stated", std::to_string(l - 1),
                            [](const Ctx& c) { return c.profile.m_inv ? c.profile.m_inv->str() : "none"; }));
  claims.push_back(constant(p + "/s1", "len(I^2/QI) = 2l", "stated", std::to_string(2 * l),
                            [](const Ctx& c) { return c.profile.s.at(1).str(); }));
  claims.push_back(constant(
      p + "/powers-closed", "I^n is integrally closed and equals (x,y)^{2(l+1)n} for n = 2, 3",
      "stated", "true,true", [l](const Ctx& c) {
        std::string out;
        for (std::size_t n = 2; n <= 3; ++n) {
          const auto in = power(c.ideal, n);
          const bool ok = is_integrally_closed(in) &&
                          in == power(max_ideal(2), static_cast<std::size_t>(2 * (l + 1)) * n);
          out += (n == 2 ? "" : ",") + boolean(ok);
        }
        return out;
      }));
  claims.push_back(sally_claim(p, "l(n+1)", 1, 8, [l](long n) { return Integer(l * (n + 1)); },
                               "derived"));
  add_common(claims, p, 8);
  return fx;
}

Fixture free_rank_two() {
  const std::string p = "free-x5y5";
  Fixture fx{make_spec(p, 2, pure_powers(2, 5), {mono({2, 3}), mono({3, 2})}),
             default_window(2), {}};
  auto& claims = fx.claims;
  add_hypotheses(claims, p);
  claims.push_back(sally_claim(p, "2n", 1, 6, [](long n) { return Integer(2 * n); }));
  claims.push_back(constant(p + "/classification", "S is free: S = B(-1)^2", "stated", "FREE",
                            tag_of));
  claims.push_back(constant(p + "/rank", "rank 2", "stated", "2",
                            [](const Ctx& c) { return c.profile.rank.str(); }));
  claims.push_back(constant(p + "/colength", "len(A/I) = 17", "derived", "17",
                            [](const Ctx& c) { return len(c).str(); }));
  claims.push_back(constant(p + "/coefficients", "(e0, e1, e2) = (25, 10, 2)", "derived",
                            "[25,10,2]", [](const Ctx& c) { return join(c.profile.coefficients.e); }));
  claims.push_back(constant(p + "/m-invariant", "m = -1", "derived", "-1",
                            [](const Ctx& c) { return c.profile.m_inv ? c.profile.m_inv->str() : "none"; }));
  claims.push_back({p + "/hilbert-function", "H(n) = 25 C(n+2,2) - 10(n+1) + 2 for 0 <= n <= 8",
                    "derived",
                    [](const Ctx&) {
                      return join(sequence(0, 8, [](long n) {
                        return Integer(25 * binomial(n + 2, 2) - 10 * (n + 1) + 2);
                      }));
                    },
                    [](const Ctx& c) { return join(table_slice(c.profile.table.values, 0, 8)); }});
  claims.push_back(constant(p + "/reduction-number", "I^3 = QI^2 and I^2 != QI", "stated", "2",
                            [](const Ctx& c) { return std::to_string(reduction_number(c.q, c.ideal)); }));
  add_common(claims, p, 8);
  return fx;
}

Fixture s1_three() {
  const std::string p = "s1-3-q7";
  Fixture fx{make_spec(p, 2, pure_powers(2, 7),
                       {mono({1, 6}), mono({2, 5}), mono({4, 3}), mono({5, 2})}),
             default_window(2), {}};
  auto& claims = fx.claims;
  add_hypotheses(claims, p);
  claims.push_back(constant(p + "/s1", "len(I^2/QI) = 3", "stated", "3",
                            [](const Ctx& c) { return c.profile.s.at(1).str(); }));
  claims.push_back(constant(p + "/s2", "len(I^3/Q^2 I) = 5", "stated", "5",
                            [](const Ctx& c) { return c.profile.s.at(2).str(); }));
  claims.push_back(constant(p + "/classification", "s_1 = 3 case (i)", "stated", "S1_3 (i)", tag_of));
  claims.push_back(sally_claim(p, "2n+1", 1, 6, [](long n) { return Integer(2 * n + 1); }, "derived"));
  claims.push_back(resolution_claim(p, {{1, 1, 1}, {2}}, "0 -> B(-2) -> B(-1)^3 -> S -> 0"));
  claims.push_back({p + "/e1", "e1 = e0 - len(A/I) + 2", "stated",
                    [](const Ctx& c) { return Integer(e_at(c, 0) - len(c) + 2).str(); },
                    [](const Ctx& c) { return e_at(c, 1).str(); }});
  claims.push_back(constant(p + "/e2", "e2 = 1", "derived", "1",
                            [](const Ctx& c) { return e_at(c, 2).str(); }));
  claims.push_back(constant(p + "/m-invariant", "m = 0", "stated", "0",
                            [](const Ctx& c) { return c.profile.m_inv ? c.profile.m_inv->str() : "none"; }));
  add_common(claims, p, 8);
  return fx;
}

Fixture s1_four(bool first) {
  const std::string p = first ? "s1-4-q8" : "s1-4-q7";
  std::vector<Monomial> extra =
      first ? std::vector<Monomial>{mono({2, 6}), mono({3, 5}), mono({5, 3}), mono({6, 2})}
            : std::vector<Monomial>{mono({1, 6}), mono({3, 4}), mono({4, 3}), mono({6, 1})};
  Fixture fx{make_spec(p, 2, pure_powers(2, first ? 8 : 7), std::move(extra)), default_window(2),
             {}};
  auto& claims = fx.claims;
  const long s2 = first ? 7 : 6;
  const long shift = first ? 1 : 2;  // e1 = e0 - len(A/I) + e2 + shift
  add_hypotheses(claims, p);
  claims.push_back(constant(p + "/s1", "len(I^2/QI) = 4", "stated", "4",
                            [](const Ctx& c) { return c.profile.s.at(1).str(); }));
  claims.push_back(constant(p + "/s2", "len(I^3/Q^2 I) = " + std::to_string(s2), "stated",
                            std::to_string(s2), [](const Ctx& c) { return c.profile.s.at(2).str(); }));
  claims.push_back(constant(p + "/classification", std::string("d = 2, s_1 = 4 case ") + (first ? "(i)" : "(ii)"),
                            "stated", first ? "S1_4_D2 (i)" : "S1_4_D2 (ii)", tag_of));
  if (first) {
    claims.push_back(sally_claim(p, "3n+1", 1, 6, [](long n) { return Integer(3 * n + 1); }, "derived"));
    claims.push_back(resolution_claim(p, {{1, 1, 1, 1}, {2}}, "0 -> B(-2) -> B(-1)^4 -> S -> 0"));
  } else {
    claims.push_back(sally_claim(p, "2n+2", 1, 6, [](long n) { return Integer(2 * n + 2); }, "derived"));
    claims.push_back(resolution_claim(p, {{1, 1, 1, 1}, {2, 2}}, "0 -> B(-2)^2 -> B(-1)^4 -> S -> 0"));
  }
  const long constant_term = first ? 2 : 0;
  claims.push_back({p + "/hilbert-function",
                    "H(n) = e0 C(n+2,2) - e1 (n+1)" +
                        std::string(first ? " + 2" : "") + " for 1 <= n <= 8",
                    "stated",
                    [=](const Ctx& c) {
                      return join(sequence(1, 8, [&](long n) {
                        return Integer(e_at(c, 0) * binomial(n + 2, 2) - e_at(c, 1) * (n + 1) +
                                       constant_term);
                      }));
                    },
                    [](const Ctx& c) { return join(table_slice(c.profile.table.values, 1, 8)); }});
  claims.push_back({p + "/e2", "e2 = e1 - e0 + len(A/I) - " + std::to_string(shift), "stated",
                    [=](const Ctx& c) { return Integer(e_at(c, 1) - e_at(c, 0) + len(c) - shift).str(); },
                    [](const Ctx& c) { return e_at(c, 2).str(); }});
  claims.push_back({p + "/e1", "e1 = e0 - len(A/I) + " + std::to_string(first ? 3 : 2), "stated",
                    [=](const Ctx& c) { return Integer(e_at(c, 0) - len(c) + (first ? 3 : 2)).str(); },
                    [](const Ctx& c) { return e_at(c, 1).str(); }});
  add_common(claims, p, 8);
  return fx;
}

Fixture three_variables() {
  const std::string p = "dim3-xyz";
  Fixture fx{make_spec(p, 3, pure_powers(3, 3),
                       {mono({2, 1, 0}), mono({1, 2, 0}), mono({0, 2, 1}),
                        mono({0, 1, 2}), mono({2, 0, 1}), mono({1, 0, 2})}),
             default_window(3), {}};
  auto& claims = fx.claims;
  add_hypotheses(claims, p);
  claims.push_back(constant(p + "/s1", "len(I^2/QI) = 4", "stated", "4",
                            [](const Ctx& c) { return c.profile.s.at(1).str(); }));
  claims.push_back(constant(p + "/s2", "len(I^3/Q^2 I) = 9", "stated", "9",
                            [](const Ctx& c) { return c.profile.s.at(2).str(); }));
  claims.push_back(constant(p + "/outside-s1-cases",
                            "neither the s_1 = 3, s_2 < 3d nor the d = 2, s_1 = 4, s_2 < 8 conditions hold",
                            "stated", "true", [](const Ctx& c) {
                              const auto tag = c.profile.classification
                                                   ? c.profile.classification->tag
                                                   : SallyClass::Unclassified;
                              return boolean(tag != SallyClass::S1Three &&
                                             tag != SallyClass::S1FourDimTwo);
                            }));
  claims.push_back(sally_claim(p, "(n+1)^2", 1, 8, [](long n) { return Integer((n + 1) * (n + 1)); },
                               "derived"));
  claims.push_back(constant(p + "/e0", "e0 = len(A/Q) = 27", "derived", "27",
                            [](const Ctx& c) { return e_at(c, 0).str(); }));
  add_common(claims, p, 8);
  return fx;
}

}  // namespace

std::vector<Fixture> builtin_fixtures() {
  std::vector<Fixture> out;
  for (long l = 1; l <= 3; ++l) out.push_back(family(l));
  out.push_back(free_rank_two());
  out.push_back(s1_three());
  out.push_back(s1_four(true));
  out.push_back(s1_four(false));
  out.push_back(three_variables());
  return out;
}

std::vector<ClaimResult> run_claims(const std::vector<Fixture>& fixtures) {
  std::vector<ClaimResult> results;
  for (const auto& fx : fixtures) {
    std::optional<MonomialIdeal> q;
    std::optional<MonomialIdeal> ideal;
    std::optional<SallyProfile> profile;
    std::optional<InequalityReport> inequalities;
    std::optional<ClosedFormReport> closed;
    std::string failure;
    try {
      q = fx.spec.q_ideal();
      ideal = fx.spec.ideal();
      profile = compute_profile(*ideal, *q, fx.window);
      inequalities = check_inequalities(*profile);
      if (profile->classification) closed = verify_closed_form(*profile->classification, *profile);
    } catch (const Error& err) {
      failure = "error: " + err.kind() + ": " + err.what();
    }

    for (const auto& claim : fx.claims) {
      ClaimResult r{claim.id, claim.description, "", "", ClaimStatus::Fail, claim.provenance};
      if (!failure.empty()) {
        r.computed = failure;
        results.push_back(std::move(r));
        continue;
      }
      const ClaimContext ctx{fx.spec, *q, *ideal, *profile, *inequalities, closed};
      try {
        r.expected = claim.expected(ctx);
        r.computed = claim.computed(ctx);
        r.status = r.expected == r.computed ? ClaimStatus::Pass : ClaimStatus::Fail;
      } catch (const std::exception& err) {
        r.computed = std::string("error: ") + err.what();
      }
      results.push_back(std::move(r));
    }
  }
  return results;
}

}  // namespace sallylab
