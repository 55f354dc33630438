#include "sallylab/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <thread>

#include "sallylab/closures.hpp"
#include "sallylab/errors.hpp"

namespace sallylab {

std::uint64_t SplitMix64::mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next() noexcept {
  state_ += 0x9E3779B97F4A7C15ULL;
  return mix64(state_);
}

std::uint64_t SplitMix64::uniform(std::uint64_t lo, std::uint64_t hi) noexcept {
  const std::uint64_t span = hi - lo;
  if (span == std::numeric_limits<std::uint64_t>::max()) return next();
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return lo + x % range;
}

std::string to_string(SearchMode mode) {
  switch (mode) {
    case SearchMode::Hypotheses: return "hypotheses";
    case SearchMode::NoMCondition: return "no-m-condition";
    case SearchMode::All: return "all";
  }
  return "?";
}

std::string to_string(Sampler sampler) {
  return sampler == Sampler::Box ? "box" : "newton";
}

SearchMode parse_search_mode(const std::string& text) {
  if (text == "hypotheses") return SearchMode::Hypotheses;
  if (text == "no-m-condition" || text == "no_m_condition") return SearchMode::NoMCondition;
  if (text == "all") return SearchMode::All;
  throw std::invalid_argument("unknown search mode '" + text + "'");
}

Sampler parse_sampler(const std::string& text) {
  if (text == "box") return Sampler::Box;
  if (text == "newton") return Sampler::Newton;
  throw std::invalid_argument("unknown sampler '" + text + "'");
}

std::size_t SearchConfig::effective_window() const {
  return window.value_or(default_window(dim));
}

void SearchConfig::validate() const {
  if (dim < 1) throw std::invalid_argument("dim must be at least 1");
  if (box < 2) throw std::invalid_argument("box must be at least 2");
  if (extra_min > extra_max) throw std::invalid_argument("extra_min exceeds extra_max");
  if (effective_window() < 2) throw std::invalid_argument("window must be at least 2");
}

Instance random_instance(const SearchConfig& config, std::uint64_t index) {
  SplitMix64 rng(SplitMix64::mix64(config.seed + SplitMix64::mix64(index)));
  const std::size_t d = config.dim;

  std::vector<Exponent> a(d);
  for (auto& ai : a) ai = static_cast<Exponent>(rng.uniform(2, config.box));
  std::vector<Monomial> q_gens;
  for (std::size_t i = 0; i < d; ++i) q_gens.push_back(Monomial::variable(d, i, a[i]));

  // Newton test for Q = (x_i^{a_i}): sum_i e_i / a_i >= 1, cleared of denominators.
  Integer scale = 1;
  for (Exponent ai : a) scale *= ai;
  auto above_newton = [&](const std::vector<Exponent>& e) {
    Integer lhs = 0;
    for (std::size_t i = 0; i < d; ++i) lhs += Integer(e[i]) * (scale / a[i]);
    return lhs >= scale;
  };

  const auto extra = rng.uniform(config.extra_min, config.extra_max);
  std::vector<Monomial> gens = q_gens;
  std::vector<Exponent> e(d);
  for (std::uint64_t k = 0; k < extra; ++k) {
    while (true) {
      for (std::size_t i = 0; i < d; ++i) e[i] = static_cast<Exponent>(rng.uniform(0, a[i] - 1));
      if (std::all_of(e.begin(), e.end(), [](Exponent x) { return x == 0; })) continue;
      if (config.sampler == Sampler::Newton && !above_newton(e)) continue;
      break;
    }
    gens.emplace_back(std::span<const Exponent>(e));
  }
  return {MonomialIdeal(d, std::move(q_gens)), MonomialIdeal(d, std::move(gens))};
}

bool SearchReport::has_guaranteed_violation() const {
  return std::any_of(violations.begin(), violations.end(),
                     [](const Violation& v) { return v.guaranteed; });
}

unsigned worker_count() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("SALLYLAB_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && cap > 0) return static_cast<unsigned>(cap);
  }
  return hw;
}

namespace {

struct Outcome {
  std::optional<std::string> skip;
  std::optional<std::string> tag;
  std::optional<HistogramKey> key;
  std::vector<std::pair<std::string, bool>> checks;  // name, held
  std::vector<Violation> violations;
};

std::string summary(const HilbertCoefficients& c, const Integer& len) {
  std::string out = "e = (";
  for (std::size_t i = 0; i < c.e.size(); ++i) out += (i ? ", " : "") + c.e[i].str();
  return out + "), len(A/I) = " + len.str();
}

void record(Outcome& out, const Instance& inst, std::uint64_t index, const InequalityCheck& check,
            bool guaranteed, const std::string& context) {
  if (!check.applicable) return;
  out.checks.emplace_back(check.name, check.holds);
  if (!check.holds)
    out.violations.push_back(
        {index, check.name, guaranteed, check.detail + "; " + context, inst.q, inst.ideal});
}

Outcome run_instance(const SearchConfig& config, std::uint64_t index) {
  Outcome out;
  const Instance inst = random_instance(config, index);
  const std::size_t window = config.effective_window();
  const std::size_t d = config.dim;

  if (!is_reduction(inst.q, inst.ideal)) {
    if (config.mode != SearchMode::All) {
      out.skip = "not_reduction";
      return out;
    }
    // Northcott and Narita do not depend on the reduction.
    HilbertCoefficients coeffs;
    try {
      coeffs = binomial_fit(hilbert_function(inst.ideal, window), d);
    } catch (const InsufficientWindow&) {
      out.skip = "window_unstable";
      return out;
    }
    const Integer len = colength(inst.ideal);
    const std::string ctx = summary(coeffs, len) + ", Q not a reduction";
    record(out, inst, index,
           {"northcott", true, coeffs.e[1] >= coeffs.e[0] - len, "e1 >= e0 - len(A/I)"}, true, ctx);
    if (d >= 2)
      record(out, inst, index, {"narita", true, coeffs.e[2] >= 0, "e2 >= 0"}, true, ctx);
    return out;
  }

  std::optional<SallyProfile> computed;
  try {
    computed = compute_profile(inst.ideal, inst.q, window);
  } catch (const InsufficientWindow&) {
    out.skip = "window_unstable";
    return out;
  } catch (const RangeViolation& err) {
    // Only raised when I^3 = QI^2 and mI^2 in QI, where the ranges are theorems.
    out.checks.emplace_back("classification_range", false);
    out.violations.push_back({index, "classification_range", true, err.what(), inst.q, inst.ideal});
    return out;
  } catch (const NegativeRank& err) {
    out.checks.emplace_back("northcott", false);
    out.violations.push_back({index, "northcott", true, err.what(), inst.q, inst.ideal});
    return out;
  }

  const SallyProfile& profile = *computed;
  const auto& f = profile.flags;
  switch (config.mode) {
    case SearchMode::Hypotheses:
      if (f.i2_eq_qi || !f.hypotheses() || d < 2) {
        out.skip = "hypotheses_not_met";
        return out;
      }
      break;
    case SearchMode::NoMCondition:
      if (!f.i3_eq_qi2 || f.mi2_in_qi || d < 2) {
        out.skip = "outside_mode";
        return out;
      }
      break;
    case SearchMode::All:
      break;
  }

  const auto report = check_inequalities(profile);
  const std::string ctx = summary(profile.coefficients, profile.colength_i) +
                          ", s1 = " + profile.s[1].str() + ", s2 = " + profile.s[2].str();
  const auto& e = profile.coefficients.e;
  if (config.mode == SearchMode::Hypotheses) {
    for (const auto& c : report.checks) record(out, inst, index, c, true, ctx);
  } else {
    for (const char* name : {"northcott", "narita", "sally_identity"})
      if (const auto* c = report.find(name)) record(out, inst, index, *c, true, ctx);
    if (config.mode == SearchMode::NoMCondition) {
      const bool holds = e[1] >= e[0] - profile.colength_i + e[2];
      record(out, inst, index,
             {"main_inequality_without_m_condition", true, holds,
              "e1 >= e0 - len(A/I) + e2 without m I^2 in QI"},
             false, ctx);
    }
  }

  if (profile.classification) {
    out.tag = to_string(profile.classification->tag);
    if (config.mode == SearchMode::Hypotheses) {
      const auto closed = verify_closed_form(*profile.classification, profile);
      record(out, inst, index,
             {"closed_form", true, closed.all_hold(), "predicted H(n), s_n and relations"}, true,
             ctx + ", tag " + *out.tag);
    }
  }
  if (profile.m_inv)
    out.key = HistogramKey{profile.rank, *profile.m_inv, profile.s[1], profile.s[2]};
  return out;
}

}  // namespace

SearchReport sweep(const SearchConfig& config, unsigned workers) {
  config.validate();
  if (workers == 0) workers = worker_count();
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(1, config.samples)));

  std::vector<Outcome> outcomes(config.samples);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < config.samples; i = next++) {
      try {
        outcomes[i] = run_instance(config, i);
      } catch (const Error& err) {
        outcomes[i] = Outcome{};
        outcomes[i].skip = "error:" + err.kind();
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  SearchReport report;
  report.config = config;
  report.generated = config.samples;
  for (auto& o : outcomes) {
    if (o.skip) {
      ++report.skipped[*o.skip];
      continue;
    }
    ++report.kept;
    if (o.tag) ++report.tags[*o.tag];
    if (o.key) ++report.histogram[*o.key];
    for (const auto& [name, held] : o.checks) {
      auto& tally = report.checks[name];
      ++tally.evaluated;
      if (!held) ++tally.failed;
    }
    for (auto& v : o.violations) report.violations.push_back(std::move(v));
  }
  return report;
}

}  // namespace sallylab
