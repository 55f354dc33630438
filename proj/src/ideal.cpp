#include "sallylab/ideal.hpp"

#include <algorithm>

#include "sallylab/errors.hpp"

namespace sallylab {

MonomialIdeal::MonomialIdeal(std::size_t dim, std::vector<Monomial> minimal, int)
    : dim_(dim), gens_(std::move(minimal)) {}

MonomialIdeal::MonomialIdeal(std::size_t dim, std::vector<Monomial> gens)
    : MonomialIdeal(minimalize(dim, std::move(gens))) {}

MonomialIdeal MonomialIdeal::zero(std::size_t dim) {
  if (dim == 0) throw MixedDimension("ideals need at least one variable");
  return MonomialIdeal(dim, {}, 0);
}

MonomialIdeal MonomialIdeal::unit(std::size_t dim) {
  if (dim == 0) throw MixedDimension("ideals need at least one variable");
  return MonomialIdeal(dim, {Monomial::one(dim)}, 0);
}

MonomialIdeal minimalize(std::size_t dim, std::vector<Monomial> gens) {
  if (dim == 0) throw MixedDimension("ideals need at least one variable");
  for (const auto& g : gens) check_same_dim(dim, g.dim(), "minimalize");
  std::sort(gens.begin(), gens.end(), grlex_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // A divisor never comes later in grlex order, so one forward pass suffices.
  std::vector<Monomial> kept;
  for (auto& g : gens) {
    const bool redundant =
        std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(g); });
    if (!redundant) kept.push_back(std::move(g));
  }
  return MonomialIdeal(dim, std::move(kept), 0);
}

MonomialIdeal max_ideal(std::size_t dim) {
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < dim; ++i) gens.push_back(Monomial::variable(dim, i));
  return MonomialIdeal(dim, std::move(gens));
}

bool member(const Monomial& m, const MonomialIdeal& ideal) {
  check_same_dim(m.dim(), ideal.dim(), "member");
  const auto gens = ideal.generators();
  return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(m); });
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_dim(a.dim(), b.dim(), "sum");
  std::vector<Monomial> gens(a.generators().begin(), a.generators().end());
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return minimalize(a.dim(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_dim(a.dim(), b.dim(), "product");
  std::vector<Monomial> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f * g);
  return minimalize(a.dim(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& ideal, std::size_t k) {
  MonomialIdeal out = MonomialIdeal::unit(ideal.dim());
  for (std::size_t i = 0; i < k; ++i) out = product(out, ideal);
  return out;
}

std::vector<MonomialIdeal> powers(const MonomialIdeal& ideal, std::size_t k) {
  std::vector<MonomialIdeal> out;
  out.reserve(k + 1);
  out.push_back(MonomialIdeal::unit(ideal.dim()));
  for (std::size_t i = 0; i < k; ++i) out.push_back(product(out.back(), ideal));
  return out;
}

MonomialIdeal intersection(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_dim(a.dim(), b.dim(), "intersection");
  std::vector<Monomial> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(lcm(f, g));
  return minimalize(a.dim(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& by) {
  check_same_dim(ideal.dim(), by.dim(), "colon");
  if (by.is_zero()) throw ZeroDivisorIdeal("colon by the zero ideal");
  std::optional<MonomialIdeal> out;
  for (const auto& g : by.generators()) {
    std::vector<Monomial> quotient;
    quotient.reserve(ideal.size());
    for (const auto& f : ideal.generators()) quotient.push_back(colon_quotient(f, g));
    MonomialIdeal part = minimalize(ideal.dim(), std::move(quotient));
    out = out ? intersection(*out, part) : std::move(part);
  }
  return *out;
}

bool contains(const MonomialIdeal& outer, const MonomialIdeal& inner) {
  check_same_dim(outer.dim(), inner.dim(), "contains");
  const auto gens = inner.generators();
  return std::all_of(gens.begin(), gens.end(),
                     [&](const Monomial& g) { return member(g, outer); });
}

bool equals(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_dim(a.dim(), b.dim(), "equals");
  return a == b;
}

std::optional<std::vector<Exponent>> pure_power_bounds(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) return std::vector<Exponent>(ideal.dim(), 0);
  std::vector<std::optional<Exponent>> best(ideal.dim());
  for (const auto& g : ideal.generators()) {
    if (auto var = g.pure_power_variable()) {
      auto& slot = best[*var];
      if (!slot || g[*var] < *slot) slot = g[*var];
    }
  }
  std::vector<Exponent> out;
  out.reserve(best.size());
  for (const auto& b : best) {
    if (!b) return std::nullopt;
    out.push_back(*b);
  }
  return out;
}

bool is_m_primary(const MonomialIdeal& ideal) { return pure_power_bounds(ideal).has_value(); }

std::optional<std::vector<Exponent>> parameter_exponents(const MonomialIdeal& ideal) {
  if (ideal.size() != ideal.dim() || ideal.is_unit()) return std::nullopt;
  auto bounds = pure_power_bounds(ideal);
  return bounds;
}

Integer colength(const MonomialIdeal& ideal) {
  const auto bounds = pure_power_bounds(ideal);
  if (!bounds) throw NotMPrimary("colength of an ideal that is not m-primary: " + to_string(ideal));
  const std::size_t d = ideal.dim();
  const std::size_t last = d - 1;
  const auto& box = *bounds;
  if (std::any_of(box.begin(), box.end(), [](Exponent b) { return b == 0; })) return 0;

  // Walk the columns over the first d-1 coordinates; each column of the
  // staircase is cut off at the smallest last exponent among the generators
  // dividing that column's base point.
  std::vector<Exponent> point(d, 0);
  std::uint64_t total = 0;
  while (true) {
    Exponent height = box[last];
    for (const auto& g : ideal.generators()) {
      bool below = true;
      for (std::size_t i = 0; i < last; ++i)
        if (g[i] > point[i]) {
          below = false;
          break;
        }
      if (below) height = std::min(height, g[last]);
    }
    if (__builtin_add_overflow(total, std::uint64_t{height}, &total))
      throw ArithmeticOverflow("colength exceeds 64 bits");

    std::size_t i = 0;
    for (; i < last; ++i) {
      if (++point[i] < box[i]) break;
      point[i] = 0;
    }
    if (i == last) break;
  }
  return Integer(total);
}

Integer quotient_length(const MonomialIdeal& inner, const MonomialIdeal& outer) {
  if (!contains(outer, inner))
    throw NotContained(to_string(inner) + " is not contained in " + to_string(outer));
  return colength(inner) - colength(outer);
}

std::string to_string(const MonomialIdeal& ideal) {
  std::string out = "(";
  bool first = true;
  for (const auto& g : ideal.generators()) {
    if (!first) out += ", ";
    out += to_string(g);
    first = false;
  }
  return out + ")";
}

}  // namespace sallylab
