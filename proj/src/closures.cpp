#include "sallylab/closures.hpp"

#include <algorithm>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "sallylab/errors.hpp"

namespace sallylab {

namespace {

using Rational = boost::multiprecision::cpp_rational;

// max sum(lambda) s.t. A lambda <= b, lambda >= 0, with A >= 0 and b > 0.
// Returns true as soon as the objective reaches 1.
bool objective_reaches_one(const std::vector<std::vector<Exponent>>& columns,
                           const std::vector<Exponent>& rhs) {
  const std::size_t rows = rhs.size();
  const std::size_t structural = columns.size();
  const std::size_t width = structural + rows;

  std::vector<std::vector<Rational>> tab(rows, std::vector<Rational>(width + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t j = 0; j < structural; ++j) tab[r][j] = columns[j][r];
    tab[r][structural + r] = 1;
    tab[r][width] = rhs[r];
  }
  std::vector<Rational> cost(width, 0);
  for (std::size_t j = 0; j < structural; ++j) cost[j] = 1;
  Rational value = 0;
  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) basis[r] = structural + r;

  while (value < 1) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < width; ++j)
      if (cost[j] > 0) {
        enter = j;
        break;
      }
    if (enter == width) return false;

    std::size_t leave = rows;
    Rational best_ratio;
    for (std::size_t r = 0; r < rows; ++r) {
      if (tab[r][enter] <= 0) continue;
      Rational ratio = tab[r][width] / tab[r][enter];
      if (leave == rows || ratio < best_ratio ||
          (ratio == best_ratio && basis[r] < basis[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    if (leave == rows) return true;  // unbounded objective

    const Rational pivot = tab[leave][enter];
    for (auto& x : tab[leave]) x /= pivot;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == leave || tab[r][enter] == 0) continue;
      const Rational factor = tab[r][enter];
      for (std::size_t j = 0; j <= width; ++j) tab[r][j] -= factor * tab[leave][j];
    }
    const Rational factor = cost[enter];
    for (std::size_t j = 0; j < width; ++j) cost[j] -= factor * tab[leave][j];
    value += factor * tab[leave][width];
    basis[leave] = enter;
  }
  return true;
}

}  // namespace

NewtonPolyhedron::NewtonPolyhedron(const MonomialIdeal& ideal)
    : dim_(ideal.dim()), vertices_(ideal.generators().begin(), ideal.generators().end()) {}

bool NewtonPolyhedron::contains(std::span<const Exponent> point) const {
  check_same_dim(dim_, point.size(), "newton_member");
  if (vertices_.empty()) return false;

  // Generators dividing the point settle membership; generators that are
  // positive on a coordinate where the point is zero can only enter with
  // weight zero and are dropped, along with rows that become empty.
  std::vector<const Monomial*> usable;
  for (const auto& g : vertices_) {
    bool divides = true;
    bool blocked = false;
    for (std::size_t i = 0; i < dim_; ++i) {
      if (g[i] > point[i]) divides = false;
      if (g[i] > 0 && point[i] == 0) blocked = true;
    }
    if (divides) return true;
    if (!blocked) usable.push_back(&g);
  }
  if (usable.empty()) return false;

  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (point[i] == 0) continue;
    if (std::any_of(usable.begin(), usable.end(), [&](const Monomial* g) { return (*g)[i] > 0; }))
      rows.push_back(i);
  }
  std::vector<std::vector<Exponent>> columns;
  columns.reserve(usable.size());
  for (const Monomial* g : usable) {
    std::vector<Exponent> col;
    col.reserve(rows.size());
    for (std::size_t i : rows) col.push_back((*g)[i]);
    columns.push_back(std::move(col));
  }
  std::vector<Exponent> rhs;
  rhs.reserve(rows.size());
  for (std::size_t i : rows) rhs.push_back(point[i]);
  return objective_reaches_one(columns, rhs);
}

bool newton_member(std::span<const Exponent> point, const MonomialIdeal& ideal) {
  return NewtonPolyhedron(ideal).contains(point);
}

MonomialIdeal integral_closure(const MonomialIdeal& ideal) {
  const auto bounds = pure_power_bounds(ideal);
  if (!bounds) throw NotMPrimary("integral closure of a non m-primary ideal: " + to_string(ideal));
  if (ideal.is_unit()) return ideal;

  const NewtonPolyhedron np(ideal);
  const std::size_t d = ideal.dim();
  const std::size_t last = d - 1;
  const auto& box = *bounds;

  std::vector<Monomial> gens(ideal.generators().begin(), ideal.generators().end());
  std::vector<Exponent> point(d, 0);
  while (true) {
    // Lowest point of this column inside the polyhedron; membership is
    // monotone along the column, so bisect below the column's height in I.
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
    Exponent lo = 0;
    Exponent hi = height;  // point with last = hi is known to be a member
    while (lo < hi) {
      const Exponent mid = lo + (hi - lo) / 2;
      point[last] = mid;
      if (np.contains(point))
        hi = mid;
      else
        lo = mid + 1;
    }
    if (lo < height) {
      point[last] = lo;
      gens.emplace_back(std::span<const Exponent>(point));
    }
    point[last] = 0;

    std::size_t i = 0;
    for (; i < last; ++i) {
      if (++point[i] < box[i]) break;
      point[i] = 0;
    }
    if (i == last) break;
  }
  return minimalize(d, std::move(gens));
}

bool is_integrally_closed(const MonomialIdeal& ideal) { return integral_closure(ideal) == ideal; }

bool is_reduction(const MonomialIdeal& q, const MonomialIdeal& ideal) {
  check_same_dim(q.dim(), ideal.dim(), "is_reduction");
  if (!is_m_primary(q)) throw NotMPrimary("reduction candidate is not m-primary: " + to_string(q));
  if (!is_m_primary(ideal)) throw NotMPrimary("ideal is not m-primary: " + to_string(ideal));
  if (!contains(ideal, q)) return false;
  const NewtonPolyhedron np(q);
  const auto gens = ideal.generators();
  return std::all_of(gens.begin(), gens.end(),
                     [&](const Monomial& g) { return np.contains(g.exponents()); });
}

std::size_t reduction_number(const MonomialIdeal& q, const MonomialIdeal& ideal, std::size_t r_max) {
  if (r_max < 1) throw std::invalid_argument("reduction_number: r_max must be at least 1");
  if (!is_reduction(q, ideal))
    throw NotAReduction(to_string(q) + " is not a reduction of " + to_string(ideal));
  MonomialIdeal current = MonomialIdeal::unit(ideal.dim());
  for (std::size_t r = 0; r <= r_max; ++r) {
    if (product(ideal, current) == product(q, current)) return r;
    current = product(current, ideal);
  }
  throw BudgetExceeded("no r <= " + std::to_string(r_max) + " with I^{r+1} = Q I^r");
}

RatliffRushClosure ratliff_rush(const MonomialIdeal& ideal, std::size_t n_max) {
  if (n_max < 2) throw std::invalid_argument("ratliff_rush: n_max must be at least 2");
  if (!is_m_primary(ideal)) throw NotMPrimary("Ratliff-Rush closure of a non m-primary ideal");
  MonomialIdeal lower = ideal;                 // I^n
  MonomialIdeal upper = product(ideal, ideal);  // I^{n+1}
  MonomialIdeal previous = colon(upper, lower);
  for (std::size_t n = 2; n <= n_max; ++n) {
    lower = std::move(upper);
    upper = product(lower, ideal);
    MonomialIdeal term = colon(upper, lower);
    if (term == previous) return {std::move(previous), n - 1, true};
    previous = std::move(term);
  }
  throw BudgetExceeded("Ratliff-Rush chain did not repeat by n = " + std::to_string(n_max));
}

}  // namespace sallylab
