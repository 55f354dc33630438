#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "sallylab/errors.hpp"
#include "sallylab/ideal.hpp"

using namespace sallylab;
using testing::ideal;

TEST_CASE("grlex order and rendering") {
  CHECK(grlex_less(Monomial{2, 0}, Monomial{1, 1}));
  CHECK(grlex_less(Monomial{1, 1}, Monomial{0, 2}));
  CHECK(grlex_less(Monomial{0, 5}, Monomial{3, 3}));
  CHECK(to_string(Monomial{2, 3}) == "x^2*y^3");
  CHECK(to_string(Monomial{0, 0}) == "1");
  CHECK(to_string(Monomial{1, 0, 0, 0, 4}) == "x1*x5^4");
  CHECK(to_string(ideal(2, {{0, 1}, {2, 0}})) == "(y, x^2)");
}

TEST_CASE("minimalize") {
  CHECK(ideal(2, {{2, 0}, {3, 0}, {0, 1}}).generators().size() == 2);
  CHECK(ideal(2, {{2, 0}, {3, 0}, {0, 1}}) == ideal(2, {{0, 1}, {2, 0}}));
  CHECK(MonomialIdeal(2, {}).is_zero());
  CHECK(ideal(2, {{1, 6}, {2, 5}, {2, 6}}) == ideal(2, {{1, 6}, {2, 5}}));
  CHECK(ideal(2, {{3, 1}, {0, 0}}).is_unit());
  CHECK_THROWS_AS(ideal(2, {{1, 2, 3}}), MixedDimension);
}

TEST_CASE("membership and containment") {
  CHECK(member(Monomial{3, 3}, ideal(2, {{2, 3}})));
  CHECK_FALSE(member(Monomial{1, 2}, ideal(2, {{2, 0}, {0, 3}})));
  CHECK(member(Monomial{1, 6}, testing::ex1_i()));
  CHECK(contains(max_ideal(2), ideal(2, {{2, 0}, {1, 1}})));
  CHECK_FALSE(contains(ideal(2, {{2, 0}}), ideal(2, {{1, 0}})));
  const auto q = testing::free_q(), i = testing::free_i();
  CHECK(equals(power(i, 3), product(q, power(i, 2))));
}

TEST_CASE("products and powers") {
  CHECK(product(ideal(2, {{1, 0}}), ideal(2, {{0, 1}})) == ideal(2, {{1, 1}}));
  CHECK(power(ideal(2, {{2, 0}, {0, 2}}), 2) == ideal(2, {{4, 0}, {2, 2}, {0, 4}}));
  CHECK(power(testing::family_i(1), 2) == power(max_ideal(2), 8));
  CHECK(power(ideal(2, {{1, 2}}), 0).is_unit());
  const auto ps = powers(testing::ex1_i(), 4);
  REQUIRE(ps.size() == 5);
  for (std::size_t k = 0; k < ps.size(); ++k) CHECK(ps[k] == power(testing::ex1_i(), k));
  CHECK_THROWS_AS(Monomial({0xFFFFFFF0u, 0}) * Monomial({0x20u, 0}), ArithmeticOverflow);
}

TEST_CASE("maximal ideal") {
  CHECK(max_ideal(1) == ideal(1, {{1}}));
  CHECK(max_ideal(2) == ideal(2, {{1, 0}, {0, 1}}));
  CHECK(max_ideal(3).size() == 3);
}

TEST_CASE("colon") {
  CHECK(colon(ideal(2, {{2, 1}}), ideal(2, {{0, 1}})) == ideal(2, {{2, 0}}));
  const auto i = testing::ex1_i();
  CHECK(colon(i, MonomialIdeal::unit(2)) == i);
  const auto lhs = ideal(2, {{3, 0}, {0, 3}, {2, 2}});
  const auto expected = ideal(2, {{3, 0}, {2, 1}, {1, 2}, {0, 3}});
  CHECK(oracle::colon(lhs, max_ideal(2)) == expected);
  CHECK(colon(lhs, max_ideal(2)) == expected);
  CHECK_THROWS_AS(colon(i, MonomialIdeal::zero(2)), ZeroDivisorIdeal);
}

TEST_CASE("colength") {
  CHECK(colength(ideal(2, {{5, 0}, {0, 5}})) == 25);
  CHECK(colength(testing::free_i()) == 17);
  CHECK(colength(testing::family_i(1)) == 11);
  CHECK(colength(MonomialIdeal::unit(3)) == 0);
  CHECK(colength(testing::dim3_q()) == 27);
  CHECK_THROWS_AS(colength(ideal(2, {{2, 0}, {1, 1}})), NotMPrimary);
  CHECK(quotient_length(product(testing::ex1_q(), testing::ex1_i()), power(testing::ex1_i(), 2)) == 3);
  const auto q3 = testing::ex3_q(), i3 = testing::ex3_i();
  CHECK(quotient_length(product(power(q3, 2), i3), power(i3, 3)) == 6);
  CHECK(quotient_length(i3, i3) == 0);
  CHECK_THROWS_AS(quotient_length(max_ideal(2), power(max_ideal(2), 2)), NotContained);
  CHECK(quotient_length(power(max_ideal(2), 2), max_ideal(2)) == 2);
}

TEST_CASE("pure power bounds") {
  CHECK(parameter_exponents(testing::ex1_q()) == std::vector<Exponent>{7, 7});
  CHECK_FALSE(parameter_exponents(testing::ex1_i()));
  CHECK(is_m_primary(testing::ex1_i()));
  CHECK_FALSE(is_m_primary(ideal(2, {{2, 0}, {1, 1}})));
}

TEST_CASE("property: ring laws, colon inversion and additivity on random ideals") {
  std::mt19937_64 rng(20261015);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t d = trial % 3 == 2 ? 3 : 2;
    const long box = d == 2 ? 7 : 4;
    const auto a = oracle::random_ideal(rng, d, box, 1 + trial % 4);
    const auto b = oracle::random_ideal(rng, d, box, 1 + trial % 3);
    const auto c = oracle::random_ideal(rng, d, box, 2);
    CAPTURE(to_string(a));
    CAPTURE(to_string(b));

    CHECK(sum(a, b) == sum(b, a));
    CHECK(product(a, b) == product(b, a));
    CHECK(product(a, product(b, c)) == product(product(a, b), c));
    CHECK(product(a, sum(b, c)) == sum(product(a, b), product(a, c)));
    CHECK(intersection(a, b) == intersection(b, a));
    CHECK(sum(a, intersection(a, b)) == a);
    CHECK(contains(a, product(a, b)));
    CHECK(contains(intersection(a, b), product(a, b)));
    CHECK(minimalize(d, std::vector<Monomial>(a.generators().begin(), a.generators().end())) == a);

    const auto ab = colon(a, b);
    CHECK(contains(a, product(ab, b)));
    CHECK(contains(ab, a));
    CHECK(contains(colon(product(a, b), b), a));

    CHECK(colength(intersection(a, b)) + colength(sum(a, b)) == colength(a) + colength(b));
    if (contains(a, b)) CHECK(quotient_length(b, a) == colength(b) - colength(a));
    CHECK(quotient_length(product(a, b), a) == colength(product(a, b)) - colength(a));
  }
}
