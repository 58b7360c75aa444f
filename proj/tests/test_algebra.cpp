#include <doctest.h>

#include "hilbstrata/tpoly.hpp"
#include "hilbstrata/xpoly.hpp"
#include "test_util.hpp"

using namespace hilbstrata;

TEST_CASE("rational arithmetic is exact") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<long> den(1, 1000);
  for (int i = 0; i < 200; ++i) {
    long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
    Rational sum = Rational(a, b) + Rational(c, d);
    sum.canonicalize();
    Rational lhs = sum * b * d;
    lhs.canonicalize();
    CHECK(lhs == Rational(a * d + c * b));
  }
}

TEST_CASE("xpolynomial ring axioms on randomized inputs") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    XPolynomial f = testutil::random_xpoly(rng, 3);
    XPolynomial g = testutil::random_xpoly(rng, 3);
    XPolynomial h = testutil::random_xpoly(rng, 3);
    CHECK((f + g) + h == f + (g + h));
    CHECK(f * g == g * f);
    CHECK(f * (g + h) == f * g + f * h);
  }
}

TEST_CASE("xpolynomial stores no zero coefficients") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    XPolynomial f = testutil::random_xpoly(rng, 2);
    XPolynomial g = testutil::random_xpoly(rng, 2);
    XPolynomial diff = f - f;
    for (const auto& [e, c] : diff.terms()) CHECK(c != 0);
    CHECK(diff.is_zero());
    XPolynomial prod = f * g;
    for (const auto& [e, c] : prod.terms()) CHECK(c != 0);
  }
}

TEST_CASE("tpolynomial ring axioms on randomized inputs") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 100; ++i) {
    TPolynomial f = testutil::random_tpoly(rng, 4);
    TPolynomial g = testutil::random_tpoly(rng, 4);
    TPolynomial h = testutil::random_tpoly(rng, 4);
    CHECK((f + g) + h == f + (g + h));
    CHECK(f * g == g * f);
    CHECK(f * (g + h) == f * g + f * h);
  }
}

TEST_CASE("tpoly_substitute basics") {
  TPolynomial v = TPolynomial::variable(0);
  TPolynomial w = TPolynomial::variable(1);

  SUBCASE("substituting zero") {
    CHECK(v.substitute(0, TPolynomial()).is_zero());
  }
  SUBCASE("identity substitution") {
    TPolynomial f = v * v + v;
    CHECK(f.substitute(0, v) == f);
  }
  SUBCASE("expansion: 2vw - 3 with v := w + 1") {
    TPolynomial f = v * w * Rational(2) - TPolynomial::constant(Rational(3));
    TPolynomial g = w + TPolynomial::constant(Rational(1));
    // independent expand-and-collect: (w+1)*2w - 3 = 2w^2 + 2w - 3
    TPolynomial expected;
    expected.add_term({1, 1}, Rational(2));
    expected.add_term({1}, Rational(2));
    expected.add_term({}, Rational(-3));
    CHECK(f.substitute(0, g) == expected);
  }
}

TEST_CASE("tpoly_substitute removes every occurrence") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    TPolynomial f = testutil::random_tpoly(rng, 4);
    TPolynomial g = testutil::random_tpoly(rng, 3);  // g avoids var 3
    CHECK_FALSE(f.substitute(3, g).contains_variable(3));
  }
}

TEST_CASE("tpoly_linear_part") {
  TPolynomial v = TPolynomial::variable(0);
  TPolynomial w = TPolynomial::variable(1);

  CHECK(TPolynomial().linear_part().empty());

  TPolynomial f = v * Rational(3) + v * w;
  auto lp = f.linear_part();
  CHECK(lp.size() == 1);
  CHECK(lp.at(0) == Rational(3));

  TPolynomial g = v - w + w * w * Rational(5);
  auto lg = g.linear_part();
  CHECK(lg.size() == 2);
  CHECK(lg.at(0) == Rational(1));
  CHECK(lg.at(1) == Rational(-1));
}

TEST_CASE("tpoly_weighted_degree") {
  std::vector<long> wt{2, 3};
  TPolynomial v = TPolynomial::variable(0);
  TPolynomial w = TPolynomial::variable(1);

  CHECK(TPolynomial().weighted_degree(wt).kind == WeightedDegree::Zero);

  auto d = (v * w).weighted_degree(wt);
  CHECK(d.kind == WeightedDegree::Homogeneous);
  CHECK(d.degree == 5);

  CHECK((v + w).weighted_degree(wt).kind == WeightedDegree::Inhomogeneous);
}

TEST_CASE("normalization: equal polynomials share a representation") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 100; ++i) {
    TPolynomial f = testutil::random_tpoly(rng, 3);
    TPolynomial g = testutil::random_tpoly(rng, 3);
    TPolynomial lhs = (f + g) - g;
    CHECK(lhs == f);
    CHECK(lhs.terms() == f.terms());
  }
}
