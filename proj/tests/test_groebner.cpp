#include <doctest.h>

#include <random>

#include "hilbstrata/groebner.hpp"
#include "hilbstrata/parse.hpp"
#include "hilbstrata/stratum.hpp"
#include "test_util.hpp"

using namespace hilbstrata;

namespace {

XPolynomial xy_minus_c_y2(const Rational& c) {
  XPolynomial f = XPolynomial::monomial(Exponent({1, 1}));
  f.add_term(Exponent({0, 2}), -c);
  return f;
}

// Normal form against a basis, for the post-hoc Buchberger criterion.
XPolynomial nf(XPolynomial f, const std::vector<XPolynomial>& basis,
               const MonomialOrder& order) {
  XPolynomial rem;
  while (!f.is_zero()) {
    Exponent lt = leading_exponent(f, order);
    Rational c = f.coefficient(lt);
    bool reduced = false;
    for (const auto& g : basis) {
      Exponent lg = leading_exponent(g, order);
      if (!lg.divides(lt)) continue;
      Rational lc = g.coefficient(lg);
      f = f - g.shifted(lg.quotient_of(lt), c / lc);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.add_term(lt, c);
      f.add_term(lt, -c);
    }
  }
  return rem;
}

}  // namespace

TEST_CASE("buchberger on a principal ideal") {
  MonomialOrder lex(OrderKind::Lex, 2);
  auto rb = buchberger({xy_minus_c_y2(Rational(1))}, lex, 4);
  REQUIRE(rb.polys.size() == 1);
  CHECK(rb.polys[0] == xy_minus_c_y2(Rational(1)));
}

TEST_CASE("monomial-led disjoint generators are already a basis") {
  MonomialOrder lex(OrderKind::Lex, 2);
  auto rb = buchberger({XPolynomial::monomial(Exponent({2, 0})),
                        XPolynomial::monomial(Exponent({1, 1}))},
                       lex, 5);
  REQUIRE(rb.polys.size() == 2);
  // sorted ascending under the order, so xy precedes x^2
  CHECK(rb.polys[0] == XPolynomial::monomial(Exponent({1, 1})));
  CHECK(rb.polys[1] == XPolynomial::monomial(Exponent({2, 0})));
}

TEST_CASE("initial_ideal basics") {
  MonomialOrder lex(OrderKind::Lex, 2);
  SUBCASE("monomial input is its own initial ideal") {
    auto leads = initial_ideal({XPolynomial::monomial(Exponent({2, 0}))}, lex, 4);
    CHECK(leads == std::vector<Exponent>{Exponent({2, 0})});
  }
  SUBCASE("xy - 3y^2 leads with xy") {
    auto leads = initial_ideal({xy_minus_c_y2(Rational(3))}, lex, 4);
    CHECK(leads == std::vector<Exponent>{Exponent({1, 1})});
  }
  SUBCASE("random specializations of the <xy> family") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 10; ++i) {
      Rational t = testutil::random_rational(rng);
      auto leads = initial_ideal({xy_minus_c_y2(t)}, lex, 4);
      CHECK(leads == std::vector<Exponent>{Exponent({1, 1})});
    }
  }
}

TEST_CASE("buchberger criterion and reducedness, post hoc") {
  // a non-trivial homogeneous ideal in 3 variables
  MonomialOrder ord(OrderKind::DegRevLex, 3);
  XPolynomial f1 = XPolynomial::monomial(Exponent({2, 0, 0}));
  f1.add_term(Exponent({0, 1, 1}), Rational(-1));
  XPolynomial f2 = XPolynomial::monomial(Exponent({1, 1, 0}));
  f2.add_term(Exponent({0, 0, 2}), Rational(-1));
  auto rb = buchberger({f1, f2}, ord, 8);

  for (size_t i = 0; i < rb.polys.size(); ++i)
    for (size_t j = i + 1; j < rb.polys.size(); ++j) {
      Exponent li = leading_exponent(rb.polys[i], ord);
      Exponent lj = leading_exponent(rb.polys[j], ord);
      Exponent l = li.lcm(lj);
      if (l.degree() > 8) continue;
      XPolynomial s = rb.polys[i].shifted(li.quotient_of(l), Rational(1)) -
                      rb.polys[j].shifted(lj.quotient_of(l), Rational(1));
      CHECK(nf(s, rb.polys, ord).is_zero());
    }

  // reducedness: no non-leading monomial divisible by another lead
  for (size_t i = 0; i < rb.polys.size(); ++i) {
    Exponent li = leading_exponent(rb.polys[i], ord);
    CHECK(rb.polys[i].coefficient(li) == 1);
    for (const auto& [e, c] : rb.polys[i].terms()) {
      if (e == li) continue;
      for (size_t j = 0; j < rb.polys.size(); ++j)
        CHECK_FALSE(leading_exponent(rb.polys[j], ord).divides(e));
    }
  }
}

TEST_CASE("rejects inhomogeneous input") {
  MonomialOrder lex(OrderKind::Lex, 2);
  XPolynomial f = XPolynomial::monomial(Exponent({1, 0}));
  f.add_term(Exponent({0, 0}), Rational(1));
  CHECK_THROWS(buchberger({f}, lex, 4));
}

TEST_CASE("fixed-point sanity: specialize at zero recovers J") {
  HilbertPolynomial P = macaulay_decomposition(parse_hilbert_polynomial("2t+1"));
  ChartCounts c = chart_counts(P, 3);
  MonomialOrder order(OrderKind::DegRevLex, 4);
  WeightVector omega = WeightVector::realize(order, 3, static_cast<int>(c.r));
  for (const auto& J : enumerate_M(P, 3)) {
    MarkedFamily fam = build_family(J, order, omega);
    std::vector<Rational> zero(fam.variables.size(), Rational(0));
    auto leads = initial_ideal(specialize(fam, zero), order,
                               static_cast<int>(c.r) + 3);
    CHECK(leads == J.corners);
  }
}
