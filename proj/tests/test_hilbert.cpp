#include <doctest.h>

#include <random>

#include "hilbstrata/hilbert.hpp"

using namespace hilbstrata;

TEST_CASE("parse_hilbert_polynomial") {
  CHECK(parse_hilbert_polynomial("2t+2").coeffs ==
        UniPoly{Rational(2), Rational(2)});
  CHECK(parse_hilbert_polynomial("2*t + 2").coeffs ==
        UniPoly{Rational(2), Rational(2)});
  CHECK(parse_hilbert_polynomial("5").coeffs == UniPoly{Rational(5)});
  CHECK(parse_hilbert_polynomial("t^2").coeffs ==
        UniPoly{Rational(0), Rational(0), Rational(1)});
  CHECK(parse_hilbert_polynomial("t^2 - t + 1").coeffs ==
        UniPoly{Rational(1), Rational(-1), Rational(1)});
  CHECK_THROWS_AS(parse_hilbert_polynomial(""), HilbertParseError);
  CHECK_THROWS_AS(parse_hilbert_polynomial("2x+1"), HilbertParseError);
  CHECK_THROWS_AS(parse_hilbert_polynomial("t^"), HilbertParseError);
}

TEST_CASE("macaulay_decomposition on the named instances") {
  auto dec = [](const std::string& s) {
    return macaulay_decomposition(parse_hilbert_polynomial(s));
  };
  SUBCASE("2t+2") {
    auto P = dec("2t+2");
    CHECK(P.macaulay == std::vector<long>{1, 1, 0});
    CHECK(P.gotzmann == 3);
  }
  SUBCASE("t+1") {
    auto P = dec("t+1");
    CHECK(P.macaulay == std::vector<long>{1});
    CHECK(P.gotzmann == 1);
  }
  SUBCASE("2t+1") {
    auto P = dec("2t+1");
    CHECK(P.macaulay == std::vector<long>{1, 1});
    CHECK(P.gotzmann == 2);
  }
  SUBCASE("constants: r = d for d points") {
    for (long d = 1; d <= 6; ++d) {
      auto P = dec(std::to_string(d));
      CHECK(P.gotzmann == d);
      CHECK(P.macaulay == std::vector<long>(static_cast<size_t>(d), 0));
    }
  }
  SUBCASE("inadmissible") {
    CHECK_THROWS_AS(dec("t^2"), InadmissibleHilbertPolynomial);
    CHECK_THROWS_AS(dec("-t"), InadmissibleHilbertPolynomial);
  }
}

TEST_CASE("macaulay identity round-trip on randomized admissible P") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> len(1, 6);
  std::uniform_int_distribution<int> first(0, 3);
  for (int trial = 0; trial < 50; ++trial) {
    // build P from a random weakly decreasing sequence, then re-decompose
    int r = len(rng);
    std::vector<long> a;
    long prev = first(rng);
    for (int i = 1; i <= r; ++i) {
      std::uniform_int_distribution<long> next(0, prev);
      prev = next(rng);
      a.push_back(prev);
    }
    UniPoly P;
    for (size_t i = 0; i < a.size(); ++i)
      P = uni_add(P, binomial_poly(a[i] - static_cast<long>(i + 1) + 1, a[i]));
    HilbertPolynomial H;
    H.coeffs = P;
    HilbertPolynomial D = macaulay_decomposition(H);
    CHECK(D.macaulay == a);
    for (size_t i = 1; i < D.macaulay.size(); ++i)
      CHECK(D.macaulay[i - 1] >= D.macaulay[i]);
    UniPoly sum;
    for (size_t i = 0; i < D.macaulay.size(); ++i)
      sum = uni_add(sum, binomial_poly(
                             D.macaulay[i] - static_cast<long>(i + 1) + 1,
                             D.macaulay[i]));
    CHECK(sum == P);
  }
}

TEST_CASE("decomposition is deterministic") {
  auto a = macaulay_decomposition(parse_hilbert_polynomial("3t+4"));
  auto b = macaulay_decomposition(parse_hilbert_polynomial("3t+4"));
  CHECK(a.macaulay == b.macaulay);
  CHECK(a.gotzmann == b.gotzmann);
}

TEST_CASE("chart_counts") {
  auto dec = [](const std::string& s) {
    return macaulay_decomposition(parse_hilbert_polynomial(s));
  };
  SUBCASE("P=2t+2, n=3") {
    ChartCounts c = chart_counts(dec("2t+2"), 3);
    CHECK(c.r == 3);
    CHECK(c.corners_target == 12);
    CHECK(c.expansion_target == 25);
    CHECK(c.delta_r_size == 8);
    CHECK(c.delta_r1_size == 10);
  }
  SUBCASE("P=2, n=1") {
    ChartCounts c = chart_counts(dec("2"), 1);
    CHECK(c.r == 2);
    CHECK(c.corners_target == 1);
    CHECK(c.expansion_target == 2);
  }
  SUBCASE("P=t+1, n=3") {
    ChartCounts c = chart_counts(dec("t+1"), 3);
    CHECK(c.r == 1);
    CHECK(c.corners_target == 2);
    CHECK(c.expansion_target == 7);
  }
  SUBCASE("invariant: corners_target + delta_r_size fills the slice") {
    for (auto [p, n] : std::vector<std::pair<std::string, int>>{
             {"2t+2", 3}, {"2t+1", 3}, {"t+1", 3}, {"3", 2}, {"5", 2}}) {
      ChartCounts c = chart_counts(dec(p), n);
      CHECK(c.corners_target + c.delta_r_size ==
            binomial(n + c.r, c.r).get_si());
    }
  }
  SUBCASE("inadmissible in P^n") {
    // a pair of skew lines needs n >= 3
    CHECK_THROWS_AS(chart_counts(dec("2t+2"), 1),
                    InadmissibleHilbertPolynomial);
  }
}
