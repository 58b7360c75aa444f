#pragma once

#include <random>

#include "hilbstrata/tpoly.hpp"
#include "hilbstrata/xpoly.hpp"

namespace testutil {

using hilbstrata::Exponent;
using hilbstrata::Rational;
using hilbstrata::TPolynomial;
using hilbstrata::XPolynomial;

inline Rational random_rational(std::mt19937_64& rng, int lo = -9, int hi = 9) {
  std::uniform_int_distribution<int> num(lo, hi);
  std::uniform_int_distribution<int> den(1, 9);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline Exponent random_exponent(std::mt19937_64& rng, int nvars, int max_e = 3) {
  std::uniform_int_distribution<int> d(0, max_e);
  std::vector<int> e(static_cast<size_t>(nvars));
  for (auto& x : e) x = d(rng);
  return Exponent(std::move(e));
}

inline XPolynomial random_xpoly(std::mt19937_64& rng, int nvars,
                                int max_terms = 5) {
  std::uniform_int_distribution<int> nt(0, max_terms);
  XPolynomial p;
  int terms = nt(rng);
  for (int i = 0; i < terms; ++i)
    p.add_term(random_exponent(rng, nvars), random_rational(rng));
  return p;
}

inline TPolynomial random_tpoly(std::mt19937_64& rng, int nvars,
                                int max_terms = 5, int max_deg = 3) {
  std::uniform_int_distribution<int> nt(0, max_terms);
  std::uniform_int_distribution<int> nd(0, max_deg);
  std::uniform_int_distribution<int> var(0, nvars - 1);
  TPolynomial p;
  int terms = nt(rng);
  for (int i = 0; i < terms; ++i) {
    hilbstrata::TMonomial m;
    int deg = nd(rng);
    for (int j = 0; j < deg; ++j) m.push_back(var(rng));
    p.add_term(std::move(m), random_rational(rng));
  }
  return p;
}

}  // namespace testutil
