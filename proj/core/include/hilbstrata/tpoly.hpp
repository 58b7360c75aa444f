#pragma once

#include <compare>
#include <map>
#include <vector>

#include "hilbstrata/exponent.hpp"
#include "hilbstrata/rational.hpp"

namespace hilbstrata {

// Coordinate T_{alpha,beta} of a stratum: alpha a corner, beta a degree-r
// monomial of the complement with alpha > beta under the active order.
struct TVariable {
  Exponent corner;
  Exponent tail;
  auto operator<=>(const TVariable&) const = default;
};

// A power product of T-variables, stored as a sorted multiset of variable
// ids. Ids index into the owning context's TVariable list.
using TMonomial = std::vector<int>;

// Kinds of weighted degree a polynomial can have. The zero polynomial is
// homogeneous of every degree and gets its own marker.
struct WeightedDegree {
  enum Kind { Zero, Homogeneous, Inhomogeneous };
  Kind kind = Zero;
  long degree = 0;

  bool operator==(const WeightedDegree&) const = default;
};

// Sparse polynomial in T-variables with exact rational coefficients.
class TPolynomial {
 public:
  TPolynomial() = default;

  static TPolynomial constant(const Rational& c) {
    TPolynomial p;
    p.add_term({}, c);
    return p;
  }
  static TPolynomial variable(int id) {
    TPolynomial p;
    p.add_term({id}, Rational(1));
    return p;
  }

  void add_term(TMonomial m, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  const std::map<TMonomial, Rational>& terms() const { return terms_; }

  TPolynomial operator+(const TPolynomial& o) const;
  TPolynomial operator-(const TPolynomial& o) const;
  TPolynomial operator*(const TPolynomial& o) const;
  TPolynomial operator*(const Rational& c) const;
  TPolynomial operator-() const { return *this * Rational(-1); }

  bool operator==(const TPolynomial& o) const { return terms_ == o.terms_; }
  bool operator<(const TPolynomial& o) const { return terms_ < o.terms_; }

  bool contains_variable(int id) const;

  Rational constant_term() const {
    auto it = terms_.find(TMonomial{});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  // Coefficients of all total-degree-1 terms; everything else ignored.
  std::map<int, Rational> linear_part() const;

  // Every occurrence of variable id replaced by g, fully expanded.
  TPolynomial substitute(int id, const TPolynomial& g) const;

  // Weighted degree under per-variable weights (indexed by id).
  WeightedDegree weighted_degree(const std::vector<long>& weights) const;

  // Exact evaluation at a full point (indexed by id).
  Rational evaluate(const std::vector<Rational>& point) const;

 private:
  std::map<TMonomial, Rational> terms_;
};

}  // namespace hilbstrata
