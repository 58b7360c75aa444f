#pragma once

#include <map>

#include "hilbstrata/exponent.hpp"
#include "hilbstrata/rational.hpp"

namespace hilbstrata {

// Sparse polynomial in the ambient ring k[x_0..x_n], exact rational
// coefficients. No zero coefficient is ever stored.
class XPolynomial {
 public:
  XPolynomial() = default;

  static XPolynomial monomial(const Exponent& e, Rational c = Rational(1)) {
    XPolynomial p;
    p.add_term(e, c);
    return p;
  }

  void add_term(const Exponent& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Exponent, Rational>& terms() const { return terms_; }

  Rational coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  XPolynomial operator+(const XPolynomial& o) const;
  XPolynomial operator-(const XPolynomial& o) const;
  XPolynomial operator*(const XPolynomial& o) const;
  XPolynomial operator*(const Rational& c) const;
  XPolynomial operator-() const { return *this * Rational(-1); }

  // this * c * x^e
  XPolynomial shifted(const Exponent& e, const Rational& c) const;

  bool operator==(const XPolynomial& o) const { return terms_ == o.terms_; }

 private:
  std::map<Exponent, Rational> terms_;
};

}  // namespace hilbstrata
