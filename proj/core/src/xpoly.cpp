#include "hilbstrata/xpoly.hpp"

namespace hilbstrata {

XPolynomial XPolynomial::operator+(const XPolynomial& o) const {
  XPolynomial out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

XPolynomial XPolynomial::operator-(const XPolynomial& o) const {
  XPolynomial out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

XPolynomial XPolynomial::operator*(const XPolynomial& o) const {
  XPolynomial out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) out.add_term(e1 + e2, c1 * c2);
  return out;
}

XPolynomial XPolynomial::operator*(const Rational& c) const {
  XPolynomial out;
  if (c == 0) return out;
  for (const auto& [e, k] : terms_) out.terms_.emplace(e, k * c);
  return out;
}

XPolynomial XPolynomial::shifted(const Exponent& e, const Rational& c) const {
  XPolynomial out;
  if (c == 0) return out;
  for (const auto& [m, k] : terms_) out.terms_.emplace(m + e, k * c);
  return out;
}

}  // namespace hilbstrata
