#include "hilbstrata/tpoly.hpp"

#include <algorithm>
#include <cstddef>

namespace hilbstrata {

void TPolynomial::add_term(TMonomial m, const Rational& c) {
  if (c == 0) return;
  std::sort(m.begin(), m.end());
  auto [it, inserted] = terms_.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TPolynomial TPolynomial::operator+(const TPolynomial& o) const {
  TPolynomial out = *this;
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = out.terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) out.terms_.erase(it);
    }
  }
  return out;
}

TPolynomial TPolynomial::operator-(const TPolynomial& o) const {
  TPolynomial out = *this;
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = out.terms_.try_emplace(m, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) out.terms_.erase(it);
    }
  }
  return out;
}

TPolynomial TPolynomial::operator*(const TPolynomial& o) const {
  TPolynomial out;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) {
      TMonomial m;
      m.reserve(m1.size() + m2.size());
      std::merge(m1.begin(), m1.end(), m2.begin(), m2.end(),
                 std::back_inserter(m));
      auto [it, inserted] = out.terms_.try_emplace(std::move(m), c1 * c2);
      if (!inserted) {
        it->second += c1 * c2;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
  return out;
}

TPolynomial TPolynomial::operator*(const Rational& c) const {
  TPolynomial out;
  if (c == 0) return out;
  for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
  return out;
}

bool TPolynomial::contains_variable(int id) const {
  for (const auto& [m, c] : terms_)
    if (std::binary_search(m.begin(), m.end(), id)) return true;
  return false;
}

std::map<int, Rational> TPolynomial::linear_part() const {
  std::map<int, Rational> out;
  for (const auto& [m, c] : terms_)
    if (m.size() == 1) out.emplace(m[0], c);
  return out;
}

TPolynomial TPolynomial::substitute(int id, const TPolynomial& g) const {
  TPolynomial out;
  std::vector<TPolynomial> powers{TPolynomial::constant(Rational(1))};
  for (const auto& [m, c] : terms_) {
    auto range = std::equal_range(m.begin(), m.end(), id);
    size_t k = static_cast<size_t>(range.second - range.first);
    if (k == 0) {
      out.add_term(m, c);
      continue;
    }
    while (powers.size() <= k) powers.push_back(powers.back() * g);
    TMonomial rest(m.begin(), range.first);
    rest.insert(rest.end(), range.second, m.end());
    TPolynomial piece;
    piece.add_term(std::move(rest), c);
    out = out + piece * powers[k];
  }
  return out;
}

WeightedDegree TPolynomial::weighted_degree(
    const std::vector<long>& weights) const {
  if (terms_.empty()) return {WeightedDegree::Zero, 0};
  bool first = true;
  long deg = 0;
  for (const auto& [m, c] : terms_) {
    long d = 0;
    for (int id : m) d += weights[static_cast<size_t>(id)];
    if (first) {
      deg = d;
      first = false;
    } else if (d != deg) {
      return {WeightedDegree::Inhomogeneous, 0};
    }
  }
  return {WeightedDegree::Homogeneous, deg};
}

Rational TPolynomial::evaluate(const std::vector<Rational>& point) const {
  Rational out(0);
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (int id : m) v *= point[static_cast<size_t>(id)];
    out += v;
  }
  out.canonicalize();
  return out;
}

}  // namespace hilbstrata
