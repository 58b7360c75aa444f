#include "hilbstrata/groebner.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace hilbstrata {

bool graded_greater(const MonomialOrder& order, const Exponent& a,
                    const Exponent& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  return order.greater(a, b);
}

Exponent leading_exponent(const XPolynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) throw std::invalid_argument("leading term of zero");
  const Exponent* best = nullptr;
  for (const auto& [e, c] : f.terms())
    if (!best || graded_greater(order, e, *best)) best = &e;
  return *best;
}

namespace {

XPolynomial make_monic(const XPolynomial& f, const MonomialOrder& order) {
  Exponent lt = leading_exponent(f, order);
  return f * (Rational(1) / f.coefficient(lt));
}

// Full normal form against the (monic) basis.
XPolynomial normal_form(XPolynomial f, const std::vector<XPolynomial>& basis,
                        const std::vector<Exponent>& leads,
                        const MonomialOrder& order) {
  XPolynomial rem;
  while (!f.is_zero()) {
    Exponent lt = leading_exponent(f, order);
    Rational c = f.coefficient(lt);
    bool reduced = false;
    for (size_t i = 0; i < basis.size(); ++i) {
      if (!leads[i].divides(lt)) continue;
      f = f - basis[i].shifted(leads[i].quotient_of(lt), c);
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

ReducedBasis buchberger(std::vector<XPolynomial> generators,
                        const MonomialOrder& order, int degree_cap) {
  ReducedBasis out;
  std::vector<XPolynomial> basis;
  std::vector<Exponent> leads;
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    int deg = g.terms().begin()->first.degree();
    for (const auto& [e, c] : g.terms())
      if (e.degree() != deg)
        throw std::invalid_argument("buchberger: inputs must be homogeneous");
    if (deg > degree_cap)
      throw std::invalid_argument("buchberger: generator above degree cap");
    basis.push_back(make_monic(g, order));
    leads.push_back(leading_exponent(basis.back(), order));
  }

  // Normal strategy: pairs by ascending lcm degree.
  struct Pair {
    int deg;
    size_t i, j;
    bool operator>(const Pair& o) const { return deg > o.deg; }
  };
  std::priority_queue<Pair, std::vector<Pair>, std::greater<Pair>> pairs;
  auto push_pairs = [&](size_t j) {
    for (size_t i = 0; i < j; ++i) {
      Exponent l = leads[i].lcm(leads[j]);
      int d = l.degree();
      if (d > degree_cap) {
        out.cap_hit = true;
        continue;
      }
      // coprime leading terms: S-polynomial reduces to zero
      if (d == leads[i].degree() + leads[j].degree()) continue;
      pairs.push({d, i, j});
    }
  };
  for (size_t j = 0; j < basis.size(); ++j) push_pairs(j);

  while (!pairs.empty()) {
    auto [d, i, j] = pairs.top();
    pairs.pop();
    Exponent l = leads[i].lcm(leads[j]);
    XPolynomial s = basis[i].shifted(leads[i].quotient_of(l), Rational(1)) -
                    basis[j].shifted(leads[j].quotient_of(l), Rational(1));
    XPolynomial nf = normal_form(std::move(s), basis, leads, order);
    if (nf.is_zero()) continue;
    basis.push_back(make_monic(nf, order));
    leads.push_back(leading_exponent(basis.back(), order));
    push_pairs(basis.size() - 1);
  }

  // Minimize: drop elements whose lead is divisible by another lead.
  std::vector<size_t> keep;
  for (size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < basis.size(); ++j) {
      if (i == j || !leads[j].divides(leads[i])) continue;
      if (leads[j] == leads[i] && j > i) continue;  // keep the first
      redundant = true;
      break;
    }
    if (!redundant) keep.push_back(i);
  }
  std::vector<XPolynomial> minimal;
  std::vector<Exponent> min_leads;
  for (size_t i : keep) {
    minimal.push_back(basis[i]);
    min_leads.push_back(leads[i]);
  }
  // Reduce tails modulo the other elements.
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<XPolynomial> others;
    std::vector<Exponent> other_leads;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) {
        others.push_back(minimal[j]);
        other_leads.push_back(min_leads[j]);
      }
    minimal[i] = normal_form(minimal[i], others, other_leads, order);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const XPolynomial& a, const XPolynomial& b) {
              return graded_greater(order, leading_exponent(b, order),
                                    leading_exponent(a, order));
            });
  out.polys = std::move(minimal);
  return out;
}

std::vector<Exponent> initial_ideal(const std::vector<XPolynomial>& generators,
                                    const MonomialOrder& order,
                                    int degree_cap) {
  ReducedBasis rb = buchberger(generators, order, degree_cap);
  std::vector<Exponent> leads;
  for (const auto& g : rb.polys) leads.push_back(leading_exponent(g, order));
  std::sort(leads.begin(), leads.end());
  return leads;
}

}  // namespace hilbstrata
