#include "hilbstrata/stratum.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hilbstrata {

namespace {

void check(bool ok, const char* msg) {
  if (!ok) throw std::logic_error(std::string("stratum internal error: ") + msg);
}

// A degree-(r+1) element with TPolynomial coefficients, keyed by x-monomial.
using XTSlice = std::map<Exponent, TPolynomial>;

void xt_sub(XTSlice& f, const Exponent& e, const TPolynomial& c) {
  auto it = f.find(e);
  if (it == f.end()) {
    TPolynomial neg = -c;
    if (!neg.is_zero()) f.emplace(e, std::move(neg));
  } else {
    it->second = it->second - c;
    if (it->second.is_zero()) f.erase(it);
  }
}

}  // namespace

MarkedFamily build_family(const CornerSet& J, const MonomialOrder& order,
                          const WeightVector& omega) {
  MarkedFamily fam{J, order, omega, {}, {}, {}};
  for (const auto& alpha : J.corners) {
    std::vector<int> ids;
    for (const auto& beta : J.delta_r) {
      if (order.greater(alpha, beta)) {
        long w = omega.dot(alpha) - omega.dot(beta);
        check(w > 0, "non-positive T-variable weight");
        ids.push_back(static_cast<int>(fam.variables.size()));
        fam.variables.push_back({alpha, beta});
        fam.weights.push_back(w);
      }
    }
    fam.generator_vars.push_back(std::move(ids));
  }
  return fam;
}

namespace {

// x_i * g_alpha as a full degree-(r+1) element (marked coefficient 1).
XTSlice shift_generator(const MarkedFamily& fam, size_t corner_idx, int i) {
  XTSlice f;
  f.emplace(fam.ideal.corners[corner_idx].plus(i),
            TPolynomial::constant(Rational(1)));
  for (int v : fam.generator_vars[corner_idx])
    xt_sub(f, fam.variables[static_cast<size_t>(v)].tail.plus(i),
           TPolynomial::variable(v));
  return f;
}

}  // namespace

StratumPresentation stratum_equations(const MarkedFamily& fam) {
  const int n = fam.ideal.n;
  std::map<Exponent, size_t> corner_index;
  for (size_t ci = 0; ci < fam.ideal.corners.size(); ++ci)
    corner_index.emplace(fam.ideal.corners[ci], ci);

  auto jr1_set = expansion(fam.ideal.corners, n);
  std::vector<Exponent> jr1(jr1_set.begin(), jr1_set.end());
  std::sort(jr1.begin(), jr1.end(), [&](const Exponent& a, const Exponent& b) {
    return fam.order.less(a, b);
  });

  // m = x_i * x^alpha with the smallest i such that m - e_i is a corner.
  auto canonical = [&](const Exponent& m) -> std::pair<int, size_t> {
    for (int i = 0; i <= n; ++i) {
      if (m[i] == 0) continue;
      Exponent cand = Exponent::unit(n + 1, i).quotient_of(m);
      auto it = corner_index.find(cand);
      if (it != corner_index.end()) return {i, it->second};
    }
    check(false, "J-monomial without corner decomposition");
    return {-1, 0};
  };

  // Normal forms: m -> Delta_{r+1}-supported tail of the normalized
  // f_m = m + tail. Processing in ascending order keeps reducers ready.
  std::map<Exponent, XTSlice> norm;
  auto reduce_j_monomials = [&](XTSlice& f, const Exponent& marked) {
    std::vector<Exponent> pending;
    for (const auto& [e, c] : f)
      if (jr1_set.count(e)) pending.push_back(e);
    for (const auto& e : pending) {
      auto it = f.find(e);
      if (it == f.end()) continue;
      check(fam.order.less(e, marked), "reduction does not descend");
      TPolynomial c = it->second;
      f.erase(it);
      auto nf = norm.find(e);
      check(nf != norm.end(), "reducer not yet normalized");
      for (const auto& [d, c2] : nf->second) xt_sub(f, d, c * c2);
    }
  };

  for (const auto& m : jr1) {
    auto [i, ci] = canonical(m);
    XTSlice f = shift_generator(fam, ci, i);
    f.erase(m);
    reduce_j_monomials(f, m);
    norm.emplace(m, std::move(f));
  }

  StratumPresentation pres{fam.variables, fam.weights, {}};
  std::set<TPolynomial> seen;
  for (size_t ci = 0; ci < fam.ideal.corners.size(); ++ci) {
    const Exponent& alpha = fam.ideal.corners[ci];
    for (int j = 0; j <= n; ++j) {
      Exponent m = alpha.plus(j);
      auto [i, canon_ci] = canonical(m);
      if (i == j) continue;  // the canonical pair produced the normal form
      XTSlice h = shift_generator(fam, ci, j);
      h.erase(m);
      // subtract the tail of the normal form of m, then clear the rest
      for (const auto& [d, c] : norm.at(m)) xt_sub(h, d, c);
      reduce_j_monomials(h, m);
      long wm = fam.omega.dot(m);
      for (const auto& [delta, eq] : h) {
        check(!jr1_set.count(delta), "remainder not supported on Delta");
        check(eq.constant_term() == 0, "equation with constant term");
        auto wd = eq.weighted_degree(fam.weights);
        check(wd.kind == WeightedDegree::Homogeneous &&
                  wd.degree == wm - fam.omega.dot(delta),
              "equation not omega-homogeneous of the expected degree");
        if (seen.insert(eq).second) pres.equations.push_back(eq);
      }
    }
  }
  return pres;
}

int tangent_dimension(const StratumPresentation& pres) {
  std::vector<std::map<int, Rational>> rows;
  for (const auto& eq : pres.equations) {
    auto lp = eq.linear_part();
    if (!lp.empty()) rows.push_back(std::move(lp));
  }
  int rank = 0;
  for (size_t pivot_col = 0; pivot_col < pres.variables.size(); ++pivot_col) {
    int col = static_cast<int>(pivot_col);
    size_t pr = rows.size();
    for (size_t i = static_cast<size_t>(rank); i < rows.size(); ++i)
      if (rows[i].count(col)) {
        pr = i;
        break;
      }
    if (pr == rows.size()) continue;
    std::swap(rows[static_cast<size_t>(rank)], rows[pr]);
    const auto& prow = rows[static_cast<size_t>(rank)];
    Rational pc = prow.at(col);
    for (size_t i = static_cast<size_t>(rank) + 1; i < rows.size(); ++i) {
      auto it = rows[i].find(col);
      if (it == rows[i].end()) continue;
      Rational factor = it->second / pc;
      for (const auto& [c, v] : prow) {
        auto jt = rows[i].find(c);
        if (jt == rows[i].end()) {
          rows[i].emplace(c, -factor * v);
        } else {
          jt->second -= factor * v;
          if (jt->second == 0) rows[i].erase(jt);
        }
      }
    }
    ++rank;
  }
  return static_cast<int>(pres.variables.size()) - rank;
}

StratumClassification classify(const StratumPresentation& pres) {
  std::vector<TPolynomial> eqs;
  for (const auto& e : pres.equations)
    if (!e.is_zero()) eqs.push_back(e);
  std::vector<bool> eliminated(pres.variables.size(), false);
  StratumClassification cls;

  while (true) {
    size_t pick = eqs.size();
    int var = -1;
    Rational coeff;
    for (size_t i = 0; i < eqs.size(); ++i) {
      auto lp = eqs[i].linear_part();
      if (lp.empty()) continue;
      pick = i;
      var = lp.begin()->first;
      coeff = lp.begin()->second;
      break;
    }
    if (pick == eqs.size()) break;

    // f is homogeneous of weighted degree wt(var) with positive weights,
    // so var occurs in f only in its linear term; g is var-free.
    TPolynomial f = eqs[pick];
    TPolynomial g = (TPolynomial::variable(var) * coeff - f) * (Rational(1) / coeff);
    check(!g.contains_variable(var), "eliminated variable reappears in g");
    for (const auto& [m, c] : g.terms())
      for (int id : m)
        check(!eliminated[static_cast<size_t>(id)],
              "substitution mentions an eliminated variable");
    eqs.erase(eqs.begin() + static_cast<long>(pick));
    std::vector<TPolynomial> next;
    for (const auto& e : eqs) {
      TPolynomial s = e.substitute(var, g);
      if (!s.is_zero()) next.push_back(std::move(s));
    }
    eqs = std::move(next);
    eliminated[static_cast<size_t>(var)] = true;
    cls.chain.push_back({var, std::move(g)});
  }

  for (size_t i = 0; i < eliminated.size(); ++i)
    if (!eliminated[i]) cls.free_vars.push_back(static_cast<int>(i));
  cls.tangent_dim = static_cast<int>(cls.free_vars.size());
  cls.residual_equation_count = static_cast<int>(eqs.size());
  cls.affine_cell = eqs.empty();
  check(cls.tangent_dim == tangent_dimension(pres),
        "elimination residue disagrees with linear rank");
  return cls;
}

std::vector<Rational> torus_act(const std::vector<Rational>& point,
                                const Rational& t,
                                const std::vector<long>& weights) {
  if (t == 0) throw std::invalid_argument("torus_act: t must be nonzero");
  std::vector<Rational> out(point.size());
  for (size_t i = 0; i < point.size(); ++i)
    out[i] = point[i] * rational_pow(t, weights[i]);
  return out;
}

std::vector<XPolynomial> specialize(const MarkedFamily& fam,
                                    const std::vector<Rational>& point) {
  if (point.size() != fam.variables.size())
    throw std::invalid_argument("specialize: point has wrong dimension");
  std::vector<XPolynomial> out;
  for (size_t ci = 0; ci < fam.ideal.corners.size(); ++ci) {
    XPolynomial g = XPolynomial::monomial(fam.ideal.corners[ci]);
    for (int v : fam.generator_vars[ci])
      g.add_term(fam.variables[static_cast<size_t>(v)].tail,
                 -point[static_cast<size_t>(v)]);
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<Rational> cell_point(const StratumClassification& cls,
                                 size_t nvars,
                                 const std::vector<Rational>& free_values) {
  if (free_values.size() != cls.free_vars.size())
    throw std::invalid_argument("cell_point: wrong number of free values");
  std::vector<Rational> point(nvars, Rational(0));
  for (size_t i = 0; i < cls.free_vars.size(); ++i)
    point[static_cast<size_t>(cls.free_vars[i])] = free_values[i];
  // Later steps only reference free variables and steps after them.
  for (auto it = cls.chain.rbegin(); it != cls.chain.rend(); ++it)
    point[static_cast<size_t>(it->var)] = it->expr.evaluate(point);
  return point;
}

}  // namespace hilbstrata
