#pragma once

#include <map>
#include <optional>
#include <vector>

#include "hilbstrata/enumerate.hpp"
#include "hilbstrata/order.hpp"
#include "hilbstrata/tpoly.hpp"
#include "hilbstrata/xpoly.hpp"

namespace hilbstrata {

// The generic reduced basis of a stratum: one generator per corner,
//   g_alpha = x^alpha - sum_beta T_{alpha,beta} x^beta,
// over the T-variables T_{alpha,beta} with beta in Delta_r, alpha > beta.
// Variable ids index into `variables`; weights are omega.alpha - omega.beta.
struct MarkedFamily {
  CornerSet ideal;
  MonomialOrder order;
  WeightVector omega;
  std::vector<TVariable> variables;
  std::vector<long> weights;
  // Per corner (parallel to ideal.corners): the ids of its T-variables.
  std::vector<std::vector<int>> generator_vars;
};

MarkedFamily build_family(const CornerSet& J, const MonomialOrder& order,
                          const WeightVector& omega);

// Defining equations of the stratum inside Spec k[T], all omega-homogeneous
// of positive weighted degree with no constant term.
struct StratumPresentation {
  std::vector<TVariable> variables;
  std::vector<long> weights;
  std::vector<TPolynomial> equations;
};

StratumPresentation stratum_equations(const MarkedFamily& fam);

// (number of variables) - rank of the linear parts over the rationals.
int tangent_dimension(const StratumPresentation& pres);

// One substitution of the graded linear elimination: var := expr, where
// expr never mentions var or any previously eliminated variable.
struct EliminationStep {
  int var;
  TPolynomial expr;
};

struct StratumClassification {
  bool affine_cell = false;
  int tangent_dim = 0;             // variables remaining after elimination
  int residual_equation_count = 0; // nonzero residual equations
  std::vector<int> free_vars;      // ids of the remaining variables
  std::vector<EliminationStep> chain;  // in elimination order
};

StratumClassification classify(const StratumPresentation& pres);

// Torus action on a point of the stratum: coefficient of T scales by
// t^{wt(T)}. Points are full assignments indexed by variable id.
std::vector<Rational> torus_act(const std::vector<Rational>& point,
                                const Rational& t,
                                const std::vector<long>& weights);

// Generators g_alpha with the T-variables evaluated at the point.
std::vector<XPolynomial> specialize(const MarkedFamily& fam,
                                    const std::vector<Rational>& point);

// Extends an assignment of the free variables of an affine cell to a full
// point on the stratum via the recorded elimination chain.
std::vector<Rational> cell_point(const StratumClassification& cls,
                                 size_t nvars,
                                 const std::vector<Rational>& free_values);

}  // namespace hilbstrata
