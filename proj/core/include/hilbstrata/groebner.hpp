#pragma once

#include <vector>

#include "hilbstrata/order.hpp"
#include "hilbstrata/xpoly.hpp"

namespace hilbstrata {

// Degree-capped homogeneous Buchberger over the rationals, used as the
// independent verifier of the stratum computations. The fixed-degree order
// is extended across degrees degree-first.
struct ReducedBasis {
  std::vector<XPolynomial> polys;  // monic, interreduced
  bool cap_hit = false;            // some S-pair above the cap was discarded
};

// Graded extension of the slice order: higher degree is greater.
bool graded_greater(const MonomialOrder& order, const Exponent& a,
                    const Exponent& b);

Exponent leading_exponent(const XPolynomial& f, const MonomialOrder& order);

// Reduced Groebner basis of a homogeneous ideal, truncated at degree_cap.
ReducedBasis buchberger(std::vector<XPolynomial> generators,
                        const MonomialOrder& order, int degree_cap);

// Minimal generators of the initial ideal up to the cap: leading exponents
// of the reduced basis, sorted by container order.
std::vector<Exponent> initial_ideal(const std::vector<XPolynomial>& generators,
                                    const MonomialOrder& order,
                                    int degree_cap);

}  // namespace hilbstrata
