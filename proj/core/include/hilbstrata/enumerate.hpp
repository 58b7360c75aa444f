#pragma once

#include <set>
#include <vector>

#include "hilbstrata/exponent.hpp"
#include "hilbstrata/hilbert.hpp"

namespace hilbstrata {

// A monomial ideal in M_{P,n}: generated by its degree-r corners, with the
// degree-r complement alongside. Corners and delta_r are kept sorted by the
// container order of Exponent.
struct CornerSet {
  int n = 0;
  long r = 0;
  std::vector<Exponent> corners;
  std::vector<Exponent> delta_r;

  bool operator==(const CornerSet& o) const {
    return n == o.n && r == o.r && corners == o.corners;
  }
  bool operator<(const CornerSet& o) const { return corners < o.corners; }
};

// { alpha + e_i | alpha in corners, i = 0..n }, deduplicated.
std::set<Exponent> expansion(const std::vector<Exponent>& corners, int n);

// All corner sets C of degree-r monomials with |C| and |expansion(C)|
// hitting the chart targets. Order-free; output sorted by corners.
std::vector<CornerSet> enumerate_M(const HilbertPolynomial& P, int n);

// Builds a CornerSet from explicit degree-r generators, checking the
// membership conditions for M_{P,n}. Throws std::invalid_argument.
CornerSet corner_set_from_generators(const std::vector<Exponent>& generators,
                                     const HilbertPolynomial& P, int n);

}  // namespace hilbstrata
