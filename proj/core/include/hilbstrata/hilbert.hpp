#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hilbstrata/rational.hpp"

namespace hilbstrata {

// Univariate polynomial in t with rational coefficients, low degree first.
// The zero polynomial is the empty vector; otherwise no trailing zeros.
using UniPoly = std::vector<Rational>;

UniPoly uni_normalize(UniPoly p);
UniPoly uni_add(const UniPoly& a, const UniPoly& b);
UniPoly uni_sub(const UniPoly& a, const UniPoly& b);
UniPoly uni_mul(const UniPoly& a, const UniPoly& b);
Rational uni_eval(const UniPoly& p, long t);
bool uni_is_zero(const UniPoly& p);
// p(t) >= 0 for all large t, i.e. zero or positive leading coefficient.
bool uni_eventually_nonneg(const UniPoly& p);

// binom(t + shift, a) as a polynomial in t.
UniPoly binomial_poly(long shift, long a);

struct InadmissibleHilbertPolynomial : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct HilbertParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An admissible Hilbert polynomial with its Macaulay data: the unique
// weakly decreasing a_1 >= ... >= a_r >= 0 with
//   P(t) = sum_i binom(t + a_i - i + 1, a_i),
// and Gotzmann number r.
struct HilbertPolynomial {
  UniPoly coeffs;
  std::vector<long> macaulay;
  long gotzmann = 0;
};

// Parses integer-coefficient polynomials in t: "2t+2", "2*t + 2", "t^2", "5".
// No Macaulay data attached yet.
HilbertPolynomial parse_hilbert_polynomial(const std::string& text);

// Greedy Macaulay decomposition; fills macaulay/gotzmann and re-verifies
// the binomial identity symbolically. Throws InadmissibleHilbertPolynomial.
HilbertPolynomial macaulay_decomposition(HilbertPolynomial P);

// Dimension targets of the Grassmannian chart in degrees r and r+1.
struct ChartCounts {
  int n = 0;
  long r = 0;
  long corners_target = 0;    // binom(n+r, r) - P(r)
  long expansion_target = 0;  // binom(n+r+1, r+1) - P(r+1)
  long delta_r_size = 0;      // P(r)
  long delta_r1_size = 0;     // P(r+1)
};

ChartCounts chart_counts(const HilbertPolynomial& P, int n);

}  // namespace hilbstrata
