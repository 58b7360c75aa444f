#pragma once

#include <gmpxx.h>
#include <string>

namespace hilbstrata {

// Exact arithmetic everywhere. GMP keeps rationals canonical:
// lowest terms, positive denominator, zero as 0/1.
using Integer = mpz_class;
using Rational = mpq_class;

inline Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

// t^e for e of either sign; t must be nonzero when e < 0.
inline Rational rational_pow(const Rational& t, long e) {
  Rational base = t;
  long k = e;
  if (k < 0) {
    base = Rational(1) / base;
    k = -k;
  }
  Rational out(1);
  while (k > 0) {
    if (k & 1) out *= base;
    base *= base;
    k >>= 1;
  }
  out.canonicalize();
  return out;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace hilbstrata
