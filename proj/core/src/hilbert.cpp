#include "hilbstrata/hilbert.hpp"

#include <cctype>
#include <cstddef>

namespace hilbstrata {

UniPoly uni_normalize(UniPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

UniPoly uni_add(const UniPoly& a, const UniPoly& b) {
  UniPoly out(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return uni_normalize(std::move(out));
}

UniPoly uni_sub(const UniPoly& a, const UniPoly& b) {
  UniPoly out(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return uni_normalize(std::move(out));
}

UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
  if (a.empty() || b.empty()) return {};
  UniPoly out(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return uni_normalize(std::move(out));
}

Rational uni_eval(const UniPoly& p, long t) {
  Rational out(0);
  for (size_t i = p.size(); i-- > 0;) out = out * t + p[i];
  out.canonicalize();
  return out;
}

bool uni_is_zero(const UniPoly& p) { return p.empty(); }

bool uni_eventually_nonneg(const UniPoly& p) {
  return p.empty() || p.back() > 0;
}

UniPoly binomial_poly(long shift, long a) {
  UniPoly out{Rational(1)};
  for (long j = 0; j < a; ++j) {
    // multiply by (t + shift - j) / (j + 1)
    UniPoly factor{Rational(shift - j), Rational(1)};
    out = uni_mul(out, factor);
    for (auto& c : out) {
      c /= (j + 1);
      c.canonicalize();
    }
  }
  return uni_normalize(std::move(out));
}

HilbertPolynomial parse_hilbert_polynomial(const std::string& text) {
  UniPoly coeffs;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  auto fail = [&](const std::string& msg) -> void {
    throw HilbertParseError(msg + " at position " + std::to_string(i));
  };
  auto parse_uint = [&]() -> Integer {
    size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      ++i;
    if (i == start) fail("expected integer");
    return Integer(text.substr(start, i - start));
  };
  auto add_coeff = [&](size_t deg, const Integer& c) {
    if (coeffs.size() <= deg) coeffs.resize(deg + 1, Rational(0));
    coeffs[deg] += Rational(c);
  };

  skip_ws();
  if (i == text.size()) fail("empty input");
  bool first = true;
  while (true) {
    skip_ws();
    if (i == text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    Integer c(1);
    bool saw_coeff = false;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      c = parse_uint();
      saw_coeff = true;
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip_ws();
      }
    }
    size_t deg = 0;
    if (i < text.size() && text[i] == 't') {
      ++i;
      deg = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        Integer d = parse_uint();
        if (!d.fits_ulong_p() || d.get_ui() > 64) fail("exponent too large");
        deg = d.get_ui();
      }
    } else if (!saw_coeff) {
      fail("expected term");
    }
    add_coeff(deg, sign > 0 ? c : -c);
  }
  HilbertPolynomial P;
  P.coeffs = uni_normalize(std::move(coeffs));
  return P;
}

HilbertPolynomial macaulay_decomposition(HilbertPolynomial P) {
  UniPoly rem = P.coeffs;
  if (uni_is_zero(rem) || rem.back() <= 0)
    throw InadmissibleHilbertPolynomial(
        "not a Hilbert polynomial: zero or negative for large t");
  std::vector<long> a;
  long prev = -1;  // unbounded at i = 1
  long i = 1;
  while (!uni_is_zero(rem)) {
    long deg = static_cast<long>(rem.size()) - 1;
    long hi = prev < 0 ? deg : std::min(prev, deg);
    long chosen = -1;
    for (long cand = hi; cand >= 0; --cand) {
      UniPoly diff = uni_sub(rem, binomial_poly(cand - i + 1, cand));
      if (uni_eventually_nonneg(diff)) {
        chosen = cand;
        rem = std::move(diff);
        break;
      }
    }
    // Every later a_j is <= a_i, so a_i < deg(rem) can never clear the
    // leading term; an admissible P always admits a_i = deg(rem).
    if (chosen < deg)
      throw InadmissibleHilbertPolynomial(
          "not a Hilbert polynomial of a subscheme of projective space");
    a.push_back(chosen);
    prev = chosen;
    ++i;
    if (i > 1000000)
      throw InadmissibleHilbertPolynomial("Gotzmann number out of range");
  }
  // Re-verify the identity exactly.
  UniPoly sum;
  for (size_t j = 0; j < a.size(); ++j)
    sum = uni_add(sum, binomial_poly(a[j] - static_cast<long>(j + 1) + 1,
                                     a[j]));
  if (uni_sub(sum, P.coeffs) != UniPoly{})
    throw InadmissibleHilbertPolynomial("Macaulay identity failed");
  P.gotzmann = static_cast<long>(a.size());
  P.macaulay = std::move(a);
  return P;
}

ChartCounts chart_counts(const HilbertPolynomial& P, int n) {
  if (P.gotzmann <= 0)
    throw std::invalid_argument("chart_counts: Macaulay data missing");
  if (n < 1) throw std::invalid_argument("chart_counts: n must be >= 1");
  long r = P.gotzmann;
  Rational pr = uni_eval(P.coeffs, r);
  Rational pr1 = uni_eval(P.coeffs, r + 1);
  if (pr.get_den() != 1 || pr1.get_den() != 1)
    throw InadmissibleHilbertPolynomial("P takes non-integer values");
  Integer slice_r = binomial(n + r, r);
  Integer slice_r1 = binomial(n + r + 1, r + 1);
  Integer ct = slice_r - pr.get_num();
  Integer et = slice_r1 - pr1.get_num();
  if (ct < 0 || et < 0 || pr < 0 || pr1 < 0)
    throw InadmissibleHilbertPolynomial("P inadmissible in P^n");
  ChartCounts out;
  out.n = n;
  out.r = r;
  out.corners_target = ct.get_si();
  out.expansion_target = et.get_si();
  out.delta_r_size = pr.get_num().get_si();
  out.delta_r1_size = pr1.get_num().get_si();
  return out;
}

}  // namespace hilbstrata
