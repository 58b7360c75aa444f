#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hilbstrata/exponent.hpp"

namespace hilbstrata {

enum class OrderKind { Lex, DegRevLex };
enum class Cmp { Less, Equal, Greater };

// Total order on each fixed-degree slice of exponent vectors. The
// precedence permutation lists variable indices from highest to lowest;
// default is x_0 > x_1 > ... > x_n.
class MonomialOrder {
 public:
  MonomialOrder(OrderKind kind, int nvars);
  MonomialOrder(OrderKind kind, std::vector<int> precedence);

  // Requires |a| = |b|; throws on degree mismatch.
  Cmp compare(const Exponent& a, const Exponent& b) const;
  bool greater(const Exponent& a, const Exponent& b) const {
    return compare(a, b) == Cmp::Greater;
  }
  bool less(const Exponent& a, const Exponent& b) const {
    return compare(a, b) == Cmp::Less;
  }

  OrderKind kind() const { return kind_; }
  int nvars() const { return static_cast<int>(precedence_.size()); }
  const std::vector<int>& precedence() const { return precedence_; }
  std::string name() const {
    return kind_ == OrderKind::Lex ? "lex" : "degrevlex";
  }

 private:
  OrderKind kind_;
  std::vector<int> precedence_;
};

// Strictly positive integer weights realizing the order on the degree-r
// and degree-(r+1) slices: a > b implies omega.a > omega.b there. The
// constructor verifies this exhaustively over both slices.
class WeightVector {
 public:
  static WeightVector realize(const MonomialOrder& order, int n, int r);

  long dot(const Exponent& a) const {
    long s = 0;
    for (int i = 0; i < a.nvars(); ++i)
      s += omega_[static_cast<size_t>(i)] * a[i];
    return s;
  }

  const std::vector<long>& entries() const { return omega_; }

 private:
  explicit WeightVector(std::vector<long> omega) : omega_(std::move(omega)) {}
  std::vector<long> omega_;
};

}  // namespace hilbstrata
