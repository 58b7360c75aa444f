#pragma once

#include <compare>
#include <cstddef>
#include <vector>

namespace hilbstrata {

// Exponent vector (a_0,...,a_n) of a monomial in x_0..x_n.
class Exponent {
 public:
  Exponent() = default;
  explicit Exponent(std::vector<int> entries) : entries_(std::move(entries)) {}

  static Exponent zero(int nvars) { return Exponent(std::vector<int>(nvars, 0)); }
  static Exponent unit(int nvars, int i) {
    std::vector<int> e(nvars, 0);
    e[i] = 1;
    return Exponent(std::move(e));
  }

  int nvars() const { return static_cast<int>(entries_.size()); }
  int operator[](int i) const { return entries_[static_cast<size_t>(i)]; }
  const std::vector<int>& entries() const { return entries_; }

  int degree() const {
    int d = 0;
    for (int e : entries_) d += e;
    return d;
  }

  // alpha + e_i
  Exponent plus(int i) const {
    Exponent out = *this;
    ++out.entries_[static_cast<size_t>(i)];
    return out;
  }

  Exponent operator+(const Exponent& o) const {
    Exponent out = *this;
    for (size_t i = 0; i < entries_.size(); ++i) out.entries_[i] += o.entries_[i];
    return out;
  }

  bool divides(const Exponent& o) const {
    for (size_t i = 0; i < entries_.size(); ++i)
      if (entries_[i] > o.entries_[i]) return false;
    return true;
  }

  // o - this, assuming this divides o
  Exponent quotient_of(const Exponent& o) const {
    Exponent out = o;
    for (size_t i = 0; i < entries_.size(); ++i) out.entries_[i] -= entries_[i];
    return out;
  }

  Exponent lcm(const Exponent& o) const {
    Exponent out = *this;
    for (size_t i = 0; i < entries_.size(); ++i)
      if (o.entries_[i] > out.entries_[i]) out.entries_[i] = o.entries_[i];
    return out;
  }

  // Container order (entries-lexicographic), independent of any monomial order.
  auto operator<=>(const Exponent&) const = default;

 private:
  std::vector<int> entries_;
};

// All exponents of the given total degree, in descending container order
// (x_0-heavy first). Deterministic; used as the canonical slice listing.
std::vector<Exponent> degree_slice(int nvars, int degree);

}  // namespace hilbstrata
