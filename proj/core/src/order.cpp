#include "hilbstrata/order.hpp"

#include <numeric>

namespace hilbstrata {

MonomialOrder::MonomialOrder(OrderKind kind, int nvars) : kind_(kind) {
  precedence_.resize(static_cast<size_t>(nvars));
  std::iota(precedence_.begin(), precedence_.end(), 0);
}

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<int> precedence)
    : kind_(kind), precedence_(std::move(precedence)) {
  std::vector<bool> seen(precedence_.size(), false);
  for (int v : precedence_) {
    if (v < 0 || v >= static_cast<int>(precedence_.size()) ||
        seen[static_cast<size_t>(v)])
      throw std::invalid_argument("precedence is not a permutation");
    seen[static_cast<size_t>(v)] = true;
  }
}

Cmp MonomialOrder::compare(const Exponent& a, const Exponent& b) const {
  if (a.degree() != b.degree())
    throw std::invalid_argument("compare: degree mismatch");
  if (kind_ == OrderKind::Lex) {
    for (int v : precedence_) {
      if (a[v] != b[v]) return a[v] > b[v] ? Cmp::Greater : Cmp::Less;
    }
    return Cmp::Equal;
  }
  // Graded reverse lex: scan from the lowest-precedence variable; the
  // monomial with the smaller exponent at the last differing position wins.
  for (auto it = precedence_.rbegin(); it != precedence_.rend(); ++it) {
    int v = *it;
    if (a[v] != b[v]) return a[v] < b[v] ? Cmp::Greater : Cmp::Less;
  }
  return Cmp::Equal;
}

namespace {

bool verify(const std::vector<long>& omega, const MonomialOrder& order, int n,
            int r) {
  for (int d : {r, r + 1}) {
    auto slice = degree_slice(n + 1, d);
    for (size_t i = 0; i < slice.size(); ++i) {
      long wi = 0;
      for (int v = 0; v <= n; ++v)
        wi += omega[static_cast<size_t>(v)] * slice[i][v];
      for (size_t j = i + 1; j < slice.size(); ++j) {
        long wj = 0;
        for (int v = 0; v <= n; ++v)
          wj += omega[static_cast<size_t>(v)] * slice[j][v];
        bool gt = order.greater(slice[i], slice[j]);
        if (gt != (wi > wj)) return false;
      }
    }
  }
  return true;
}

long ipow(long b, int e) {
  long out = 1;
  while (e-- > 0) out *= b;
  return out;
}

}  // namespace

WeightVector WeightVector::realize(const MonomialOrder& order, int n, int r) {
  if (r < 1) throw std::invalid_argument("realize_weight: r must be >= 1");
  const auto& prec = order.precedence();
  for (int attempt = 0; attempt < 32; ++attempt) {
    std::vector<long> omega(static_cast<size_t>(n + 1), 0);
    if (order.kind() == OrderKind::Lex) {
      // Geometric weights along the precedence chain. Base r+2 dominates
      // any single degree-(r+1) slice; doubled on (unexpected) failure.
      long base = static_cast<long>(r + 2) << attempt;
      for (int rank = 0; rank <= n; ++rank)
        omega[static_cast<size_t>(prec[static_cast<size_t>(rank)])] =
            ipow(base, n - rank);
    } else if (attempt == 0) {
      // Decreasing arithmetic weights; enough for small slices.
      for (int rank = 0; rank <= n; ++rank)
        omega[static_cast<size_t>(prec[static_cast<size_t>(rank)])] =
            n + 1 - rank;
    } else {
      // K^{n+1} - K^{rank+1} + 1 realizes degrevlex on a degree-d slice
      // once K exceeds 2d: with sum(a-b)=0 the dot difference collapses
      // to -sum_j (a-b)_{prec[j]} K^{j+1}, whose sign is decided by the
      // rightmost nonzero entry.
      long K = 3L << (attempt - 1);
      for (int rank = 0; rank <= n; ++rank)
        omega[static_cast<size_t>(prec[static_cast<size_t>(rank)])] =
            ipow(K, n + 1) - ipow(K, rank + 1) + 1;
    }
    if (verify(omega, order, n, r)) return WeightVector(std::move(omega));
  }
  throw std::runtime_error("realize_weight: no candidate verified");
}

}  // namespace hilbstrata
