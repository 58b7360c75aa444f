#include "hilbstrata/enumerate.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hilbstrata {

std::set<Exponent> expansion(const std::vector<Exponent>& corners, int n) {
  std::set<Exponent> out;
  for (const auto& a : corners)
    for (int i = 0; i <= n; ++i) out.insert(a.plus(i));
  return out;
}

namespace {

// DFS over the degree-r slice. The expansion of a partial selection only
// grows as corners are added, so any partial set whose expansion already
// exceeds the target is dead.
struct Search {
  const std::vector<Exponent>& slice;
  int n;
  long corners_target;
  long expansion_target;
  std::vector<Exponent> chosen;
  std::map<Exponent, int> exp_counts;  // multiplicity, for cheap undo
  long exp_distinct = 0;
  std::vector<CornerSet>* out;
  long r;

  void add(const Exponent& a) {
    chosen.push_back(a);
    for (int i = 0; i <= n; ++i)
      if (++exp_counts[a.plus(i)] == 1) ++exp_distinct;
  }
  void remove(const Exponent& a) {
    chosen.pop_back();
    for (int i = 0; i <= n; ++i) {
      auto it = exp_counts.find(a.plus(i));
      if (--it->second == 0) {
        exp_counts.erase(it);
        --exp_distinct;
      }
    }
  }

  void run(size_t idx) {
    if (static_cast<long>(chosen.size()) == corners_target) {
      if (exp_distinct == expansion_target) {
        CornerSet cs;
        cs.n = n;
        cs.r = r;
        cs.corners = chosen;
        std::sort(cs.corners.begin(), cs.corners.end());
        out->push_back(std::move(cs));
      }
      return;
    }
    long needed = corners_target - static_cast<long>(chosen.size());
    if (static_cast<long>(slice.size() - idx) < needed) return;
    if (exp_distinct > expansion_target) return;
    run(idx + 1);
    add(slice[idx]);
    run(idx + 1);
    remove(slice[idx]);
  }
};

}  // namespace

std::vector<CornerSet> enumerate_M(const HilbertPolynomial& P, int n) {
  ChartCounts counts = chart_counts(P, n);
  auto slice = degree_slice(n + 1, static_cast<int>(counts.r));
  std::vector<CornerSet> out;
  Search s{slice, n, counts.corners_target, counts.expansion_target,
           {},    {}, 0,                   &out,
           counts.r};
  s.run(0);
  std::sort(out.begin(), out.end());
  for (auto& cs : out) {
    std::set<Exponent> corner_set(cs.corners.begin(), cs.corners.end());
    for (const auto& e : slice)
      if (!corner_set.count(e)) cs.delta_r.push_back(e);
    std::sort(cs.delta_r.begin(), cs.delta_r.end());
  }
  return out;
}

CornerSet corner_set_from_generators(const std::vector<Exponent>& generators,
                                     const HilbertPolynomial& P, int n) {
  ChartCounts counts = chart_counts(P, n);
  for (const auto& g : generators) {
    if (g.nvars() != n + 1)
      throw std::invalid_argument("generator has wrong number of variables");
    if (g.degree() != counts.r)
      throw std::invalid_argument("generator degree differs from Gotzmann number");
  }
  std::set<Exponent> uniq(generators.begin(), generators.end());
  if (static_cast<long>(uniq.size()) != counts.corners_target)
    throw std::invalid_argument("wrong number of generators for M_{P,n}");
  std::vector<Exponent> corners(uniq.begin(), uniq.end());
  if (static_cast<long>(expansion(corners, n).size()) !=
      counts.expansion_target)
    throw std::invalid_argument("ideal is not an element of M_{P,n}");
  CornerSet cs;
  cs.n = n;
  cs.r = counts.r;
  cs.corners = std::move(corners);
  for (const auto& e : degree_slice(n + 1, static_cast<int>(counts.r)))
    if (!uniq.count(e)) cs.delta_r.push_back(e);
  std::sort(cs.delta_r.begin(), cs.delta_r.end());
  return cs;
}

}  // namespace hilbstrata
