#include "hilbstrata/exponent.hpp"

#include <algorithm>

namespace hilbstrata {

namespace {
void fill_slice(std::vector<int>& cur, int pos, int remaining,
                std::vector<Exponent>& out) {
  if (pos == static_cast<int>(cur.size()) - 1) {
    cur[static_cast<size_t>(pos)] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur[static_cast<size_t>(pos)] = e;
    fill_slice(cur, pos + 1, remaining - e, out);
  }
  cur[static_cast<size_t>(pos)] = 0;
}
}  // namespace

std::vector<Exponent> degree_slice(int nvars, int degree) {
  std::vector<Exponent> out;
  std::vector<int> cur(static_cast<size_t>(nvars), 0);
  fill_slice(cur, 0, degree, out);
  return out;
}

}  // namespace hilbstrata
