#include "hilbstrata/parse.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace hilbstrata {

std::vector<std::string> default_names(int n) {
  if (n == 1) return {"x", "y"};
  if (n == 2) return {"x", "y", "z"};
  if (n == 3) return {"x", "y", "z", "w"};
  std::vector<std::string> names;
  for (int i = 0; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

std::string render_monomial(const Exponent& e,
                            const std::vector<std::string>& names) {
  std::string out;
  for (int i = 0; i < e.nvars(); ++i) {
    if (e[i] == 0) continue;
    out += names[static_cast<size_t>(i)];
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

std::string ideal_key(const CornerSet& J, const MonomialOrder& order,
                      const std::vector<std::string>& names) {
  std::vector<Exponent> gens = J.corners;
  std::sort(gens.begin(), gens.end(),
            [&](const Exponent& a, const Exponent& b) {
              return order.less(a, b);
            });
  std::string out;
  for (size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ", ";
    out += render_monomial(gens[i], names);
  }
  return out;
}

namespace {

Exponent parse_monomial(const std::string& tok, int n,
                        const std::vector<std::string>& names) {
  // longest-match on names so x1 beats x in x10
  std::vector<int> by_length(names.size());
  for (size_t i = 0; i < names.size(); ++i) by_length[i] = static_cast<int>(i);
  std::sort(by_length.begin(), by_length.end(), [&](int a, int b) {
    return names[static_cast<size_t>(a)].size() >
           names[static_cast<size_t>(b)].size();
  });

  std::vector<int> exps(static_cast<size_t>(n + 1), 0);
  size_t i = 0;
  bool any = false;
  while (i < tok.size()) {
    if (std::isspace(static_cast<unsigned char>(tok[i])) || tok[i] == '*') {
      ++i;
      continue;
    }
    int var = -1;
    for (int cand : by_length) {
      const std::string& nm = names[static_cast<size_t>(cand)];
      if (tok.compare(i, nm.size(), nm) == 0) {
        var = cand;
        i += nm.size();
        break;
      }
    }
    if (var < 0)
      throw std::invalid_argument("unknown variable in monomial: " + tok);
    int power = 1;
    if (i < tok.size() && tok[i] == '^') {
      ++i;
      size_t start = i;
      while (i < tok.size() &&
             std::isdigit(static_cast<unsigned char>(tok[i])))
        ++i;
      if (i == start)
        throw std::invalid_argument("malformed power in monomial: " + tok);
      power = std::stoi(tok.substr(start, i - start));
    }
    exps[static_cast<size_t>(var)] += power;
    any = true;
  }
  if (!any) throw std::invalid_argument("empty monomial");
  return Exponent(std::move(exps));
}

}  // namespace

std::vector<Exponent> parse_monomial_ideal(
    const std::string& text, int n, const std::vector<std::string>& names) {
  std::vector<Exponent> out;
  std::set<Exponent> seen;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string tok = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok.find_first_not_of(" \t") != std::string::npos) {
      Exponent e = parse_monomial(tok, n, names);
      if (!seen.insert(e).second)
        throw std::invalid_argument("duplicate generator: " + tok);
      out.push_back(std::move(e));
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace hilbstrata
