#pragma once

#include <string>
#include <vector>

#include "hilbstrata/enumerate.hpp"
#include "hilbstrata/exponent.hpp"
#include "hilbstrata/order.hpp"

namespace hilbstrata {

// Default variable names: (x,y) for n=1, (x,y,z) for n=2, (x,y,z,w) for
// n=3, x0..xn otherwise.
std::vector<std::string> default_names(int n);

// "x^2y", "z*w^2", "1" for the unit monomial.
std::string render_monomial(const Exponent& e,
                            const std::vector<std::string>& names);

// Canonical string form of a corner set: generators ascending under the
// active order, comma separated.
std::string ideal_key(const CornerSet& J, const MonomialOrder& order,
                      const std::vector<std::string>& names);

// Comma-separated monomials with ^ powers and implicit or explicit *.
// Duplicates rejected. Throws std::invalid_argument.
std::vector<Exponent> parse_monomial_ideal(const std::string& text, int n,
                                           const std::vector<std::string>& names);

}  // namespace hilbstrata
