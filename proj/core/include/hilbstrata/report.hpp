#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "hilbstrata/enumerate.hpp"
#include "hilbstrata/order.hpp"
#include "hilbstrata/stratum.hpp"

namespace hilbstrata {

struct IdealRow {
  CornerSet ideal;
  std::string key;
  int tangent_dim = 0;
  bool affine = false;
  int cell_dim = -1;  // valid only when affine
};

// Aggregate decomposition of Hilb^P(P^n) under one monomial order.
struct DecompositionReport {
  std::string P_text;
  int n = 0;
  std::string order_name;
  std::vector<long> omega;
  std::vector<std::string> names;
  std::vector<IdealRow> rows;       // sorted by key
  std::vector<long> betti;          // affine-cell counts per dimension
  std::vector<std::string> singular;
  bool all_smooth = true;
};

// Full pipeline: enumerate, build families, derive equations, classify.
// Per-ideal work is independent; jobs > 1 splits it across threads with a
// schedule-independent result.
DecompositionReport decompose(const HilbertPolynomial& P,
                              const std::string& P_text, int n,
                              const MonomialOrder& order, int jobs = 1);

// H_{2m} ranks mirror the betti counts, odd ranks vanish. Throws
// std::runtime_error when any stratum is singular.
std::vector<long> homology_ranks(const DecompositionReport& report);

// Heuristic closure-filtration order: ascending total corner weight,
// ties by key. Advisory only.
std::vector<std::string> cell_order(const DecompositionReport& report,
                                    const WeightVector& omega);

void render_text(const DecompositionReport& report, std::ostream& out);
void render_json(const DecompositionReport& report, std::ostream& out);
void render_csv(const DecompositionReport& report, std::ostream& out);

}  // namespace hilbstrata
