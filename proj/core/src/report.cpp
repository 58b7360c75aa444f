#include "hilbstrata/report.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "hilbstrata/parse.hpp"

namespace hilbstrata {

DecompositionReport decompose(const HilbertPolynomial& P,
                              const std::string& P_text, int n,
                              const MonomialOrder& order, int jobs) {
  DecompositionReport rep;
  rep.P_text = P_text;
  rep.n = n;
  rep.order_name = order.name();
  rep.names = default_names(n);

  ChartCounts counts = chart_counts(P, n);
  WeightVector omega =
      WeightVector::realize(order, n, static_cast<int>(counts.r));
  rep.omega = omega.entries();

  std::vector<CornerSet> ideals = enumerate_M(P, n);
  rep.rows.resize(ideals.size());

  auto work = [&](size_t i) {
    MarkedFamily fam = build_family(ideals[i], order, omega);
    StratumPresentation pres = stratum_equations(fam);
    StratumClassification cls = classify(pres);
    IdealRow row;
    row.ideal = ideals[i];
    row.key = ideal_key(ideals[i], order, rep.names);
    row.tangent_dim = cls.tangent_dim;
    row.affine = cls.affine_cell;
    row.cell_dim = cls.affine_cell ? cls.tangent_dim : -1;
    rep.rows[i] = std::move(row);
  };

  if (jobs <= 1 || ideals.size() < 2) {
    for (size_t i = 0; i < ideals.size(); ++i) work(i);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    int nthreads = std::min<int>(jobs, static_cast<int>(ideals.size()));
    for (int t = 0; t < nthreads; ++t)
      pool.emplace_back([&] {
        for (size_t i = next.fetch_add(1); i < ideals.size();
             i = next.fetch_add(1))
          work(i);
      });
    for (auto& t : pool) t.join();
  }

  std::sort(rep.rows.begin(), rep.rows.end(),
            [](const IdealRow& a, const IdealRow& b) { return a.key < b.key; });

  int max_cell = -1;
  for (const auto& row : rep.rows)
    if (row.affine) max_cell = std::max(max_cell, row.cell_dim);
  rep.betti.assign(static_cast<size_t>(max_cell + 1), 0);
  for (const auto& row : rep.rows) {
    if (row.affine) {
      ++rep.betti[static_cast<size_t>(row.cell_dim)];
    } else {
      rep.singular.push_back(row.key);
      rep.all_smooth = false;
    }
  }
  return rep;
}

std::vector<long> homology_ranks(const DecompositionReport& report) {
  if (!report.all_smooth)
    throw std::runtime_error("homology formula requires all strata smooth");
  long dim = static_cast<long>(report.betti.size()) - 1;
  std::vector<long> ranks(static_cast<size_t>(2 * dim + 1), 0);
  for (size_t m = 0; m < report.betti.size(); ++m)
    ranks[2 * m] = report.betti[m];
  return ranks;
}

std::vector<std::string> cell_order(const DecompositionReport& report,
                                    const WeightVector& omega) {
  std::vector<std::pair<long, std::string>> weighted;
  for (const auto& row : report.rows) {
    long w = 0;
    for (const auto& a : row.ideal.corners) w += omega.dot(a);
    weighted.emplace_back(w, row.key);
  }
  std::sort(weighted.begin(), weighted.end());
  std::vector<std::string> out;
  for (auto& [w, k] : weighted) out.push_back(std::move(k));
  return out;
}

void render_text(const DecompositionReport& report, std::ostream& out) {
  out << "P = " << report.P_text << ", n = " << report.n
      << ", order = " << report.order_name << ", omega = (";
  for (size_t i = 0; i < report.omega.size(); ++i)
    out << (i ? "," : "") << report.omega[i];
  out << ")\n";
  out << "ideals: " << report.rows.size() << "\n";
  for (const auto& row : report.rows) {
    out << "  <" << row.key << ">  tangent_dim=" << row.tangent_dim << "  ";
    if (row.affine)
      out << "cell dim " << row.cell_dim;
    else
      out << "singular";
    out << "\n";
  }
  out << "betti:";
  for (long b : report.betti) out << " " << b;
  out << "\nsingular: " << report.singular.size() << "\n";
  for (const auto& k : report.singular) out << "  <" << k << ">\n";
}

void render_json(const DecompositionReport& report, std::ostream& out) {
  nlohmann::ordered_json j;
  j["P"] = report.P_text;
  j["n"] = report.n;
  j["order"] = report.order_name;
  j["omega"] = report.omega;
  j["ideals"] = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    nlohmann::ordered_json r;
    r["key"] = row.key;
    std::vector<std::string> gens;
    std::vector<Exponent> sorted = row.ideal.corners;
    for (const auto& g : sorted) gens.push_back(render_monomial(g, report.names));
    r["generators"] = gens;
    r["tangent_dim"] = row.tangent_dim;
    r["verdict"] = row.affine ? "cell" : "singular";
    if (row.affine)
      r["cell_dim"] = row.cell_dim;
    else
      r["cell_dim"] = nullptr;
    j["ideals"].push_back(std::move(r));
  }
  j["betti"] = report.betti;
  j["singular"] = report.singular;
  out << j.dump(2) << "\n";
}

void render_csv(const DecompositionReport& report, std::ostream& out) {
  out << "key,tangent_dim,verdict,cell_dim\n";
  for (const auto& row : report.rows) {
    out << '"' << row.key << '"' << ',' << row.tangent_dim << ','
        << (row.affine ? "cell" : "singular") << ',';
    if (row.affine) out << row.cell_dim;
    out << "\n";
  }
}

}  // namespace hilbstrata
