#include "hilbstrata/cli.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "hilbstrata/groebner.hpp"
#include "hilbstrata/parse.hpp"

namespace hilbstrata {

namespace {

std::vector<int> parse_precedence(const std::string& text,
                                  const std::vector<std::string>& names) {
  std::vector<int> prec;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, '>')) {
    auto strip = [](std::string s) {
      size_t a = s.find_first_not_of(" \t");
      size_t b = s.find_last_not_of(" \t");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    tok = strip(tok);
    auto it = std::find(names.begin(), names.end(), tok);
    if (it == names.end())
      throw std::invalid_argument("unknown variable in precedence: " + tok);
    prec.push_back(static_cast<int>(it - names.begin()));
  }
  if (prec.size() != names.size())
    throw std::invalid_argument("precedence must list every variable");
  return prec;
}

std::string render_tvariable(const TVariable& v,
                             const std::vector<std::string>& names) {
  return "T[" + render_monomial(v.corner, names) + "," +
         render_monomial(v.tail, names) + "]";
}

std::string render_tpoly(const TPolynomial& f,
                         const std::vector<TVariable>& vars,
                         const std::vector<std::string>& names) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    first = false;
    bool unit = (a == 1) && !m.empty();
    if (!unit) out += to_string(a);
    for (size_t i = 0; i < m.size(); ++i) {
      if (!unit || i) out += "*";
      out += render_tvariable(vars[static_cast<size_t>(m[i])], names);
    }
  }
  return out;
}

Rational small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

int cmd_gotzmann(const RunConfig& cfg, std::ostream& out) {
  HilbertPolynomial P =
      macaulay_decomposition(parse_hilbert_polynomial(cfg.P_text));
  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["P"] = cfg.P_text;
    j["r"] = P.gotzmann;
    j["a"] = P.macaulay;
    out << j.dump(2) << "\n";
  } else {
    out << "r = " << P.gotzmann << "\na = (";
    for (size_t i = 0; i < P.macaulay.size(); ++i)
      out << (i ? ", " : "") << P.macaulay[i];
    out << ")\n";
  }
  return 0;
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
  HilbertPolynomial P =
      macaulay_decomposition(parse_hilbert_polynomial(cfg.P_text));
  MonomialOrder order = make_order(cfg);
  auto names = default_names(cfg.n);
  auto ideals = enumerate_M(P, cfg.n);
  std::vector<std::string> keys;
  for (const auto& J : ideals) keys.push_back(ideal_key(J, order, names));
  std::sort(keys.begin(), keys.end());
  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["P"] = cfg.P_text;
    j["n"] = cfg.n;
    j["count"] = ideals.size();
    j["ideals"] = keys;
    out << j.dump(2) << "\n";
  } else {
    out << "count = " << ideals.size() << "\n";
    for (const auto& k : keys) out << "<" << k << ">\n";
  }
  return 0;
}

int cmd_decompose(const RunConfig& cfg, std::ostream& out) {
  HilbertPolynomial P =
      macaulay_decomposition(parse_hilbert_polynomial(cfg.P_text));
  MonomialOrder order = make_order(cfg);
  DecompositionReport rep = decompose(P, cfg.P_text, cfg.n, order, cfg.jobs);
  if (cfg.format == "json")
    render_json(rep, out);
  else if (cfg.format == "csv")
    render_csv(rep, out);
  else
    render_text(rep, out);
  return 0;
}

int cmd_stratum(const RunConfig& cfg, std::ostream& out) {
  HilbertPolynomial P =
      macaulay_decomposition(parse_hilbert_polynomial(cfg.P_text));
  MonomialOrder order = make_order(cfg);
  auto names = default_names(cfg.n);
  auto gens = parse_monomial_ideal(cfg.ideal_text, cfg.n, names);
  CornerSet J = corner_set_from_generators(gens, P, cfg.n);
  ChartCounts counts = chart_counts(P, cfg.n);
  WeightVector omega =
      WeightVector::realize(order, cfg.n, static_cast<int>(counts.r));
  MarkedFamily fam = build_family(J, order, omega);
  StratumPresentation pres = stratum_equations(fam);
  StratumClassification cls = classify(pres);
  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["key"] = ideal_key(J, order, names);
    std::vector<std::string> vars;
    for (const auto& v : pres.variables)
      vars.push_back(render_tvariable(v, names));
    j["variables"] = vars;
    j["weights"] = pres.weights;
    std::vector<std::string> eqs;
    for (const auto& e : pres.equations)
      eqs.push_back(render_tpoly(e, pres.variables, names));
    j["equations"] = eqs;
    j["tangent_dim"] = cls.tangent_dim;
    j["verdict"] = cls.affine_cell ? "cell" : "singular";
    if (cls.affine_cell)
      j["cell_dim"] = cls.tangent_dim;
    else
      j["cell_dim"] = nullptr;
    out << j.dump(2) << "\n";
  } else {
    out << "ideal <" << ideal_key(J, order, names) << ">\n";
    out << "variables (" << pres.variables.size() << "):\n";
    for (size_t i = 0; i < pres.variables.size(); ++i)
      out << "  " << render_tvariable(pres.variables[i], names)
          << "  weight " << pres.weights[i] << "\n";
    out << "equations (" << pres.equations.size() << "):\n";
    for (const auto& e : pres.equations)
      out << "  " << render_tpoly(e, pres.variables, names) << "\n";
    out << "tangent_dim = " << cls.tangent_dim << "\n";
    if (cls.affine_cell)
      out << "verdict: affine cell of dimension " << cls.tangent_dim << "\n";
    else
      out << "verdict: singular at the monomial point (tangent dim "
          << cls.tangent_dim << ")\n";
  }
  return 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  HilbertPolynomial P =
      macaulay_decomposition(parse_hilbert_polynomial(cfg.P_text));
  MonomialOrder order = make_order(cfg);
  ChartCounts counts = chart_counts(P, cfg.n);
  WeightVector omega =
      WeightVector::realize(order, cfg.n, static_cast<int>(counts.r));
  auto names = default_names(cfg.n);
  std::mt19937_64 rng(cfg.seed);
  int cap = static_cast<int>(counts.r) + 3;

  size_t smooth = 0, checked = 0, failures = 0;
  for (const auto& J : enumerate_M(P, cfg.n)) {
    MarkedFamily fam = build_family(J, order, omega);
    StratumPresentation pres = stratum_equations(fam);
    StratumClassification cls = classify(pres);
    if (!cls.affine_cell) continue;
    ++smooth;
    for (int s = 0; s < cfg.samples; ++s) {
      std::vector<Rational> free_values;
      for (size_t i = 0; i < cls.free_vars.size(); ++i)
        free_values.push_back(small_rational(rng));
      auto point = cell_point(cls, fam.variables.size(), free_values);
      auto gens = specialize(fam, point);
      auto leads = initial_ideal(gens, order, cap);
      ++checked;
      if (leads != J.corners) {
        ++failures;
        err << "initial ideal mismatch on <" << ideal_key(J, order, names)
            << ">\n";
      }
    }
  }
  out << "smooth strata: " << smooth << ", points checked: " << checked
      << ", mismatches: " << failures << "\n";
  return failures == 0 ? 0 : 2;
}

}  // namespace

MonomialOrder make_order(const RunConfig& cfg) {
  OrderKind kind;
  if (cfg.order_name == "lex")
    kind = OrderKind::Lex;
  else if (cfg.order_name == "degrevlex")
    kind = OrderKind::DegRevLex;
  else
    throw std::invalid_argument("unsupported order: " + cfg.order_name);
  if (cfg.precedence.empty()) return MonomialOrder(kind, cfg.n + 1);
  return MonomialOrder(kind,
                       parse_precedence(cfg.precedence, default_names(cfg.n)));
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    std::ofstream file;
    std::ostream* sink = &out;
    if (!cfg.out_path.empty()) {
      file.open(cfg.out_path);
      if (!file) {
        err << "cannot open output file: " << cfg.out_path << "\n";
        return 1;
      }
      sink = &file;
    }
    if (cfg.command == "gotzmann") return cmd_gotzmann(cfg, *sink);
    if (cfg.command == "enumerate") return cmd_enumerate(cfg, *sink);
    if (cfg.command == "decompose") return cmd_decompose(cfg, *sink);
    if (cfg.command == "stratum") return cmd_stratum(cfg, *sink);
    if (cfg.command == "verify") return cmd_verify(cfg, *sink, err);
    err << "unknown command: " << cfg.command << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace hilbstrata
