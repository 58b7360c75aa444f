#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hilbstrata/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Groebner-strata decomposition of Hilbert schemes"};
  app.require_subcommand(1);

  hilbstrata::RunConfig cfg;
  if (const char* env = std::getenv("HILB_STRATA_JOBS"))
    cfg.jobs = std::max(1, std::atoi(env));

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--order", cfg.order_name, "Monomial order")
        ->check(CLI::IsMember({"lex", "degrevlex"}));
    sub->add_option("--precedence", cfg.precedence,
                    "Variable precedence, e.g. \"x0>x1>x2\"");
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--out", cfg.out_path, "Write output to FILE");
    sub->add_option("--seed", cfg.seed, "Random seed (default 0)");
    sub->add_option("--jobs", cfg.jobs, "Worker threads");
  };

  auto* gotzmann = app.add_subcommand(
      "gotzmann", "Gotzmann number and Macaulay decomposition of P");
  gotzmann->add_option("P", cfg.P_text, "Hilbert polynomial in t")->required();
  add_common(gotzmann);

  auto* enumerate =
      app.add_subcommand("enumerate", "Enumerate the monomial ideals M_{P,n}");
  enumerate->add_option("P", cfg.P_text, "Hilbert polynomial in t")->required();
  enumerate->add_option("n", cfg.n, "Ambient projective dimension")->required();
  add_common(enumerate);

  auto* decompose = app.add_subcommand(
      "decompose", "Decompose Hilb^P(P^n) into Groebner strata");
  decompose->add_option("P", cfg.P_text, "Hilbert polynomial in t")->required();
  decompose->add_option("n", cfg.n, "Ambient projective dimension")->required();
  add_common(decompose);

  auto* stratum = app.add_subcommand(
      "stratum", "Defining equations and verdict for one monomial ideal");
  stratum->add_option("P", cfg.P_text, "Hilbert polynomial in t")->required();
  stratum->add_option("n", cfg.n, "Ambient projective dimension")->required();
  stratum->add_option("--ideal", cfg.ideal_text, "Degree-r generators")
      ->required();
  add_common(stratum);

  auto* verify = app.add_subcommand(
      "verify", "Check sampled stratum points against the Buchberger oracle");
  verify->add_option("P", cfg.P_text, "Hilbert polynomial in t")->required();
  verify->add_option("n", cfg.n, "Ambient projective dimension")->required();
  verify->add_option("--samples", cfg.samples, "Points per smooth stratum");
  add_common(verify);

  CLI11_PARSE(app, argc, argv);

  cfg.command = app.get_subcommands().front()->get_name();
  return hilbstrata::run(cfg, std::cout, std::cerr);
}
