#pragma once

#include <ostream>
#include <string>

#include "hilbstrata/report.hpp"

namespace hilbstrata {

// Parsed command-line configuration. `run` is the whole pipeline behind
// the CLI so tests can drive it directly.
struct RunConfig {
  std::string command;  // gotzmann | enumerate | decompose | stratum | verify
  std::string P_text;
  int n = 1;
  std::string order_name = "degrevlex";
  std::string precedence;  // "x0>x1>..." (empty = default)
  std::string format = "text";  // text | json | csv
  std::string out_path;         // empty = the stream passed to run
  unsigned long seed = 0;
  int jobs = 1;
  std::string ideal_text;  // stratum subcommand
  int samples = 3;         // verify subcommand
};

MonomialOrder make_order(const RunConfig& cfg);

// Exit status: 0 success, 1 usage/input error, 2 verification failure.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace hilbstrata
