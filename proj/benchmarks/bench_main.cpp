#include <benchmark/benchmark.h>

#include "hilbstrata/enumerate.hpp"
#include "hilbstrata/groebner.hpp"
#include "hilbstrata/report.hpp"
#include "hilbstrata/stratum.hpp"

using namespace hilbstrata;

namespace {

HilbertPolynomial dec(const std::string& s) {
  return macaulay_decomposition(parse_hilbert_polynomial(s));
}

void BM_enumerate_2t2(benchmark::State& state) {
  HilbertPolynomial P = dec("2t+2");
  for (auto _ : state) {
    auto M = enumerate_M(P, 3);
    benchmark::DoNotOptimize(M);
  }
}
BENCHMARK(BM_enumerate_2t2)->Unit(benchmark::kMillisecond);

void BM_stratum_equations_2t1(benchmark::State& state) {
  HilbertPolynomial P = dec("2t+1");
  ChartCounts c = chart_counts(P, 3);
  MonomialOrder order(OrderKind::DegRevLex, 4);
  WeightVector omega = WeightVector::realize(order, 3, static_cast<int>(c.r));
  auto M = enumerate_M(P, 3);
  for (auto _ : state) {
    for (const auto& J : M) {
      auto pres = stratum_equations(build_family(J, order, omega));
      benchmark::DoNotOptimize(pres);
    }
  }
}
BENCHMARK(BM_stratum_equations_2t1)->Unit(benchmark::kMillisecond);

void BM_classify_2t1(benchmark::State& state) {
  HilbertPolynomial P = dec("2t+1");
  ChartCounts c = chart_counts(P, 3);
  MonomialOrder order(OrderKind::DegRevLex, 4);
  WeightVector omega = WeightVector::realize(order, 3, static_cast<int>(c.r));
  auto M = enumerate_M(P, 3);
  std::vector<StratumPresentation> pres;
  for (const auto& J : M)
    pres.push_back(stratum_equations(build_family(J, order, omega)));
  for (auto _ : state) {
    for (const auto& p : pres) {
      auto cls = classify(p);
      benchmark::DoNotOptimize(cls);
    }
  }
}
BENCHMARK(BM_classify_2t1)->Unit(benchmark::kMillisecond);

void BM_decompose_t1(benchmark::State& state) {
  HilbertPolynomial P = dec("t+1");
  MonomialOrder order(OrderKind::DegRevLex, 4);
  for (auto _ : state) {
    auto rep = decompose(P, "t+1", 3, order);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_decompose_t1)->Unit(benchmark::kMillisecond);

void BM_buchberger_specialized(benchmark::State& state) {
  HilbertPolynomial P = dec("2t+1");
  ChartCounts c = chart_counts(P, 3);
  MonomialOrder order(OrderKind::DegRevLex, 4);
  WeightVector omega = WeightVector::realize(order, 3, static_cast<int>(c.r));
  auto M = enumerate_M(P, 3);
  MarkedFamily fam = build_family(M.front(), order, omega);
  std::vector<Rational> point(fam.variables.size(), Rational(1, 2));
  auto gens = specialize(fam, point);
  for (auto _ : state) {
    auto leads = initial_ideal(gens, order, static_cast<int>(c.r) + 3);
    benchmark::DoNotOptimize(leads);
  }
}
BENCHMARK(BM_buchberger_specialized)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
