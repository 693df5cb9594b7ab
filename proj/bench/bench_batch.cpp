#include <benchmark/benchmark.h>

#include <random>

#include "mt/batch.hpp"
#include "mt/diffeo.hpp"

using namespace mt;

namespace {

std::vector<CurveGerm> curves(int n) {
  std::mt19937_64 rng(7);
  std::vector<CurveGerm> out;
  for (int i = 0; i < n; ++i) {
    auto t = [](int d) { return d == 0 ? TruncSeries(24) : TruncSeries::monomial(1, d, 24); };
    CurveGerm c = i % 2 ? CurveGerm(t(3), t(5), t(7)) : CurveGerm(t(3), t(4), t(0));
    out.push_back(jet_eval_on_curve(sample_jet(rng).jet(), c));
  }
  return out;
}

std::vector<DiffeoJet> jets(int n) {
  std::mt19937_64 rng(8);
  std::vector<DiffeoJet> out;
  for (int i = 0; i < n; ++i) out.push_back(sample_jet(rng));
  return out;
}

void BM_Semigroups(benchmark::State& st) {
  auto cs = curves(16);
  Exec e = st.range(0) ? Exec::parallel : Exec::serial;
  for (auto _ : st) benchmark::DoNotOptimize(batch_semigroups(cs, 20, e));
}

void BM_ProlongApply(benchmark::State& st) {
  auto js = jets(16);
  TowerPoint p({0, 1, 1}, std::vector<Rational>(9, 0));
  Exec e = st.range(0) ? Exec::parallel : Exec::serial;
  for (auto _ : st) benchmark::DoNotOptimize(batch_prolong_apply(js, p, e));
}

}  // namespace

BENCHMARK(BM_Semigroups)->Arg(0)->Arg(1)->ArgNames({"parallel"})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ProlongApply)->Arg(0)->Arg(1)->ArgNames({"parallel"})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
