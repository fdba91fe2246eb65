#include <benchmark/benchmark.h>

#include <vector>

#include "cpimm/atlas.hpp"
#include "cpimm/checks.hpp"
#include "cpimm/conditions.hpp"
#include "cpimm/congruence.hpp"
#include "cpimm/dyadic.hpp"
#include "cpimm/series.hpp"

namespace {

using namespace cpimm;

void BM_PowTrunc(benchmark::State& state) {
  const TruncatedSeries base = log_over_t_series(8);
  const auto m = static_cast<unsigned long long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pow_trunc(base, m));
}
BENCHMARK(BM_PowTrunc)->Arg(503)->Arg(8191)->Arg(131071);

void BM_ValuationVector(benchmark::State& state) {
  const auto m = static_cast<long long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(valuation_vector(m));
}
BENCHMARK(BM_ValuationVector)->Arg(503)->Arg(8191);

void BM_SigristSuter(benchmark::State& state) {
  const auto n = static_cast<long long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sigrist_suter(n));
}
BENCHMARK(BM_SigristSuter)->Arg(255)->Arg(16383);

void BM_CrabbCp(benchmark::State& state) {
  const auto p = static_cast<long long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(crabb_cp_system(p));
}
BENCHMARK(BM_CrabbCp)->Arg(31)->Arg(511);

void BM_CrabbHp(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(crabb_hp_system(512));
}
BENCHMARK(BM_CrabbHp);

void BM_SolveSystem(benchmark::State& state) {
  const std::vector<CongruenceConstraint> cs = crabb_cp_system(31).constraints;
  for (auto _ : state) benchmark::DoNotOptimize(solve_system(cs));
}
BENCHMARK(BM_SolveSystem);

void BM_NuBinomial(benchmark::State& state) {
  for (auto _ : state) {
    Valuation acc = 0;
    for (long long p = 1; p <= 1024; ++p)
      acc = acc + nu_binomial(-(4 * p + 2), 4 * p - 1);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_NuBinomial);

void BM_ImmersionRecord(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(immersion_record(16383));
}
BENCHMARK(BM_ImmersionRecord);

void BM_AtlasRange(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(atlas_records(4, 128));
}
BENCHMARK(BM_AtlasRange);

}  // namespace

BENCHMARK_MAIN();
