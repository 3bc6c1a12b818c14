// Serial reference against OpenMP for the two hot loops: boundary sums over
// n at many K, and the exact telescoping grid check.

#include <benchmark/benchmark.h>

#include "wz/accelerate.hpp"
#include "wz/kernels.hpp"

namespace {

const wz::WZPair& pair42() {
  static const wz::WZPair p =
      wz::build_wz_pair(wz::parse_base(wz::SeriesKind::omega, "3/2,1/2,1,1,1"), wz::parse_pattern("3,0,1,2,2"));
  return p;
}

void sums(benchmark::State& state, wz::Exec exec) {
  wz::PrecisionContext ctx;
  ctx.digits = static_cast<int>(state.range(0));
  const wz::HypergeometricTerm g = pair42().G();
  std::vector<long> ks;
  for (int j = 0; j < 8; ++j) ks.push_back(50L << j);
  for (auto _ : state) benchmark::DoNotOptimize(wz::sums_over_n(g, ks, ctx, exec));
}

void grid(benchmark::State& state, wz::Exec exec) {
  const wz::WZPair& p = pair42();
  const wz::HypergeometricTerm g = p.G();
  const long size = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(wz::telescoping_failures(p.F, g, size, size, exec));
}

}  // namespace

BENCHMARK_CAPTURE(sums, serial, wz::Exec::serial)->Arg(30)->Arg(100)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(sums, parallel, wz::Exec::parallel)->Arg(30)->Arg(100)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(grid, serial, wz::Exec::serial)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(grid, parallel, wz::Exec::parallel)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
