#include <benchmark/benchmark.h>

#include "unimap/kernels.hpp"

using namespace unimap;

namespace {

constexpr std::uint64_t kSeed = 12345;

void BM_CensusSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(census_serial(static_cast<int>(st.range(0))));
}
void BM_CensusParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(census_parallel(static_cast<int>(st.range(0))));
}

void BM_RootDegreeSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(root_degree_tally_serial(2000, 500, 200, kSeed));
}
void BM_RootDegreeParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(root_degree_tally_parallel(2000, 500, 200, kSeed));
}

void BM_BallSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(ball_tally_serial(2000, 500, 2, 200, kSeed));
}
void BM_BallParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(ball_tally_parallel(2000, 500, 2, 200, kSeed));
}

void BM_GwBallSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(gw_ball_tally_serial(0.3, 3, 5000, kSeed));
}
void BM_GwBallParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(gw_ball_tally_parallel(0.3, 3, 5000, kSeed));
}

void BM_DegreeProfileSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(degree_profile_serial(0.1018, 12, 2000, kSeed));
}
void BM_DegreeProfileParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(degree_profile_parallel(0.1018, 12, 2000, kSeed));
}

}  // namespace

BENCHMARK(BM_CensusSerial)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusParallel)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RootDegreeSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RootDegreeParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BallSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BallParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GwBallSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GwBallParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DegreeProfileSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DegreeProfileParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
