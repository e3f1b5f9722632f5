// OpenMP kernels against their serial references.
#include <benchmark/benchmark.h>

#include <random>

#include "dpgit/catalog.hpp"
#include "dpgit/enumer.hpp"
#include "dpgit/torus.hpp"

namespace {

using namespace dpgit;

// Rank-3 support with no destabilizing 1-PS of max-norm below 7.
Support thin_cone_support() { return {{-1, 1, 2}, {2, 1, -2}, {-1, 1, 0}, {-2, 1, -1}, {2, 0, 2}, {0, -1, 2}, {-2, 1, 0}}; }

Support random_support(int rank, int points, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> d(-4, 4);
  Support s(points, IntVec(rank));
  for (auto& v : s)
    for (auto& x : v) x = d(rng);
  return s;
}

void BM_certificate_parallel(benchmark::State& st) {
  const Support s = st.range(0) ? random_support(3, 8, 7) : thin_cone_support();
  for (auto _ : st)
    for (long b = 1; b <= 8; ++b) benchmark::DoNotOptimize(certificate_at_norm(s, b));
}

void BM_certificate_serial(benchmark::State& st) {
  const Support s = st.range(0) ? random_support(3, 8, 7) : thin_cone_support();
  for (auto _ : st)
    for (long b = 1; b <= 8; ++b) benchmark::DoNotOptimize(certificate_at_norm_serial(s, b));
}

void BM_tsweep_parallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(t_singularity_sweep(st.range(0)));
}

void BM_tsweep_serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(t_singularity_sweep_serial(st.range(0)));
}

void BM_catalog_parallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(verify_all(fixtures()));
}

void BM_catalog_serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(verify_all_serial(fixtures()));
}

}  // namespace

BENCHMARK(BM_certificate_parallel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_certificate_serial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_tsweep_parallel)->Arg(200)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_tsweep_serial)->Arg(200)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_catalog_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_catalog_serial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
