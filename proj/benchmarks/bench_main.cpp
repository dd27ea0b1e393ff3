#include <benchmark/benchmark.h>

#include <vector>

#include "epq/numeric.hpp"
#include "epq/primes.hpp"
#include "epq/scan.hpp"
#include "epq/witness.hpp"

namespace {

// Row of pairs (p, q) with p fixed, so each iteration does a realistic mix of
// early exits and full b loops.
void BM_FindWitness(benchmark::State& state) {
  const auto c = static_cast<epq::SolvableCase>(state.range(0));
  const auto prefilter = state.range(1) ? epq::Prefilter::Mod4 : epq::Prefilter::Off;
  const epq::PrimeTable table(6997);
  const auto primes = table.odd_primes();
  const epq::Natural p = 101;
  std::vector<epq::Natural> qs;
  for (auto q : primes)
    if (q > 101) qs.emplace_back(q);
  std::size_t hits = 0;
  for (auto _ : state) {
    for (const auto& q : qs) hits += epq::find_witness(c, p, q, epq::kDefaultBMax, prefilter).has_value();
  }
  benchmark::DoNotOptimize(hits);
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * qs.size()));
}
BENCHMARK(BM_FindWitness)
    ->ArgNames({"case", "mod4"})
    ->ArgsProduct({{17, 26, 32, 40, 47, 56}, {0, 1}})
    ->Unit(benchmark::kMicrosecond);

void BM_Isqrt(benchmark::State& state) {
  const epq::Natural n = (epq::Natural(1) << static_cast<unsigned long>(state.range(0))) - 12345;
  for (auto _ : state) benchmark::DoNotOptimize(epq::isqrt(n));
}
BENCHMARK(BM_Isqrt)->RangeMultiplier(4)->Range(16, 4096);

void BM_PerfectSquareMiss(benchmark::State& state) {
  const epq::Natural n = epq::Natural(6991) * 6997 * epq::Natural(200) * 200 * 200 * 200 - 1;
  for (auto _ : state) benchmark::DoNotOptimize(epq::perfect_square_root(n));
}
BENCHMARK(BM_PerfectSquareMiss);

void BM_Sieve(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(epq::sieve(static_cast<std::uint32_t>(state.range(0))).pi(state.range(0)));
}
BENCHMARK(BM_Sieve)->Arg(6997)->Arg(1000000);

void BM_Scan(benchmark::State& state) {
  epq::ScanConfig cfg;
  cfg.case_id = static_cast<epq::SolvableCase>(state.range(0));
  cfg.p_max = 1500;
  const epq::PrimeTable table(cfg.p_max);
  for (auto _ : state) benchmark::DoNotOptimize(epq::scan(cfg, table, 1).report.count());
}
BENCHMARK(BM_Scan)->Arg(17)->Arg(40)->Arg(47)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
