#include <benchmark/benchmark.h>

#include <qtheta/multisum.hpp>
#include <qtheta/qfactory.hpp>
#include <qtheta/qpolynomial.hpp>

namespace {

using namespace qtheta;

void BM_SeriesMul(benchmark::State& state) {
  std::int64_t b = state.range(0);
  Series f = poch_inf(Monomial::q(1), 1, 1, b);
  Series g = reciprocal(f);
  for (auto _ : state) benchmark::DoNotOptimize(mul(f, g));
}
BENCHMARK(BM_SeriesMul)->Arg(100)->Arg(200)->Arg(400);

void BM_Reciprocal(benchmark::State& state) {
  std::int64_t b = state.range(0);
  Series f = poch_inf(Monomial::q(1), 1, 1, b);
  for (auto _ : state) benchmark::DoNotOptimize(reciprocal(f));
}
BENCHMARK(BM_Reciprocal)->Arg(100)->Arg(200)->Arg(400);

void BM_BinomialRow(benchmark::State& state) {
  long long n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(qbinomial_row(n));
}
BENCHMARK(BM_BinomialRow)->Arg(41)->Arg(81);

void BM_Multisum(benchmark::State& state) {
  std::int64_t b = state.range(0);
  for (auto _ : state) {
    PochCache cache(1, b);
    std::vector<SumLevel> levels(3);
    auto weight = [&](long long m) { return cache.inv(Monomial::q(1), 1, m); };
    benchmark::DoNotOptimize(free_multisum(levels, weight, cache));
  }
}
BENCHMARK(BM_Multisum)->Arg(50)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
