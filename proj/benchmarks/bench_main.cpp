#include <benchmark/benchmark.h>

#include <cstdlib>

#include "hser/engine.hpp"
#include "hser/poly.hpp"
#include "hser/ratfunc.hpp"
#include "hser/schur.hpp"

using namespace hser;

namespace {

struct CacheOff {
  // benchmarks must measure the computation, not the disk cache
  CacheOff() { setenv("HSER_CACHE_DIR", "", 1); }
} cache_off;

Poly cyclotomic_like(int reps) {
  Poly p = Poly::one();
  for (int k = 1; k <= reps; ++k) {
    std::vector<Rat> c(k + 1, Rat(0));
    c[0] = 1;
    c[k] = -1;
    p = p * Poly(std::move(c));
  }
  return p;
}

void BM_PolyGcd(benchmark::State& state) {
  Poly a = cyclotomic_like(static_cast<int>(state.range(0)));
  Poly b = cyclotomic_like(static_cast<int>(state.range(0)) - 2);
  for (auto _ : state) benchmark::DoNotOptimize(Poly::gcd(a, b));
}
BENCHMARK(BM_PolyGcd)->Arg(8)->Arg(16);

void BM_Series(benchmark::State& state) {
  RatFunc f(Poly::one(), cyclotomic_like(10));
  for (auto _ : state) benchmark::DoNotOptimize(f.series(state.range(0)));
}
BENCHMARK(BM_Series)->Arg(64)->Arg(256);

void BM_Invariant(benchmark::State& state) {
  ReprSpec spec = ReprSpec::of({state.range(0)});
  for (auto _ : state) benchmark::DoNotOptimize(invariant_hilbert(spec));
}
BENCHMARK(BM_Invariant)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_Onshell(benchmark::State& state) {
  ReprSpec spec = ReprSpec::of({state.range(0)});
  for (auto _ : state) benchmark::DoNotOptimize(onshell_hilbert(spec));
}
BENCHMARK(BM_Onshell)->Arg(5)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_SchurEval(benchmark::State& state) {
  long n = state.range(0);
  Partition rho;
  for (long v = n - 3, k = 0; k < 3; ++k) rho.push_back(v);
  for (long v = n - 4; v >= 0; --v) rho.push_back(v);
  std::vector<Rat> x;
  for (long i = 0; i < n; ++i) x.emplace_back(1 + i % 5);
  for (auto _ : state) benchmark::DoNotOptimize(schur_eval(rho, x));
}
BENCHMARK(BM_SchurEval)->Arg(8)->Arg(14)->Arg(20);

void BM_LaurentAtOne(benchmark::State& state) {
  RatFunc f = onshell_hilbert(ReprSpec::of({7}));
  for (auto _ : state) benchmark::DoNotOptimize(laurent_at_one(f, state.range(0)));
}
BENCHMARK(BM_LaurentAtOne)->Arg(3)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
