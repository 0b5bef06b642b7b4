#include <benchmark/benchmark.h>

#include "sidon/constructors.hpp"
#include "sidon/verifier.hpp"

using namespace sidon;

static void IntervalVerify(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const std::uint64_t H = static_cast<std::uint64_t>(state.range(1));
  Nat N(1000000);
  VerifyOptions opts{1, 10000000};
  std::uint64_t pairs = 0;
  for (auto _ : state) {
    SidonReport rep = verify_interval(k, N, Nat(H), opts);
    pairs += rep.pairs_examined;
    benchmark::DoNotOptimize(rep.verdict);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(pairs));
}
BENCHMARK(IntervalVerify)
    ->Args({2, 256})
    ->Args({2, 1024})
    ->Args({3, 256})
    ->Args({4, 256})
    ->Args({4, 1024});

static void BigSumVerify(benchmark::State& state) {
  // Past the machine-word limit for k=4: exercises the big-integer path.
  Nat N = ipow(Nat(10), 9);
  VerifyOptions opts{1, 10000000};
  for (auto _ : state) {
    SidonReport rep = verify_interval(4, N, Nat(state.range(0)), opts);
    benchmark::DoNotOptimize(rep.verdict);
  }
}
BENCHMARK(BigSumVerify)->Arg(128)->Arg(512);

static void ThresholdResolve(benchmark::State& state) {
  Nat N("123456789123456789");
  IntervalSpec sp{3, N, ThresholdKind::cubes_open()};
  for (auto _ : state) {
    Nat top = max_admissible(sp);
    benchmark::DoNotOptimize(top.get_mpz_t());
  }
}
BENCHMARK(ThresholdResolve);

static void ChainWalk(benchmark::State& state) {
  for (auto _ : state) {
    PellSolution s = pell_at(static_cast<unsigned>(state.range(0)));
    benchmark::DoNotOptimize(s.B.get_mpz_t());
  }
}
BENCHMARK(ChainWalk)->Arg(10)->Arg(50);

static void SquaresConstruct(benchmark::State& state) {
  Rng rng(1);
  for (auto _ : state) {
    Nat N = rng.uniform_nat(Nat(1000), ipow(Nat(10), 12));
    SquaresTrace tr = squares_quadruple(N);
    benchmark::DoNotOptimize(tr.l.get_mpz_t());
  }
}
BENCHMARK(SquaresConstruct);

static void QuarticShortInterval(benchmark::State& state) {
  Rng rng(2);
  for (auto _ : state) {
    Nat N = rng.uniform_nat(Nat(8192), ipow(Nat(10), 16));
    PowerQuadruple q = quartic_short_interval(N);
    benchmark::DoNotOptimize(q.x.get_mpz_t());
  }
}
BENCHMARK(QuarticShortInterval);

BENCHMARK_MAIN();
