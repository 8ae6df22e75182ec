#include <benchmark/benchmark.h>

#include <random>

#include "flatcyc/enumerate.hpp"
#include "flatcyc/growth.hpp"
#include "flatcyc/poly.hpp"
#include "flatcyc/primes.hpp"
#include "flatcyc/tori.hpp"

using namespace flatcyc;

namespace {

ResidueRing Zmod(long p, int j) { return ResidueRing::integers_mod(PrimePower::make(p, j)); }

void BM_RootsModChiB(benchmark::State& state) {
  const auto F = Zmod(state.range(0), 1);
  const IntPoly chi = chi_B();
  for (auto _ : state) benchmark::DoNotOptimize(roots_mod(chi, F));
}
BENCHMARK(BM_RootsModChiB)->Arg(31)->Arg(9973)->Arg(99991);

void BM_SplitPrimesSO(benchmark::State& state) {
  CaseSpec s;
  s.kind = CaseKind::SO;
  for (auto _ : state) benchmark::DoNotOptimize(good_primes_for_case(s, static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_SplitPrimesSO)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_CountSL2(benchmark::State& state) {
  const auto R = Zmod(state.range(0), 2);
  for (auto _ : state) benchmark::DoNotOptimize(count_sl2_bruteforce(R));
}
BENCHMARK(BM_CountSL2)->Arg(3)->Arg(7)->Arg(13)->Unit(benchmark::kMillisecond);

void BM_EnumerateOrthogonalQ2(benchmark::State& state) {
  const auto T = TableRing::build(Zmod(state.range(0), 1));
  const QuadForm Q = build_Qn(2);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_orthogonal(T, Q, 1e12));
}
BENCHMARK(BM_EnumerateOrthogonalQ2)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_SoDiagonalizeB(benchmark::State& state) {
  const auto R = Zmod(31, static_cast<int>(state.range(0)));
  const IntMatrix B = build_B();
  const QuadForm Q = build_Qn(2);
  for (auto _ : state) benchmark::DoNotOptimize(so_diagonalize(B, Q, R));
}
BENCHMARK(BM_SoDiagonalizeB)->Arg(1)->Arg(2)->Arg(4);

void BM_HenselLift(benchmark::State& state) {
  const IntPoly f{-2, 0, 1};
  const auto base = PrimePower::make(7, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hensel_lift_root(f, base, 3));
}
BENCHMARK(BM_HenselLift)->Arg(3)->Arg(20)->Arg(100);

void BM_GrowthReportSO(benchmark::State& state) {
  TowerSpec s;
  s.kind = CaseKind::SO;
  s.n = static_cast<int>(state.range(0));
  s.p = 31;
  for (auto _ : state) benchmark::DoNotOptimize(growth_report(s));
}
BENCHMARK(BM_GrowthReportSO)->Arg(2)->Arg(4);

void BM_XueBound(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  PairingInstance inst;
  inst.t = 2;
  inst.pairing = RatMatrix(n, n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    inst.pairing(i, i) = 1;
    inst.pairing(i, (i + 1) % n) = Rational(1, 3);
  }
  for (auto _ : state) benchmark::DoNotOptimize(xue_bound(inst));
}
BENCHMARK(BM_XueBound)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
