#include <benchmark/benchmark.h>

#include "bicolor/closedform.hpp"
#include "bicolor/dimers.hpp"
#include "bicolor/hankel.hpp"

using namespace bicolor;

namespace {

MSeries dense_unit(int nv, int order) {
  MSeries f(nv, order);
  for (std::size_t k = 0; k < monomial_count(nv, order); ++k) {
    f.set_coeff(monomial_at(nv, k), Rat(static_cast<long>(k % 7) + 1, static_cast<long>(k % 5) + 1));
  }
  return f;
}

void BM_SeriesMul(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const MSeries f = dense_unit(2, order), g = dense_unit(2, order);
  for (auto _ : state) benchmark::DoNotOptimize(mul(f, g));
}
BENCHMARK(BM_SeriesMul)->Arg(6)->Arg(10)->Arg(14);

void BM_SeriesInverse(benchmark::State& state) {
  const MSeries f = dense_unit(2, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(inv_unit(f));
}
BENCHMARK(BM_SeriesInverse)->Arg(6)->Arg(10)->Arg(14);

void BM_LadderSolve(benchmark::State& state) {
  const FaceWeights g = state.range(1) == 1 ? FaceWeights::quadrangulations() : FaceWeights::hexangulations();
  for (auto _ : state) benchmark::DoNotOptimize(ladder_solve(g, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_LadderSolve)->Args({6, 1})->Args({8, 1})->Args({6, 2})->Args({8, 2})->Unit(benchmark::kMillisecond);

void BM_QuadClosed(benchmark::State& state) {
  const Tails t = tail_solve(FaceWeights::quadrangulations(), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(quad_ladder_closed(t, 6));
}
BENCHMARK(BM_QuadClosed)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_HankelDet(benchmark::State& state) {
  const int i = static_cast<int>(state.range(0));
  const Moments m = hankel_moments(FaceWeights::quadrangulations(), 2 * i + 1, 4);
  for (auto _ : state) benchmark::DoNotOptimize(hankel_det(m.black, 0, i));
}
BENCHMARK(BM_HankelDet)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_HardDimers(benchmark::State& state) {
  const int links = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(zhd(DimerEnds::BB, links));
}
BENCHMARK(BM_HardDimers)->Arg(12)->Arg(40)->Arg(120);

}  // namespace

BENCHMARK_MAIN();
