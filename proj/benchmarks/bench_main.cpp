#include "weilbounds/conductor.hpp"
#include "weilbounds/genus.hpp"
#include "weilbounds/plancherel.hpp"
#include "weilbounds/sturm.hpp"
#include "weilbounds/vaaler.hpp"
#include "weilbounds/weil.hpp"

#include <benchmark/benchmark.h>

using namespace weilbounds;

static void BM_EnumerateWeil(benchmark::State& state) {
  auto params = WeilParams::make(2, 1);
  unsigned m = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto polys = enumerate_weil_polynomials(params, m);
    benchmark::DoNotOptimize(polys);
  }
}
BENCHMARK(BM_EnumerateWeil)->Arg(2)->Arg(4)->Arg(6);

static void BM_EnumerateWeilIrreducible(benchmark::State& state) {
  auto params = WeilParams::make(2, 1);
  EnumerateOptions opts;
  opts.irreducible_only = true;
  unsigned m = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto polys = enumerate_weil_polynomials(params, m, opts);
    benchmark::DoNotOptimize(polys);
  }
}
BENCHMARK(BM_EnumerateWeilIrreducible)->Arg(4)->Arg(6);

static void BM_IsWeil(benchmark::State& state) {
  auto params = WeilParams::make(3, 1);
  IntPolynomial p({9, 9, 6, 3, 1});  // a quartic Weil polynomial for q=3
  for (auto _ : state) {
    auto chk = is_weil_polynomial(p, params);
    benchmark::DoNotOptimize(chk);
  }
}
BENCHMARK(BM_IsWeil);

static void BM_SturmCount(benchmark::State& state) {
  IntPolynomial h({-8, 2, 5, -1, 1});
  QuadExt hi = QuadExt(0, 2, 7);
  for (auto _ : state) {
    long n = sturm_root_count(h, -hi, hi);
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_SturmCount);

static void BM_VaalerAxis(benchmark::State& state) {
  unsigned kappa = static_cast<unsigned>(state.range(0));
  auto I = TorusInterval::make(0.2, 0.7);
  for (auto _ : state) {
    auto axis = vaaler_axis(I, kappa);
    benchmark::DoNotOptimize(axis);
  }
}
BENCHMARK(BM_VaalerAxis)->Arg(16)->Arg(64)->Arg(256);

static void BM_GridEvaluate(benchmark::State& state) {
  auto axis = vaaler_axis(TorusInterval::make(0.2, 0.7), 256);
  auto full = axis.full_plus();
  size_t grid = static_cast<size_t>(state.range(0));
  for (auto _ : state) {
    auto values = grid_evaluate_1d(full, grid);
    benchmark::DoNotOptimize(values);
  }
  state.SetComplexityN(static_cast<int64_t>(grid));
}
BENCHMARK(BM_GridEvaluate)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Complexity();

static void BM_SampleFamily(benchmark::State& state) {
  auto density = DensitySpec::lebesgue(1);
  size_t size = static_cast<size_t>(state.range(0));
  for (auto _ : state) {
    auto family = sample_family(density, size, 42);
    benchmark::DoNotOptimize(family);
  }
}
BENCHMARK(BM_SampleFamily)->Arg(10000)->Arg(100000);

static void BM_SparseFraction(benchmark::State& state) {
  auto family = sample_family(DensitySpec::lebesgue(1), 100000, 23);
  std::vector<std::vector<double>> Z;
  for (int i = 0; i < 5; ++i) Z.push_back({0.1 + 0.18 * i});
  unsigned kappa = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto sf = sparse_fraction(family, Z, kappa);
    benchmark::DoNotOptimize(sf);
  }
}
BENCHMARK(BM_SparseFraction)->Arg(8)->Arg(64);

static void BM_GenusLPExact(benchmark::State& state) {
  auto S = AngleSet::parse("1/3pi,0.5pi,2/3pi,1pi");
  for (auto _ : state) {
    auto lp = max_genus_lp(3, S, 12, LPMode::kExact);
    benchmark::DoNotOptimize(lp);
  }
}
BENCHMARK(BM_GenusLPExact);

static void BM_DepthBoundV1(benchmark::State& state) {
  auto field = LocalFieldParams::make(5, 1);
  for (auto _ : state) {
    auto report = depth_bound_v1(2, 2, field);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_DepthBoundV1);

BENCHMARK_MAIN();
