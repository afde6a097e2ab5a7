// Microbenchmarks for the exact kernels: sparse rank, cyclic enumeration,
// trace-monomial cells, the Molien-Weyl constant term, and Betti tables.
#include <benchmark/benchmark.h>

#include "drep/repfunctor.hpp"
#include "drep/series.hpp"

using namespace drep;

static QMatrix random_matrix(int n, std::uint64_t seed) {
  QMatrix m(n, n);
  std::uint64_t s = seed;
  auto rnd = [&] {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rnd() % 3 == 0)
        m.set(i, j, scalar(static_cast<long>(rnd() % 21) - 10,
                           1 + static_cast<long>(rnd() % 5)));
  return m;
}

static void BM_rank_exact(benchmark::State& state) {
  QMatrix m = random_matrix(static_cast<int>(state.range(0)), 42);
  for (auto _ : state) benchmark::DoNotOptimize(rank_exact(m));
}
BENCHMARK(BM_rank_exact)->Arg(40)->Arg(80);

static void BM_cyclic_basis(benchmark::State& state) {
  auto p = builtin_resolution("dual-numbers", 0, static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(cyclic_basis(p, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_cyclic_basis)->Arg(7)->Arg(9);

static void BM_trace_cell(benchmark::State& state) {
  auto p = builtin_resolution("dual-numbers", 0, 4);
  MatrixAlgebra ma = rep_n(p, static_cast<int>(state.range(0)));
  StableComplexData st = stable_complex(p, 4);
  for (auto _ : state) {
    SymTraceCell cell = sym_trace_cell(ma, st, 0, 4);
    benchmark::DoNotOptimize(rank_exact(cell.matrix));
  }
}
BENCHMARK(BM_trace_cell)->Arg(2)->Arg(3)->Arg(4);

static void BM_molien_weyl(benchmark::State& state) {
  auto census = weight_census(builtin_resolution("dual-numbers", 0, 8));
  for (auto _ : state)
    benchmark::DoNotOptimize(molien_weyl(census, static_cast<int>(state.range(0)), 8));
}
BENCHMARK(BM_molien_weyl)->Arg(2)->Arg(3);

static void BM_full_betti(benchmark::State& state) {
  auto p = builtin_resolution("dual-numbers", 0, 8);
  MatrixAlgebra ma = rep_n(p, 1);
  for (auto _ : state) benchmark::DoNotOptimize(betti(full_complex(ma, 8)));
}
BENCHMARK(BM_full_betti);

BENCHMARK_MAIN();
