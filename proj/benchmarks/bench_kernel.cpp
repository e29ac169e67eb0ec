// This file is part of x0plane.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include <benchmark/benchmark.h>

#include <random>

#include "x0plane/basis_store.hpp"
#include "x0plane/plane_model.hpp"

namespace {

using namespace x0plane;

IntMat random_matrix(long rows, long cols, long magnitude, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> entry(-magnitude, magnitude);
  IntMat m(rows, cols);
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < cols; ++j) m.at(i, j) = entry(rng);
  return m;
}

void bm_bareiss_random(benchmark::State& state) {
  long n = state.range(0);
  auto m = random_matrix(n + 16, n, 1000, 7);
  for (auto _ : state) {
    auto ech = bareiss_echelon(m);
    benchmark::DoNotOptimize(ech.rank);
  }
}
BENCHMARK(bm_bareiss_random)->Arg(24)->Arg(48)->Arg(96);

void bm_kernel_rank_deficient(benchmark::State& state) {
  long n = state.range(0);
  auto m = random_matrix(n - 1, n, 1000, 11);  // kernel dimension >= 1
  for (auto _ : state) {
    auto k = kernel(m);
    benchmark::DoNotOptimize(k.size());
  }
}
BENCHMARK(bm_kernel_rank_deficient)->Arg(24)->Arg(48);

void bm_equation_weight4(benchmark::State& state) {
  auto b = load_basis(std::filesystem::path(X0PLANE_TEST_DATA) / "bases" /
                      "N14_k4.qexp");
  auto inv = invariants(14);
  auto t = select_triple(b, 0, 1, {Int(0), Int(0), Int(1), Int(1)});
  for (auto _ : state) {
    auto eq = equation(t.f, t.g, t.h, inv, 4);
    benchmark::DoNotOptimize(eq.degree);
  }
}
BENCHMARK(bm_equation_weight4);

}  // namespace
