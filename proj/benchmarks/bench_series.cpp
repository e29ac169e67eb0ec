// This file is part of x0plane.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include <benchmark/benchmark.h>

#include <random>

#include "x0plane/qseries.hpp"

namespace {

using namespace x0plane;

QSeries random_series(long prec, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> entry(-50, 50);
  QSeries s(prec);
  for (long n = 1; n <= prec; ++n) s.set_coeff(n, Rat(entry(rng)));
  return s;
}

void bm_series_mul(benchmark::State& state) {
  long prec = state.range(0);
  auto a = random_series(prec, 3);
  auto b = random_series(prec, 5);
  for (auto _ : state) {
    auto c = mul(a, b);
    benchmark::DoNotOptimize(c.prec());
  }
}
BENCHMARK(bm_series_mul)->Arg(100)->Arg(300)->Arg(600);

void bm_series_pow(benchmark::State& state) {
  auto a = random_series(400, 9);
  long e = state.range(0);
  for (auto _ : state) {
    auto c = monomial_pow(a, e);
    benchmark::DoNotOptimize(c.prec());
  }
}
BENCHMARK(bm_series_pow)->Arg(4)->Arg(8);

}  // namespace
