// This file is part of x0plane.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include <benchmark/benchmark.h>

#include "x0plane/primitive_bound.hpp"

namespace {

using namespace x0plane;

void bm_resultant_committed(benchmark::State& state) {
  auto p = load_bivar(std::filesystem::path(X0PLANE_TEST_DATA) / "bivar" /
                      "n14_P.bivar");
  auto q = load_bivar(std::filesystem::path(X0PLANE_TEST_DATA) / "bivar" /
                      "n14_Q.bivar");
  for (auto _ : state) {
    auto r = resultant_x(p, q);
    benchmark::DoNotOptimize(r.degree());
  }
}
BENCHMARK(bm_resultant_committed);

void bm_c0_bound(benchmark::State& state) {
  auto p = load_bivar(std::filesystem::path(X0PLANE_TEST_DATA) / "bivar" /
                      "n14_P.bivar");
  auto q = load_bivar(std::filesystem::path(X0PLANE_TEST_DATA) / "bivar" /
                      "n14_Q.bivar");
  for (auto _ : state) {
    auto r = c0_bound(p, q);
    benchmark::DoNotOptimize(r.threshold);
  }
}
BENCHMARK(bm_c0_bound);

}  // namespace
