// This file is part of x0plane.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include <benchmark/benchmark.h>

BENCHMARK_MAIN();
