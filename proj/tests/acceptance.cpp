// This file is part of x0plane.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

// Acceptance suite: run one numbered criterion (or all of them) against the
// committed data, printing one pass/fail line per check.

#include <cstdlib>
#include <iostream>

#include "x0plane/verification.hpp"

int main(int argc, char** argv) {
  std::filesystem::path root = X0PLANE_TEST_DATA;
  if (const char* env = std::getenv("X0PLANE_DATA")) root = env;
  try {
    std::vector<x0plane::CheckResult> results;
    if (argc > 1) {
      results = x0plane::run_criterion(std::atoi(argv[1]), root);
    } else {
      results = x0plane::run_all(root);
    }
    bool ok = x0plane::report(results, std::cout);
    return ok ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
