// This file is part of x0plane.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace x0plane {

/// Outcome of one verification check.
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

/// Run one numbered verification criterion (1..7) against the committed data
/// directory.  Every expected value and tolerance is pinned in code.
std::vector<CheckResult> run_criterion(int criterion,
                                       const std::filesystem::path& data_root);

/// All criteria in order.
std::vector<CheckResult> run_all(const std::filesystem::path& data_root);

/// Render one line per check; returns true when everything passed.
bool report(const std::vector<CheckResult>& results, std::ostream& os);

}  // namespace x0plane
