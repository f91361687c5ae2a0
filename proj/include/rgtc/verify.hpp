#pragma once

#include <functional>
#include <string>
#include <vector>

namespace rgtc {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

/// Runs the invariant suite behind `rgtc verify`. `on_result` is called as
/// each check finishes.
std::vector<CheckResult> run_verify_suite(const std::function<void(const CheckResult&)>& on_result = {});

}  // namespace rgtc
