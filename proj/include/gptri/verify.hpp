#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gptri::verify {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::uint64_t instances = 0;
  std::string detail;  // first counterexample when failed
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

/// Cross-validation sweeps per numeration system. Suites: "binary",
/// "fibonacci", "base3", "tribonacci". The limit scales the index
/// sweeps; exhaustive word sweeps use their own documented caps.
SuiteResult run_suite(std::string_view suite, std::uint64_t limit);

std::vector<std::string> suite_names();

}  // namespace gptri::verify
