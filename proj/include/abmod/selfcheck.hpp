#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "abmod/rng.hpp"

namespace abmod {

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> failure_examples;  // first few, serialized
};

struct SelfcheckOptions {
  std::string suite_filter;   // run only the named suite when nonempty
  bool inject_fault = false;  // test-harness hook: force one failure
  std::uint64_t seed = kDefaultSeed;
};

// Runs the algebra/reduction invariant suites at default budgets.
std::vector<SuiteResult> run_selfcheck(const SelfcheckOptions& opt = {});

std::vector<std::string> selfcheck_suite_names();

}  // namespace abmod
