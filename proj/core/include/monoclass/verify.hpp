#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "monoclass/tolerance.hpp"

namespace monoclass {

struct SuiteResult {
  std::string name;
  int checks = 0;
  int failures = 0;
  std::vector<std::string> messages;  // first few failure descriptions

  bool ok() const { return failures == 0; }
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  int budget = 10000;  // randomized trials per suite, scaled per check
  Tolerance tol{};
  std::string suite;         // empty = all of numerics, operators, relations,
                             // products, catalog, oracle
  bool inject_fault = false; // deliberately breaks one product-law check
};

/// Runs the invariant/property suites and returns per-suite counts.
std::vector<SuiteResult> run_verification(const VerifyOptions& options);

}  // namespace monoclass
