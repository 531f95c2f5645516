#pragma once

// Self-check suites behind `parkstat verify`.

#include <cstdint>
#include <string>
#include <vector>

namespace parking {

struct CheckOutcome {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  int threads = 1;
  std::uint64_t budget = 10'000'000;  // brute-force vector cap for the oracle suite
};

// Suites: closed-form, oracle, jets, expectation, airy, all.
std::vector<std::string> suite_names();
std::vector<CheckOutcome> run_suite(const std::string& suite, const VerifyOptions& opts = {});

}  // namespace parking
