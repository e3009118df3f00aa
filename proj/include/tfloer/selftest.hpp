#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace tf {

inline constexpr std::uint64_t kDefaultSeed = 20240607;

struct SuiteResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;
  bool pass() const { return failures == 0; }
};

using Rng = std::mt19937_64;

struct Suite {
  std::string name;
  int cases;
  // One randomized case; returns an empty string on success, a description otherwise.
  std::function<std::string(Rng&)> check;
};

std::vector<Suite> property_suites();
SuiteResult run_suite(const Suite& s, std::uint64_t seed);
// Runs every suite; force_fail appends a deliberately failing fixture.
std::vector<SuiteResult> run_selftest(std::uint64_t seed, bool force_fail = false);

}  // namespace tf
