#ifndef TRIMLAB_SELFTEST_HPP
#define TRIMLAB_SELFTEST_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "trimlab/discretization.hpp"

namespace trimlab {

struct SelftestOptions {
  std::uint64_t seed = 1;
  int trials = 200;
  int max_n = 8;
  IntervalRule rule = IntervalRule::kClosed;
  int threads = 1;
};

struct SuiteResult {
  std::string name;
  int trials = 0;
  int failures = 0;
  std::string first_failure;  // message plus a minimized reproducer
};

// Runs every invariant suite on seeded random inputs. Each suite draws from
// its own generator seeded from (seed, suite index), so suites are
// independent of each other's trial counts.
std::vector<SuiteResult> run_selftest(const SelftestOptions& opt);

}  // namespace trimlab

#endif  // TRIMLAB_SELFTEST_HPP
