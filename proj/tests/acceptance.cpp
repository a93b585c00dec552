// Runs every acceptance check and prints one PASS/FAIL line per criterion.
// Usage: acceptance [seed] [samples]

#include "bmetric/verification.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
  using namespace bmetric;
  SuiteOptions options;
  if (argc > 1) options.seed = std::stoull(argv[1]);
  if (argc > 2) options.samples = std::stoull(argv[2]);

  const SuiteResult result = run_suite(options);
  bool all = true;
  for (int c = 1; c <= kCriterionCount; ++c) {
    const bool pass = result.criterion_passed(c);
    all = all && pass;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c << ": " << criterion_title(c) << "\n";
    for (const Check* check : result.for_criterion(c)) {
      if (check->verdict.pass) continue;
      std::cout << "    failed: " << check->verdict.name;
      if (!check->verdict.witness.empty()) std::cout << " (" << check->verdict.witness << ")";
      std::cout << "\n";
    }
  }
  std::size_t extra_failed = 0, extra = 0;
  for (const Check* check : result.for_criterion(0)) {
    ++extra;
    if (!check->verdict.pass) {
      ++extra_failed;
      std::cout << "    additional check failed: " << check->verdict.name;
      if (!check->verdict.witness.empty()) std::cout << " (" << check->verdict.witness << ")";
      std::cout << "\n";
    }
  }
  std::cout << "additional checks: " << (extra - extra_failed) << "/" << extra << " passed\n";
  return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
