#pragma once

#include "bmetric/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace bmetric {

struct SuiteOptions {
  std::uint64_t seed = 7;
  std::size_t samples = 100;
  /// Replaces the Levi-Civita construction by a Koszul formula with one flipped sign.
  bool inject_koszul_fault = false;
  /// Property suites, report round-trips and the mutation run.
  bool run_properties = true;
  std::size_t ring_cases = 1000;
  std::size_t homomorphism_cases = 500;
};

/// One verdict, tagged with the acceptance criterion it belongs to (0 for
/// additional checks of the reference results).
struct Check {
  int criterion = 0;
  Verdict verdict;
};

inline constexpr int kCriterionCount = 11;

struct SuiteResult {
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::vector<Check> checks;

  bool all_passed() const;
  bool criterion_passed(int criterion) const;
  std::vector<const Check*> for_criterion(int criterion) const;
  const Check* find(std::string_view name) const;
};

/// Throws std::invalid_argument when samples == 0.
SuiteResult run_suite(const SuiteOptions& options);

/// Short description of an acceptance criterion, for the acceptance runner.
std::string criterion_title(int criterion);

Report verification_report(const SuiteResult& result);

struct PropertyOutcome {
  bool pass = true;
  std::size_t cases = 0;
  std::string witness;
};

/// Associativity, commutativity, distributivity, identities and canonical
/// additive inverses on random Scalar triples.
PropertyOutcome ring_axioms_property(std::uint64_t seed, std::size_t cases);

/// evaluate(a*b + c, p) = evaluate(a, p) * evaluate(b, p) + evaluate(c, p).
PropertyOutcome evaluation_homomorphism_property(std::uint64_t seed, std::size_t cases);

/// JSON emit and re-parse of the family, report and eval reports.
PropertyOutcome report_round_trip_property();

}  // namespace bmetric
