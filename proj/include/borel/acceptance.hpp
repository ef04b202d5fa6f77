#pragma once

// End-to-end verification suite shared by `borel verify` and the acceptance
// test binary. Each criterion reports pass/fail with diagnostics.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "borel/rootsys.hpp"

namespace borel {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = true;
  std::string summary;
  std::vector<std::string> failures;

  void fail(std::string message);
};

struct AcceptanceOptions {
  int max_rank = 8;
  // Empty: every admissible type of rank <= max_rank.
  std::vector<TypeSpec> types;
  std::uint64_t seed = 20100811;
};

// A1..An, B2.., C2.., D3.., E6-E8, F4, G2 up to max_rank.
std::vector<TypeSpec> admissible_types(int max_rank);

// The A3 comparison table exactly as render_table_a3() must print it.
extern const char* const kTableA3Expected;

CriterionResult check_counting(std::span<const TypeSpec> types);
CriterionResult check_covering_equals_subsets(std::span<const TypeSpec> types);
CriterionResult check_closed_forms(std::span<const TypeSpec> types);
CriterionResult check_recurrences();
CriterionResult check_good_bijections();
CriterionResult check_general_bijection(std::span<const TypeSpec> types);
CriterionResult check_table_a3();
CriterionResult check_normalizer_map(std::span<const TypeSpec> types);
CriterionResult check_extension_recurrences(std::uint64_t seed);

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);

// "[PASS] 1 ..." per criterion, followed by indented failures.
std::string format_results(const std::vector<CriterionResult>& results);

}  // namespace borel
