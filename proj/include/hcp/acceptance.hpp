#pragma once

// Verification suites.  Each suite checks one property over a
// fixed desk-scale corpus and reports pass/fail together with its runtime
// against a time budget.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace hcp {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;       // property held and the budget was met
  bool within_limit = true;
  std::string detail;
  double seconds = 0;
  double limit = 0;
};

CriterionResult run_criterion_1(std::uint64_t seed = 0);  // shape verdict vs normalizers
CriterionResult run_criterion_2(std::uint64_t seed = 0);  // induced Hecke modules are reducible
CriterionResult run_criterion_3(std::uint64_t seed = 0);  // principal series endomorphisms
CriterionResult run_criterion_4(std::uint64_t seed = 0);  // Hecke module diagram
CriterionResult run_criterion_5(std::uint64_t seed = 0);  // classification vs brute force
CriterionResult run_criterion_6(std::uint64_t seed = 0);  // functor laws
CriterionResult run_criterion_7(std::uint64_t seed = 0);  // meataxe vs exhaustive search

/// The seven suites in order.
std::vector<std::function<CriterionResult(std::uint64_t)>> all_criteria();

/// "PASS 3 principal series endomorphisms [0.41 s / 30 s] detail".
std::string format_result(const CriterionResult& r);

}  // namespace hcp
