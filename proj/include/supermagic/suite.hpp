#ifndef SUPERMAGIC_SUITE_HPP
#define SUPERMAGIC_SUITE_HPP

// The full verification suite, grouped by acceptance criterion.

#include "supermagic/report.hpp"
#include "supermagic/toolbox.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace supermagic {

struct RunConfig {
  std::uint32_t p = 3;
  std::uint64_t seed = 0;
  bool exhaustive = false;           // force exhaustive Jacobi everywhere
  Index exhaustive_limit = 140;
  std::uint64_t samples = 1'000'000;
  int simplicity_attempts = 64;

  JacobiOptions jacobi() const;
  SimplicityOptions simplicity() const;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  double budget_seconds = 0;  // 0: no budget
  double seconds = 0;
  std::vector<Report> reports;

  /// All reports pass and the run stayed within budget.
  bool passed() const;
  std::string line() const;
};

inline constexpr int kCriterionCount = 12;

/// Runs one criterion under cfg.p. Outside characteristic 3 the super cases
/// are replaced by the check that B(1,2) and B(4,2) are rejected.
CriterionResult run_criterion(int id, const RunConfig& cfg);

std::vector<CriterionResult> run_acceptance(const RunConfig& cfg, const std::vector<int>& ids = {});

/// Every report of the suite, sorted by check name.
std::vector<Report> run_all(const RunConfig& cfg);

}  // namespace supermagic

#endif  // SUPERMAGIC_SUITE_HPP
