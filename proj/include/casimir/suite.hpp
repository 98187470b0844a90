#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace casimir {

struct CriterionResult {
  int id;
  std::string title;
  bool passed;
  std::string detail;
  double seconds;
};

/// Acceptance criteria 1..9. `seed` drives every random choice.
CriterionResult run_criterion(int id, std::uint64_t seed);
std::vector<CriterionResult> run_suite(std::uint64_t seed, const std::function<void(const CriterionResult&)>& on_result = {});

inline constexpr int kCriterionCount = 9;

}  // namespace casimir
