#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "repst/json_io.hpp"

namespace repst {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  Json details;       // deterministic
  double seconds = 0; // wall time, kept out of `details`
};

/// Criteria 1 to 11 of the acceptance suite (12 compares two full runs and
/// lives with the callers that can launch them).
inline constexpr int kInProcessCriteria = 11;

CriterionResult run_criterion(int id, std::uint64_t seed);

/// Deterministic JSON for a list of results (no timings).
Json results_json(const std::vector<CriterionResult>& results);

/// Uniformly labelled random set partition on m points.
SetPartition random_partition(std::size_t m, std::mt19937_64& rng);

}  // namespace repst
