#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace levelmcg {

// One entry of the verification suite: a named check with its outcome, wall
// time, and a short human-readable detail string.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  std::string detail;
};

// Runs check `id` (1..20) with the given base seed.  Unknown ids throw Error.
CriterionResult run_criterion(int id, std::uint64_t seed);

// Runs every check in order.
std::vector<CriterionResult> run_all(std::uint64_t seed);

constexpr int kCriterionCount = 20;

}  // namespace levelmcg
