#include <cstdio>
#include <cstdlib>
#include <string>

#include "levelmcg/acceptance.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 0;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--seed") seed = std::strtoull(argv[i + 1], nullptr, 10);
  int failures = 0;
  for (int id = 1; id <= levelmcg::kCriterionCount; ++id) {
    levelmcg::CriterionResult r = levelmcg::run_criterion(id, seed);
    if (!r.pass) ++failures;
    std::printf("[%2d] %s  %-30s %8.2fs  %s\n", r.id, r.pass ? "PASS" : "FAIL",
                r.name.c_str(), r.seconds, r.detail.c_str());
    std::fflush(stdout);
  }
  if (failures) std::printf("%d of %d checks failed\n", failures, levelmcg::kCriterionCount);
  return failures == 0 ? 0 : 1;
}
