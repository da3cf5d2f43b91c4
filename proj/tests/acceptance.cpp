// Runs every acceptance criterion and prints one line per criterion.
#include <cstdio>

#include "fht/acceptance.hpp"

int main() {
  fht::AcceptanceOptions opts;
  int failed = 0;
  opts.on_result = [&failed](const fht::CriterionResult& r) {
    std::printf("[%s] %2d %s: %s (%.1f s)\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.detail.c_str(), r.seconds);
    std::fflush(stdout);
    failed += r.pass ? 0 : 1;
  };
  const auto results = fht::run_acceptance(opts);
  std::printf("%zu/%zu criteria passed\n", results.size() - failed, results.size());
  return failed == 0 ? 0 : 1;
}
