// One line per acceptance criterion; nonzero exit if any fails.

#include <cstdio>

#include "sc/corpus.hpp"

int main() {
  sc::AcceptanceOptions opt;
  bool all = true;
  for (const auto& row : sc::run_acceptance_suite(opt)) {
    const bool in_time = row.limit_seconds <= 0 || row.seconds <= row.limit_seconds;
    const bool pass = row.pass && in_time;
    all &= pass;
    std::printf("criterion %2d %s: %s | %s (%.3f s)\n", row.id, pass ? "PASS" : "FAIL",
                row.name.c_str(), row.detail.c_str(), row.seconds);
  }
  return all ? 0 : 1;
}
