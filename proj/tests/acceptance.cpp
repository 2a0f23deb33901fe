// Acceptance runner: one line per criterion, nonzero exit iff any fails.

#include <cstdio>

#include "spx/acceptance.hpp"

int main(int argc, char** argv) {
  const std::string only = argc > 1 ? argv[1] : "";
  bool all_pass = true;
  for (const auto& c : spx::run_acceptance(only)) {
    std::printf("[%s] %d. %-34s %9.1f ms\n", c.pass ? "PASS" : "FAIL", c.id,
                c.name.c_str(), c.wall_ms);
    if (!c.pass) std::printf("       %s\n", c.detail.c_str());
    all_pass = all_pass && c.pass;
  }
  return all_pass ? 0 : 1;
}
