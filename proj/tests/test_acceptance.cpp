// Acceptance gate: runs all thirteen verification criteria and prints one
// PASS/FAIL line per criterion. Exit status 0 iff every criterion passes.
#include <cstdio>

#include "leflab/verify.hpp"

int main()
{
  std::vector<leflab::VerifyCheck> checks = leflab::run_suite("all", 7, 2);
  if (checks.size() != 13) {
    std::fprintf(stderr, "expected 13 criteria, got %zu\n", checks.size());
    return 1;
  }
  bool ok = true;
  for (const leflab::VerifyCheck& c : checks) {
    std::printf("%s criterion %2d [%s] %s\n", c.pass ? "PASS" : "FAIL", c.criterion,
                c.anchor.c_str(), c.name.c_str());
    std::fflush(stdout);
    ok = ok && c.pass;
  }
  std::printf("%s\n", ok ? "ACCEPTANCE: PASS" : "ACCEPTANCE: FAIL");
  return ok ? 0 : 1;
}
