// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion.  Exits nonzero when any criterion fails.
#include <cstdio>

#include "uaw/verify.hpp"

int main() {
  bool all = true;
  int n = 0;
  for (const auto& result : uaw::run_acceptance()) {
    ++n;
    bool pass = result.pass();
    all = all && pass;
    std::printf("%s  %2d. %s  (%.2fs < %.0fs)\n", pass ? "PASS" : "FAIL", n,
                result.report.name.c_str(), result.seconds, result.budget);
    if (!result.report.all_pass()) {
      for (const auto& item : result.report.items)
        if (!item.pass)
          std::printf("        FAIL %s\n        residual: %s\n",
                      item.item.c_str(), item.residual.c_str());
    }
  }
  std::printf("%s\n", all ? "acceptance: all criteria pass"
                          : "acceptance: FAILURES present");
  return all ? 0 : 1;
}
