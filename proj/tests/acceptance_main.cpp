// Acceptance gate: runs every release criterion and prints one line per
// criterion.  Exits 0 only if all of them pass within their time budgets.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "qsocle/acceptance.hpp"

int main(int argc, char** argv) {
  int workers = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if ((arg == "--workers" || arg == "-j") && i + 1 < argc) {
      workers = std::atoi(argv[++i]);
    } else if (arg == "--help" || arg == "-h") {
      std::printf("usage: %s [--workers N]\n", argv[0]);
      return 0;
    } else {
      std::fprintf(stderr, "unknown argument: %s\n", arg.c_str());
      return 2;
    }
  }

  const auto results = qsocle::run_acceptance(workers);
  int passed = 0;
  for (const auto& r : results) {
    std::printf("%s\n", qsocle::format_criterion_line(r).c_str());
    if (r.passed)
      ++passed;
  }
  std::printf("verification: %d/%zu criteria passed\n", passed, results.size());
  return passed == static_cast<int>(results.size()) ? 0 : 1;
}
