// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any fail.
#include <iostream>
#include <string>

#include "bsglab/acceptance.hpp"

int main(int argc, char** argv) {
  bsglab::SuiteOptions opts;
  opts.level = bsglab::SuiteLevel::kFull;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--quick") opts.level = bsglab::SuiteLevel::kQuick;
    if (arg == "--full") opts.level = bsglab::SuiteLevel::kFull;
    if (arg == "--out" && i + 1 < argc) opts.artifact_dir = argv[++i];
    if (arg == "--golden" && i + 1 < argc) opts.golden_dir = argv[++i];
  }
  bool ok = true;
  bsglab::RunAcceptance(opts, [&](const bsglab::CriterionResult& r) {
    std::cout << bsglab::FormatResultLine(r) << std::endl;
    ok = ok && r.passed;
  });
  return ok ? 0 : 1;
}
