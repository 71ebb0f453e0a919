#pragma once

#include <functional>
#include <string>
#include <vector>

#include "bsglab/io.hpp"

namespace bsglab {

enum class SuiteLevel { kQuick, kFull };

SuiteLevel ParseSuiteLevel(const std::string& name);

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  Json data = Json::object();
};

struct SuiteOptions {
  SuiteLevel level = SuiteLevel::kQuick;
  std::string golden_dir;    // holds reference.json
  std::string artifact_dir;  // frontier CSV, ratio tables and bundles; temp dir if empty
};

std::string DefaultGoldenDir();

// Runs criteria 1..11 in order. on_result is called as each one finishes.
std::vector<CriterionResult> RunAcceptance(
    const SuiteOptions& opts,
    const std::function<void(const CriterionResult&)>& on_result = nullptr);

// "PASS  3  bsg extraction bounds  (...)".
std::string FormatResultLine(const CriterionResult& r);

}  // namespace bsglab
