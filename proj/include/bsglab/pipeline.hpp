#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bsglab/annulus.hpp"
#include "bsglab/bsg.hpp"
#include "bsglab/io.hpp"
#include "bsglab/search.hpp"

namespace bsglab {

struct PipelineOptions {
  CounterexampleSpec spec;
  // Defaults to {0, eps/8, eps/4, eps/2, eps} for the derived epsilon.
  std::vector<Rational> eps_grid;
  int64_t point_cap = kDefaultAnnulusPointCap;
};

struct PipelineBundle {
  Counterexample cx;
  PropertyReport properties;
  FrontierResult frontier;
  ExtractionResult extraction;
  MissingSplit split;  // (A+A) \ (A'+A') for the greedy A' at epsilon
  int64_t greedy_removals = 0;
  double greedy_margin = 0;
  Json report;
};

std::vector<Rational> DefaultEpsGrid(const Rational& epsilon);

// Stage failures are rethrown with the stage name prepended.
PipelineBundle RunCounterexamplePipeline(const PipelineOptions& opts);

// Writes a.json, gamma.json, report.json, frontier.csv into dir and returns
// (file name, sha256) in that order.
std::vector<std::pair<std::string, std::string>> WriteBundle(const PipelineBundle& b,
                                                             const std::string& dir);

}  // namespace bsglab
