#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bsglab/int_set.hpp"
#include "bsglab/io.hpp"
#include "bsglab/pair_constraint.hpp"
#include "bsglab/rational.hpp"

namespace bsglab {

enum class Strategy { kExhaustive, kGreedy, kLocalSearch };

std::string StrategyName(Strategy s);
Strategy ParseStrategy(const std::string& name);

// Exhaustive search is allowed while C(|A|, removals) stays below this.
inline constexpr double kExhaustiveSubsetCap = 1e7;
inline constexpr int64_t kExhaustiveMaxSize = 3000;

struct SearchConfig {
  Rational epsilon{0};
  Strategy strategy = Strategy::kGreedy;
  int64_t max_steps = 100'000;  // local search swap evaluations
  uint64_t seed = 0;            // orders local search proposals
};

// floor(epsilon * n), the number of elements A' may drop.
int64_t RemovalBudget(int64_t n, const Rational& epsilon);
double BinomialCount(int64_t n, int64_t k);
// Dropping nothing is always exhaustively decided.
bool ExhaustiveFeasible(int64_t n, int64_t k);

struct ShrinkResult {
  IntSet a_prime;
  IntSet removed;
  int64_t achieved = 0;  // |A' + A'|
  Strategy strategy = Strategy::kGreedy;
  bool certified_minimum = false;
  int64_t evaluations = 0;
};

ShrinkResult ShrinkSearch(const IntSet& a, const SearchConfig& cfg);

// The greedy rule run for a number of steps. Each step removes the element
// whose removal kills the most sums of the current sumset, smallest element
// on ties. Exact at any scale: only sums with at most 2 * steps + 2
// representations are tracked, since no other sum can die within the run.
struct GreedyTrajectory {
  int64_t initial_sumset_size = 0;
  std::vector<int64_t> removed;        // in removal order
  std::vector<int64_t> sumset_sizes;   // |A'+A'| after step 1, 2, ...
  std::vector<int64_t> deaths;         // lost sums, in order of death
  std::vector<int64_t> deaths_offset;  // deaths of step j: [offset[j], offset[j+1])

  int64_t SizeAfter(int64_t steps) const;
  IntSet SurvivorsAfter(const IntSet& a, int64_t steps) const;
  // (A+A) \ (A'+A') for the set after `steps` removals.
  IntSet MissingAfter(int64_t steps) const;
};

GreedyTrajectory GreedyShrink(const IntSet& a, int64_t steps);

struct FrontierRow {
  Rational epsilon;
  int64_t removal_budget = 0;
  double delta = 0;
  int64_t min_sumset_size = 0;
  double margin = 0;  // (min |A'+A'| - |A +_Gamma A|) / |A|
  Strategy strategy = Strategy::kGreedy;
  // Only an exhaustive minimum can show that every admissible A' grows.
  bool certified = false;
};

struct FrontierResult {
  int64_t n = 0;
  int64_t sumset_size = 0;
  int64_t restricted_size = 0;
  std::vector<FrontierRow> rows;
  std::optional<GreedyTrajectory> greedy;  // shared by all greedy rows
};

// Uses exhaustive search where C(|A|, k) allows it, greedy otherwise.
// restricted_size may be passed when already known.
FrontierResult FrontierProbe(const IntSet& a, const PairConstraint& g,
                             const std::vector<Rational>& eps_grid,
                             std::optional<int64_t> restricted_size = std::nullopt);

std::string FrontierCsv(const FrontierResult& f);
Json ToJson(const ShrinkResult& r);
Json ToJson(const FrontierResult& f);

}  // namespace bsglab
