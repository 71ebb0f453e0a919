#pragma once

#include <cstdint>
#include <vector>

#include "bsglab/int_set.hpp"

namespace bsglab {

// Runs shorter than this are expanded into elements by the sum kernels.
inline constexpr int64_t kLongRun = 32;

// An IntSet split into elements of short runs and the long runs.
struct RunSplit {
  std::vector<int64_t> shorts;
  std::vector<Run> longs;

  static RunSplit Of(const IntSet& s, int64_t long_run = kLongRun);
  int64_t CountShortIn(int64_t lo, int64_t hi) const;
};

// Counts r(s) = #{(x, y) in A x B : x + y = s}.
class RepresentationCounter {
 public:
  RepresentationCounter(const IntSet& a, const IntSet& b);

  // r(s) for each entry of a sorted list of sums.
  std::vector<int64_t> Count(const std::vector<int64_t>& sorted_sums) const;
  int64_t CountOne(int64_t s) const;

 private:
  int64_t LongPart(int64_t s) const;
  int64_t ShortPartScan(int64_t s) const;

  const IntSet& a_;
  const IntSet& b_;
  RunSplit sa_;
  RunSplit sb_;
};

// Sums s with 1 <= r(s) <= max_count, in increasing order, with r(s).
struct LowRepresentationSums {
  std::vector<int64_t> sums;
  std::vector<int64_t> counts;
};
LowRepresentationSums SumsWithFewRepresentations(const IntSet& a, const IntSet& b,
                                                 int64_t max_count,
                                                 int64_t output_cap);

}  // namespace bsglab
