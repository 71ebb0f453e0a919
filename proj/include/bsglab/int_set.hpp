#pragma once

#include <cstdint>
#include <vector>

namespace bsglab {

// Inclusive range [lo, hi] of consecutive integers.
struct Run {
  int64_t lo = 0;
  int64_t hi = 0;
  int64_t length() const { return hi - lo + 1; }
  bool operator==(const Run&) const = default;
};

// Finite set of integers, stored as sorted maximal runs. Element order is
// increasing; index i refers to the i-th smallest element.
class IntSet {
 public:
  IntSet() { offsets_.push_back(0); }

  static IntSet FromUnsorted(std::vector<int64_t> values);
  // Throws PreconditionError unless values is strictly increasing.
  static IntSet FromSorted(const std::vector<int64_t>& values);
  // Accepts overlapping or adjacent runs in any order.
  static IntSet FromRuns(std::vector<Run> runs);
  static IntSet Interval(int64_t lo, int64_t hi);

  int64_t size() const { return offsets_.back(); }
  bool empty() const { return runs_.empty(); }
  int64_t min() const { return runs_.front().lo; }
  int64_t max() const { return runs_.back().hi; }
  const std::vector<Run>& runs() const { return runs_; }
  // offsets()[k] is the number of elements in runs before run k.
  const std::vector<int64_t>& offsets() const { return offsets_; }

  bool contains(int64_t x) const { return RunIndex(x) >= 0; }
  // Index of x among the elements, or -1.
  int64_t index_of(int64_t x) const;
  int64_t at(int64_t i) const;
  // Number of elements in [lo, hi].
  int64_t count_in(int64_t lo, int64_t hi) const;
  // Number of elements <= x.
  int64_t rank(int64_t x) const;

  std::vector<int64_t> elements() const;

  template <class F>
  void for_each(F&& f) const {
    for (const Run& r : runs_)
      for (int64_t x = r.lo; x <= r.hi; ++x) f(x);
  }

  // Order-independent digest of the contents, used to bind pair constraints.
  uint64_t fingerprint() const;

  bool operator==(const IntSet& o) const { return runs_ == o.runs_; }

 private:
  // Index of the run containing x, or -1.
  int64_t RunIndex(int64_t x) const;
  void RebuildOffsets();

  std::vector<Run> runs_;
  std::vector<int64_t> offsets_;
};

IntSet Union(const IntSet& a, const IntSet& b);
IntSet Difference(const IntSet& a, const IntSet& b);
IntSet Intersection(const IntSet& a, const IntSet& b);
bool IsSubset(const IntSet& a, const IntSet& b);

}  // namespace bsglab
