#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "bsglab/int_set.hpp"
#include "bsglab/lattice_set.hpp"

namespace bsglab {

using IndexPair = std::pair<int64_t, int64_t>;

// A subset Gamma of A x B stored by its complement: the removed index pairs.
// The constraint remembers the sizes and fingerprints of the sets it was
// built against so that a mismatched use is detected.
class PairConstraint {
 public:
  PairConstraint() = default;

  // Sorts and validates; duplicates are rejected.
  static PairConstraint ForIntSets(const IntSet& a, const IntSet& b,
                                   std::vector<IndexPair> removed);
  static PairConstraint ForLatticeSets(const LatticeSet& a, const LatticeSet& b,
                                       std::vector<IndexPair> removed);
  // No fingerprint binding (e.g. loaded from a file without the sets).
  static PairConstraint Unbound(int64_t left_size, int64_t right_size,
                                std::vector<IndexPair> removed);

  int64_t left_size() const { return left_size_; }
  int64_t right_size() const { return right_size_; }
  const std::vector<IndexPair>& removed() const { return removed_; }
  int64_t removed_count() const { return static_cast<int64_t>(removed_.size()); }
  bool is_removed(int64_t i, int64_t j) const;

  // |removed| / (|A||B|); 0 when either side is empty.
  double density() const;

  // Throws PreconditionError unless this constraint was built for (a, b).
  void CheckReferences(const IntSet& a, const IntSet& b) const;
  void CheckReferences(const LatticeSet& a, const LatticeSet& b) const;

  // Sparse (index, count) lists of removed pairs per row (left index) and
  // per column, sorted by index; indices with no removed pair are omitted.
  std::vector<IndexPair> RowCounts() const;
  std::vector<IndexPair> ColumnCounts() const;

  bool operator==(const PairConstraint& o) const {
    return left_size_ == o.left_size_ && right_size_ == o.right_size_ &&
           removed_ == o.removed_;
  }

 private:
  void Validate();

  int64_t left_size_ = 0;
  int64_t right_size_ = 0;
  uint64_t left_fp_ = 0;
  uint64_t right_fp_ = 0;
  bool bound_ = false;
  std::vector<IndexPair> removed_;
};

uint64_t LatticeFingerprint(const LatticeSet& a);

}  // namespace bsglab
