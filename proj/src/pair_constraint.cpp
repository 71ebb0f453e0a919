#include "bsglab/pair_constraint.hpp"

#include <algorithm>

#include "bsglab/error.hpp"

namespace bsglab {

uint64_t LatticeFingerprint(const LatticeSet& a) {
  uint64_t h = 0xC2B2AE3D27D4EB4FULL ^ static_cast<uint64_t>(a.dim());
  for (int64_t c : a.flat()) {
    h ^= static_cast<uint64_t>(c) + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
  }
  return h ^ static_cast<uint64_t>(a.size());
}

PairConstraint PairConstraint::ForIntSets(const IntSet& a, const IntSet& b,
                                          std::vector<IndexPair> removed) {
  PairConstraint g = Unbound(a.size(), b.size(), std::move(removed));
  g.left_fp_ = a.fingerprint();
  g.right_fp_ = b.fingerprint();
  g.bound_ = true;
  return g;
}

PairConstraint PairConstraint::ForLatticeSets(const LatticeSet& a,
                                              const LatticeSet& b,
                                              std::vector<IndexPair> removed) {
  PairConstraint g = Unbound(a.size(), b.size(), std::move(removed));
  g.left_fp_ = LatticeFingerprint(a);
  g.right_fp_ = LatticeFingerprint(b);
  g.bound_ = true;
  return g;
}

PairConstraint PairConstraint::Unbound(int64_t left_size, int64_t right_size,
                                       std::vector<IndexPair> removed) {
  PairConstraint g;
  g.left_size_ = left_size;
  g.right_size_ = right_size;
  g.removed_ = std::move(removed);
  g.Validate();
  return g;
}

void PairConstraint::Validate() {
  if (!std::is_sorted(removed_.begin(), removed_.end()))
    std::sort(removed_.begin(), removed_.end());
  for (size_t k = 0; k < removed_.size(); ++k) {
    const auto& [i, j] = removed_[k];
    Require(i >= 0 && i < left_size_ && j >= 0 && j < right_size_,
            "removed pair index out of range");
    Require(k == 0 || removed_[k - 1] != removed_[k], "duplicate removed pair");
  }
}

bool PairConstraint::is_removed(int64_t i, int64_t j) const {
  return std::binary_search(removed_.begin(), removed_.end(), IndexPair{i, j});
}

double PairConstraint::density() const {
  if (left_size_ == 0 || right_size_ == 0) return 0.0;
  return static_cast<double>(removed_.size()) /
         (static_cast<double>(left_size_) * static_cast<double>(right_size_));
}

void PairConstraint::CheckReferences(const IntSet& a, const IntSet& b) const {
  Require(a.size() == left_size_ && b.size() == right_size_,
          "pair constraint does not match the sizes of the given sets");
  if (bound_)
    Require(a.fingerprint() == left_fp_ && b.fingerprint() == right_fp_,
            "pair constraint was built for different sets");
}

void PairConstraint::CheckReferences(const LatticeSet& a,
                                     const LatticeSet& b) const {
  Require(a.size() == left_size_ && b.size() == right_size_,
          "pair constraint does not match the sizes of the given sets");
  if (bound_)
    Require(LatticeFingerprint(a) == left_fp_ && LatticeFingerprint(b) == right_fp_,
            "pair constraint was built for different sets");
}

namespace {

std::vector<IndexPair> CountSorted(const std::vector<int64_t>& keys) {
  std::vector<IndexPair> out;
  for (int64_t k : keys) {
    if (!out.empty() && out.back().first == k) {
      ++out.back().second;
    } else {
      out.push_back({k, 1});
    }
  }
  return out;
}

}  // namespace

std::vector<IndexPair> PairConstraint::RowCounts() const {
  std::vector<int64_t> keys;
  keys.reserve(removed_.size());
  for (const auto& p : removed_) keys.push_back(p.first);
  return CountSorted(keys);
}

std::vector<IndexPair> PairConstraint::ColumnCounts() const {
  std::vector<int64_t> keys;
  keys.reserve(removed_.size());
  for (const auto& p : removed_) keys.push_back(p.second);
  std::sort(keys.begin(), keys.end());
  return CountSorted(keys);
}

}  // namespace bsglab
