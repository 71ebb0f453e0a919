#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bsglab/int_set.hpp"
#include "bsglab/lattice_set.hpp"
#include "bsglab/pair_constraint.hpp"

namespace bsglab {

// {start, start + diff, ..., start + (length - 1) * diff}.
struct ApCover {
  int64_t start = 0;
  int64_t diff = 1;
  int64_t length = 1;

  int64_t last() const { return start + (length - 1) * diff; }
  bool Contains(int64_t x) const;
  bool Covers(const IntSet& a) const;
  bool operator==(const ApCover&) const = default;
};

IntSet Sumset(const IntSet& a, const IntSet& b);
IntSet RestrictedSumset(const IntSet& a, const IntSet& b, const PairConstraint& g);
IntSet Dilate(const IntSet& a, int64_t c);

// Ordered pairs (i, j) of indices whose midpoint (a_i + a_j) / 2 is an
// element of the set; diagonal pairs included. Sorted.
std::vector<IndexPair> MidpointPairs(const IntSet& a);
std::vector<IndexPair> MidpointPairs(const LatticeSet& a);

// The shortest arithmetic progression containing a; requires |a| >= 2.
ApCover MinimalApCover(const IntSet& a);

// pi(p) = p_1 + p_2 base + ... + p_d base^(d-1); requires
// base >= 10 * box_radius.
IntSet FreimanEmbed(const LatticeSet& a, int64_t base);
int64_t FreimanImage(std::span<const int64_t> p, int64_t base);

struct DoublingReport {
  int64_t n = 0;
  int64_t sumset_size = 0;
  std::optional<int64_t> restricted_size;
  int64_t removed_pairs = 0;
  double doubling = 0;  // |A+A| / N
  double k = 0;         // |A +_Gamma A| / N, or |A+A| / N without Gamma
  double delta = 0;     // |removed| / N^2
};
DoublingReport MakeDoublingReport(const IntSet& a, const PairConstraint* g);

// Vector-sum versions for lattice sets, computed through an order-preserving
// packing into integers.
LatticeSet LatticeSumset(const LatticeSet& a, const LatticeSet& b);
LatticeSet LatticeRestrictedSumset(const LatticeSet& a, const LatticeSet& b,
                                   const PairConstraint& g);
LatticeSet LatticeDilate(const LatticeSet& a, int64_t c);

}  // namespace bsglab
