#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bsglab/int_set.hpp"

namespace bsglab {

// Finite set of points in Z^d with every coordinate in [-box_radius,
// box_radius]. Points are lexicographically sorted (first coordinate most
// significant) and deduplicated.
class LatticeSet {
 public:
  LatticeSet() = default;
  LatticeSet(int dim, int64_t box_radius);

  // Validates coordinates, sorts and deduplicates.
  static LatticeSet FromPoints(int dim, int64_t box_radius,
                               std::vector<std::vector<int64_t>> points);
  // Flat row-major coordinates, already sorted and deduplicated.
  static LatticeSet FromSortedFlat(int dim, int64_t box_radius,
                                   std::vector<int64_t> coords);

  int dim() const { return dim_; }
  int64_t box_radius() const { return box_radius_; }
  int64_t size() const { return dim_ == 0 ? 0 : coords_.size() / dim_; }
  bool empty() const { return coords_.empty(); }
  std::span<const int64_t> point(int64_t i) const {
    return {coords_.data() + i * dim_, static_cast<size_t>(dim_)};
  }
  const std::vector<int64_t>& flat() const { return coords_; }

  int64_t index_of(std::span<const int64_t> p) const;
  bool contains(std::span<const int64_t> p) const { return index_of(p) >= 0; }

  bool operator==(const LatticeSet& o) const {
    return dim_ == o.dim_ && box_radius_ == o.box_radius_ && coords_ == o.coords_;
  }

 private:
  int dim_ = 0;
  int64_t box_radius_ = 0;
  std::vector<int64_t> coords_;
};

// Order-preserving injective packing of points with coordinates in
// [-radius, radius] into integers: digit i is (p_i + radius) in base
// `radix`, first coordinate most significant. With radix >= 4*radius+1 the
// sum of two packed points unpacks (with offset 2*radius) to the vector sum.
struct LatticePacking {
  int dim = 0;
  int64_t radius = 0;
  int64_t radix = 0;

  static LatticePacking ForSums(int dim, int64_t radius);
  int64_t Pack(std::span<const int64_t> p) const;
  // Unpacks a sum of `terms` packed points.
  std::vector<int64_t> UnpackSum(int64_t key, int terms) const;
};

IntSet PackedKeys(const LatticeSet& a, const LatticePacking& pk);

}  // namespace bsglab
