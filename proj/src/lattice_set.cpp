#include "bsglab/lattice_set.hpp"

#include <algorithm>
#include <cstdlib>

#include "bsglab/error.hpp"

namespace bsglab {

LatticeSet::LatticeSet(int dim, int64_t box_radius)
    : dim_(dim), box_radius_(box_radius) {
  Require(dim >= 1, "lattice dimension must be positive");
  Require(box_radius >= 0, "box radius must be non-negative");
}

LatticeSet LatticeSet::FromPoints(int dim, int64_t box_radius,
                                  std::vector<std::vector<int64_t>> points) {
  LatticeSet s(dim, box_radius);
  for (const auto& p : points) {
    Require(static_cast<int>(p.size()) == dim,
            "point has wrong number of coordinates");
    for (int64_t c : p)
      Require(std::llabs(c) <= box_radius, "coordinate exceeds box radius");
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  s.coords_.reserve(points.size() * dim);
  for (const auto& p : points) s.coords_.insert(s.coords_.end(), p.begin(), p.end());
  return s;
}

LatticeSet LatticeSet::FromSortedFlat(int dim, int64_t box_radius,
                                      std::vector<int64_t> coords) {
  LatticeSet s(dim, box_radius);
  Require(coords.size() % dim == 0, "flat coordinate array has wrong length");
  for (int64_t c : coords)
    Require(std::llabs(c) <= box_radius, "coordinate exceeds box radius");
  s.coords_ = std::move(coords);
  for (int64_t i = 1; i < s.size(); ++i) {
    auto a = s.point(i - 1), b = s.point(i);
    Require(std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end()),
            "points must be strictly increasing in lexicographic order");
  }
  return s;
}

int64_t LatticeSet::index_of(std::span<const int64_t> p) const {
  if (static_cast<int>(p.size()) != dim_) return -1;
  int64_t lo = 0, hi = size();
  while (lo < hi) {
    int64_t mid = (lo + hi) / 2;
    auto q = point(mid);
    if (std::lexicographical_compare(q.begin(), q.end(), p.begin(), p.end())) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo < size() && std::equal(p.begin(), p.end(), point(lo).begin())) return lo;
  return -1;
}

LatticePacking LatticePacking::ForSums(int dim, int64_t radius) {
  LatticePacking pk{dim, radius, 4 * radius + 1};
  __int128 span = 1;
  for (int i = 0; i < dim; ++i) span *= pk.radix;
  RequireBudget(span < (static_cast<__int128>(1) << 61),
                "lattice packing overflows 64-bit keys");
  return pk;
}

int64_t LatticePacking::Pack(std::span<const int64_t> p) const {
  int64_t key = 0;
  for (int i = 0; i < dim; ++i) key = key * radix + (p[i] + radius);
  return key;
}

std::vector<int64_t> LatticePacking::UnpackSum(int64_t key, int terms) const {
  std::vector<int64_t> p(dim);
  for (int i = dim - 1; i >= 0; --i) {
    p[i] = key % radix - terms * radius;
    key /= radix;
  }
  return p;
}

IntSet PackedKeys(const LatticeSet& a, const LatticePacking& pk) {
  std::vector<int64_t> keys(a.size());
  for (int64_t i = 0; i < a.size(); ++i) keys[i] = pk.Pack(a.point(i));
  return IntSet::FromSorted(keys);
}

}  // namespace bsglab
