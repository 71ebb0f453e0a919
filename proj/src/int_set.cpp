#include "bsglab/int_set.hpp"

#include <algorithm>

#include "bsglab/error.hpp"

namespace bsglab {

namespace {

uint64_t Mix(uint64_t h, uint64_t v) {
  v *= 0x9E3779B97F4A7C15ULL;
  v ^= v >> 29;
  h ^= v + 0x94D049BB133111EBULL + (h << 6) + (h >> 2);
  return h;
}

// Merges runs sorted by lo into maximal runs.
std::vector<Run> Normalize(std::vector<Run> runs) {
  std::sort(runs.begin(), runs.end(),
            [](const Run& a, const Run& b) { return a.lo < b.lo; });
  std::vector<Run> out;
  out.reserve(runs.size());
  for (const Run& r : runs) {
    if (r.hi < r.lo) continue;
    if (!out.empty() && r.lo <= out.back().hi + 1) {
      out.back().hi = std::max(out.back().hi, r.hi);
    } else {
      out.push_back(r);
    }
  }
  return out;
}

}  // namespace

IntSet IntSet::FromUnsorted(std::vector<int64_t> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return FromSorted(values);
}

IntSet IntSet::FromSorted(const std::vector<int64_t>& values) {
  IntSet s;
  for (size_t i = 0; i < values.size(); ++i) {
    int64_t x = values[i];
    if (i > 0) Require(x > values[i - 1], "elements must be strictly increasing");
    if (!s.runs_.empty() && x == s.runs_.back().hi + 1) {
      s.runs_.back().hi = x;
    } else {
      s.runs_.push_back({x, x});
    }
  }
  s.RebuildOffsets();
  return s;
}

IntSet IntSet::FromRuns(std::vector<Run> runs) {
  IntSet s;
  s.runs_ = Normalize(std::move(runs));
  s.RebuildOffsets();
  return s;
}

IntSet IntSet::Interval(int64_t lo, int64_t hi) {
  if (hi < lo) return IntSet();
  return FromRuns({{lo, hi}});
}

void IntSet::RebuildOffsets() {
  offsets_.assign(runs_.size() + 1, 0);
  for (size_t k = 0; k < runs_.size(); ++k)
    offsets_[k + 1] = offsets_[k] + runs_[k].length();
}

int64_t IntSet::RunIndex(int64_t x) const {
  auto it = std::upper_bound(runs_.begin(), runs_.end(), x,
                             [](int64_t v, const Run& r) { return v < r.lo; });
  if (it == runs_.begin()) return -1;
  --it;
  if (x > it->hi) return -1;
  return it - runs_.begin();
}

int64_t IntSet::index_of(int64_t x) const {
  int64_t k = RunIndex(x);
  if (k < 0) return -1;
  return offsets_[k] + (x - runs_[k].lo);
}

int64_t IntSet::at(int64_t i) const {
  Require(i >= 0 && i < size(), "IntSet index out of range");
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), i);
  int64_t k = (it - offsets_.begin()) - 1;
  return runs_[k].lo + (i - offsets_[k]);
}

int64_t IntSet::rank(int64_t x) const {
  auto it = std::upper_bound(runs_.begin(), runs_.end(), x,
                             [](int64_t v, const Run& r) { return v < r.lo; });
  if (it == runs_.begin()) return 0;
  int64_t k = (it - runs_.begin()) - 1;
  return offsets_[k] + (std::min(x, runs_[k].hi) - runs_[k].lo + 1);
}

int64_t IntSet::count_in(int64_t lo, int64_t hi) const {
  if (hi < lo) return 0;
  return rank(hi) - rank(lo - 1);
}

std::vector<int64_t> IntSet::elements() const {
  std::vector<int64_t> out;
  out.reserve(size());
  for_each([&](int64_t x) { out.push_back(x); });
  return out;
}

uint64_t IntSet::fingerprint() const {
  uint64_t h = 0x51ED270B27E0C8A3ULL;
  for (const Run& r : runs_) {
    h = Mix(h, static_cast<uint64_t>(r.lo));
    h = Mix(h, static_cast<uint64_t>(r.hi));
  }
  return Mix(h, static_cast<uint64_t>(size()));
}

IntSet Union(const IntSet& a, const IntSet& b) {
  std::vector<Run> runs = a.runs();
  runs.insert(runs.end(), b.runs().begin(), b.runs().end());
  return IntSet::FromRuns(std::move(runs));
}

IntSet Difference(const IntSet& a, const IntSet& b) {
  std::vector<Run> out;
  const auto& br = b.runs();
  size_t j = 0;
  for (Run r : a.runs()) {
    while (j < br.size() && br[j].hi < r.lo) ++j;
    size_t k = j;
    int64_t cur = r.lo;
    while (k < br.size() && br[k].lo <= r.hi) {
      if (br[k].lo > cur) out.push_back({cur, br[k].lo - 1});
      cur = std::max(cur, br[k].hi + 1);
      ++k;
    }
    if (cur <= r.hi) out.push_back({cur, r.hi});
  }
  return IntSet::FromRuns(std::move(out));
}

IntSet Intersection(const IntSet& a, const IntSet& b) {
  std::vector<Run> out;
  const auto& ar = a.runs();
  const auto& br = b.runs();
  size_t i = 0, j = 0;
  while (i < ar.size() && j < br.size()) {
    int64_t lo = std::max(ar[i].lo, br[j].lo);
    int64_t hi = std::min(ar[i].hi, br[j].hi);
    if (lo <= hi) out.push_back({lo, hi});
    if (ar[i].hi < br[j].hi) ++i; else ++j;
  }
  return IntSet::FromRuns(std::move(out));
}

bool IsSubset(const IntSet& a, const IntSet& b) {
  return Difference(a, b).empty();
}

}  // namespace bsglab
