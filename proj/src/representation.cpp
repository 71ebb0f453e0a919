#include "bsglab/representation.hpp"

#include <algorithm>
#include <cmath>

#include "bsglab/error.hpp"

namespace bsglab {

namespace {

int64_t FloorDiv(int64_t a, int64_t b) {
  int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int64_t CeilDiv(int64_t a, int64_t b) { return -FloorDiv(-a, b); }

// Second-difference point masses of the representation function restricted
// to pairs that involve a long run.
std::vector<std::pair<int64_t, int64_t>> LongPieceEvents(const RunSplit& sa,
                                                         const IntSet& b,
                                                         const RunSplit& sb) {
  int64_t pieces = static_cast<int64_t>(sa.longs.size()) *
                       static_cast<int64_t>(b.runs().size()) +
                   static_cast<int64_t>(sa.shorts.size()) *
                       static_cast<int64_t>(sb.longs.size());
  RequireBudget(pieces <= 50'000'000, "too many long-run pieces in sum profile");
  std::vector<std::pair<int64_t, int64_t>> ev;
  ev.reserve(4 * pieces);
  auto add_box = [&](Run x, Run y) {
    ev.push_back({x.lo + y.lo, 1});
    ev.push_back({x.lo + y.hi + 1, -1});
    ev.push_back({x.hi + y.lo + 1, -1});
    ev.push_back({x.hi + y.hi + 2, 1});
  };
  for (const Run& r : sa.longs)
    for (const Run& y : b.runs()) add_box(r, y);
  for (int64_t x : sa.shorts)
    for (const Run& r : sb.longs) add_box({x, x}, r);
  std::sort(ev.begin(), ev.end());
  std::vector<std::pair<int64_t, int64_t>> merged;
  for (const auto& e : ev) {
    if (!merged.empty() && merged.back().first == e.first) {
      merged.back().second += e.second;
    } else {
      merged.push_back(e);
    }
  }
  return merged;
}

// Evaluates the piecewise-linear long-run part at non-decreasing positions.
class PiecewiseCursor {
 public:
  explicit PiecewiseCursor(const std::vector<std::pair<int64_t, int64_t>>& ev)
      : ev_(ev) {}
  int64_t At(int64_t s) {
    while (k_ < ev_.size() && ev_[k_].first <= s) {
      int64_t p = ev_[k_].first;
      value_ += slope_ * (p - pos_);
      slope_ += ev_[k_].second;
      value_ += ev_[k_].second;
      pos_ = p;
      ++k_;
    }
    return value_ + slope_ * (s - pos_);
  }

 private:
  const std::vector<std::pair<int64_t, int64_t>>& ev_;
  size_t k_ = 0;
  int64_t pos_ = INT64_MIN / 4;
  int64_t value_ = 0;
  int64_t slope_ = 0;
};

// r(s) over short x short pairs, indexed by s - (pa[0] + pb[0]).
std::vector<uint32_t> ShortPairCounts(const std::vector<int64_t>& pa,
                                      const std::vector<int64_t>& pb,
                                      int64_t span) {
  std::vector<uint32_t> cnt(span, 0);
  std::vector<int64_t> rb(pb.size());
  for (size_t j = 0; j < pb.size(); ++j) rb[j] = pb[j] - pb.front();
  if (pa == pb) {
    for (size_t i = 0; i < rb.size(); ++i) {
      uint32_t* row = cnt.data() + rb[i];
      ++row[rb[i]];
      for (size_t j = i + 1; j < rb.size(); ++j) row[rb[j]] += 2;
    }
  } else {
    for (int64_t x : pa) {
      uint32_t* row = cnt.data() + (x - pa.front());
      for (int64_t y : rb) ++row[y];
    }
  }
  return cnt;
}

}  // namespace

RunSplit RunSplit::Of(const IntSet& s, int64_t long_run) {
  RunSplit out;
  for (const Run& r : s.runs()) {
    if (r.length() >= long_run) {
      out.longs.push_back(r);
    } else {
      for (int64_t x = r.lo; x <= r.hi; ++x) out.shorts.push_back(x);
    }
  }
  return out;
}

int64_t RunSplit::CountShortIn(int64_t lo, int64_t hi) const {
  if (hi < lo) return 0;
  return std::upper_bound(shorts.begin(), shorts.end(), hi) -
         std::lower_bound(shorts.begin(), shorts.end(), lo);
}

RepresentationCounter::RepresentationCounter(const IntSet& a, const IntSet& b)
    : a_(a), b_(b), sa_(RunSplit::Of(a)), sb_(RunSplit::Of(b)) {}

int64_t RepresentationCounter::LongPart(int64_t s) const {
  int64_t r = 0;
  for (const Run& x : sa_.longs) r += b_.count_in(s - x.hi, s - x.lo);
  for (const Run& y : sb_.longs) r += sa_.CountShortIn(s - y.hi, s - y.lo);
  return r;
}

int64_t RepresentationCounter::ShortPartScan(int64_t s) const {
  const auto& small = sa_.shorts.size() <= sb_.shorts.size() ? sa_.shorts : sb_.shorts;
  const auto& large = sa_.shorts.size() <= sb_.shorts.size() ? sb_.shorts : sa_.shorts;
  int64_t r = 0;
  for (int64_t x : small)
    if (std::binary_search(large.begin(), large.end(), s - x)) ++r;
  return r;
}

int64_t RepresentationCounter::CountOne(int64_t s) const {
  return ShortPartScan(s) + LongPart(s);
}

std::vector<int64_t> RepresentationCounter::Count(
    const std::vector<int64_t>& sums) const {
  std::vector<int64_t> out(sums.size(), 0);
  const auto& pa = sa_.shorts;
  const auto& pb = sb_.shorts;
  if (!pa.empty() && !pb.empty() && !sums.empty()) {
    int64_t base = pa.front() + pb.front();
    int64_t span = pa.back() + pb.back() - base + 1;
    double pairs = static_cast<double>(pa.size()) * static_cast<double>(pb.size());
    double scan = static_cast<double>(sums.size()) *
                  static_cast<double>(std::min(pa.size(), pb.size())) *
                  std::log2(static_cast<double>(std::max(pa.size(), pb.size())) + 2);
    if (span <= kDenseSpanLimit && pairs + span / 4.0 < scan) {
      std::vector<uint32_t> cnt = ShortPairCounts(pa, pb, span);
      for (size_t k = 0; k < sums.size(); ++k) {
        int64_t off = sums[k] - base;
        if (off >= 0 && off < span) out[k] = cnt[off];
      }
    } else {
      for (size_t k = 0; k < sums.size(); ++k) out[k] = ShortPartScan(sums[k]);
    }
  }
  for (size_t k = 0; k < sums.size(); ++k) out[k] += LongPart(sums[k]);
  return out;
}

LowRepresentationSums SumsWithFewRepresentations(const IntSet& a, const IntSet& b,
                                                 int64_t max_count,
                                                 int64_t output_cap) {
  LowRepresentationSums out;
  if (a.empty() || b.empty() || max_count < 1) return out;
  RunSplit sa = RunSplit::Of(a), sb = RunSplit::Of(b);
  const auto& pa = sa.shorts;
  const auto& pb = sb.shorts;

  // Short x short representation counts, as (sum, count) in increasing order.
  std::vector<std::pair<int64_t, int64_t>> dense_part;
  int64_t dense_lo = 0, dense_hi = -1;
  std::vector<uint32_t> cnt;
  if (!pa.empty() && !pb.empty()) {
    dense_lo = pa.front() + pb.front();
    dense_hi = pa.back() + pb.back();
    int64_t span = dense_hi - dense_lo + 1;
    double pairs = static_cast<double>(pa.size()) * static_cast<double>(pb.size());
    RequireBudget(pairs <= static_cast<double>(kPairWorkLimit),
                  "too many short-run pairs for a representation profile");
    if (span <= kDenseSpanLimit) {
      cnt = ShortPairCounts(pa, pb, span);
      for (int64_t off = 0; off < span; ++off)
        if (cnt[off]) dense_part.push_back({dense_lo + off, cnt[off]});
    } else {
      RequireBudget(pairs <= 1e8, "short-run sum list too large");
      std::vector<int64_t> all;
      all.reserve(static_cast<size_t>(pairs));
      for (int64_t x : pa)
        for (int64_t y : pb) all.push_back(x + y);
      std::sort(all.begin(), all.end());
      for (int64_t s : all) {
        if (!dense_part.empty() && dense_part.back().first == s) {
          ++dense_part.back().second;
        } else {
          dense_part.push_back({s, 1});
        }
      }
    }
  }
  auto dense_at = [&](int64_t s) -> int64_t {
    if (s < dense_lo || s > dense_hi) return 0;
    if (!cnt.empty()) return cnt[s - dense_lo];
    auto it = std::lower_bound(dense_part.begin(), dense_part.end(),
                               std::pair<int64_t, int64_t>{s, INT64_MIN});
    return (it != dense_part.end() && it->first == s) ? it->second : 0;
  };

  auto events = LongPieceEvents(sa, b, sb);
  std::vector<std::pair<int64_t, int64_t>> found;
  auto push = [&](int64_t s, int64_t r) {
    found.push_back({s, r});
    RequireBudget(static_cast<int64_t>(found.size()) <= output_cap,
                  "too many low-representation sums");
  };

  // Sums with a short x short representation.
  {
    PiecewiseCursor cur(events);
    for (const auto& [s, d] : dense_part) {
      int64_t r = d + cur.At(s);
      if (r <= max_count) push(s, r);
    }
  }
  // Sums represented only through long runs: the profile is linear between
  // consecutive events.
  {
    int64_t value = 0, slope = 0;
    for (size_t k = 0; k < events.size(); ++k) {
      int64_t p = events[k].first;
      if (k > 0) value += slope * (p - events[k - 1].first);
      slope += events[k].second;
      value += events[k].second;
      if (k + 1 == events.size()) break;
      int64_t end = events[k + 1].first - 1;
      int64_t lo = p, hi = end;
      // value + slope * (s - p) in [1, max_count]
      if (slope == 0) {
        if (value < 1 || value > max_count) continue;
      } else if (slope > 0) {
        lo = std::max(lo, p + CeilDiv(1 - value, slope));
        hi = std::min(hi, p + FloorDiv(max_count - value, slope));
      } else {
        lo = std::max(lo, p + CeilDiv(max_count - value, slope));
        hi = std::min(hi, p + FloorDiv(1 - value, slope));
      }
      for (int64_t s = lo; s <= hi; ++s) {
        if (dense_at(s) != 0) continue;
        push(s, value + slope * (s - p));
      }
    }
  }
  std::sort(found.begin(), found.end());
  out.sums.reserve(found.size());
  out.counts.reserve(found.size());
  for (const auto& [s, r] : found) {
    out.sums.push_back(s);
    out.counts.push_back(r);
  }
  return out;
}

}  // namespace bsglab
