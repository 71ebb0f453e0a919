#include "bsglab/sumset.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <unordered_map>

#include "bsglab/error.hpp"
#include "bsglab/representation.hpp"

namespace bsglab {

namespace {

// Sum of two sorted element lists as runs.
std::vector<Run> ShortSumRuns(const std::vector<int64_t>& pa,
                              const std::vector<int64_t>& pb) {
  std::vector<Run> out;
  if (pa.empty() || pb.empty()) return out;
  int64_t base = pa.front() + pb.front();
  int64_t span = pa.back() + pb.back() - base + 1;
  double pairs = static_cast<double>(pa.size()) * static_cast<double>(pb.size());
  if (span <= kDenseSpanLimit) {
    int64_t words = span / 64 + 2;
    std::vector<uint64_t> bits(words, 0);
    const auto& outer = pa.size() <= pb.size() ? pa : pb;
    const auto& inner = pa.size() <= pb.size() ? pb : pa;
    int64_t inner_span = inner.back() - inner.front() + 1;
    int64_t inner_words = inner_span / 64 + 1;
    // Shift-OR pays off once the inner set fills its words.
    if (static_cast<double>(outer.size()) * inner_words < pairs) {
      std::vector<uint64_t> ib(inner_words, 0);
      for (int64_t y : inner) {
        int64_t o = y - inner.front();
        ib[o >> 6] |= 1ULL << (o & 63);
      }
      for (int64_t x : outer) {
        int64_t off = x - outer.front();
        int64_t ws = off >> 6, bs = off & 63;
        if (bs == 0) {
          for (int64_t w = 0; w < inner_words; ++w) bits[w + ws] |= ib[w];
        } else {
          for (int64_t w = 0; w < inner_words; ++w) {
            bits[w + ws] |= ib[w] << bs;
            bits[w + ws + 1] |= ib[w] >> (64 - bs);
          }
        }
      }
    } else {
      for (int64_t x : pa) {
        int64_t off = x - pa.front();
        for (int64_t y : pb) {
          int64_t o = off + (y - pb.front());
          bits[o >> 6] |= 1ULL << (o & 63);
        }
      }
    }
    int64_t run_start = -1;
    for (int64_t w = 0; w < words; ++w) {
      uint64_t v = bits[w];
      if (v == 0 && run_start < 0) continue;
      if (v == ~0ULL && run_start >= 0) continue;
      for (int b = 0; b < 64; ++b) {
        bool on = (v >> b) & 1ULL;
        int64_t o = w * 64 + b;
        if (on && run_start < 0) {
          run_start = o;
        } else if (!on && run_start >= 0) {
          out.push_back({base + run_start, base + o - 1});
          run_start = -1;
        }
      }
    }
    if (run_start >= 0) out.push_back({base + run_start, base + words * 64 - 1});
    return out;
  }
  RequireBudget(pairs <= static_cast<double>(kPairWorkLimit),
                "sumset of sparse sets exceeds the pair budget");
  // Sorted merge of the rows x + pb.
  using Item = std::pair<int64_t, size_t>;  // (sum, row)
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
  std::vector<size_t> col(pa.size(), 0);
  for (size_t i = 0; i < pa.size(); ++i) heap.push({pa[i] + pb[0], i});
  while (!heap.empty()) {
    auto [s, i] = heap.top();
    heap.pop();
    if (out.empty() || s > out.back().hi + 1) {
      out.push_back({s, s});
    } else if (s == out.back().hi + 1) {
      out.back().hi = s;
    }
    if (++col[i] < pb.size()) heap.push({pa[i] + pb[col[i]], i});
  }
  return out;
}

IntSet RestrictedSumsetImpl(const IntSet& a, const IntSet& b,
                            const std::vector<IndexPair>& removed) {
  IntSet full = Sumset(a, b);
  if (removed.empty()) return full;
  std::vector<int64_t> sums;
  sums.reserve(removed.size());
  // Removed pairs are sorted by left index, so element lookups stay local.
  int64_t last_i = -1, ai = 0;
  for (const auto& [i, j] : removed) {
    if (i != last_i) {
      ai = a.at(i);
      last_i = i;
    }
    sums.push_back(ai + b.at(j));
  }
  std::sort(sums.begin(), sums.end());
  std::vector<int64_t> distinct;
  std::vector<int64_t> removed_count;
  for (int64_t s : sums) {
    if (!distinct.empty() && distinct.back() == s) {
      ++removed_count.back();
    } else {
      distinct.push_back(s);
      removed_count.push_back(1);
    }
  }
  RepresentationCounter counter(a, b);
  std::vector<int64_t> reps = counter.Count(distinct);
  std::vector<int64_t> dead;
  for (size_t k = 0; k < distinct.size(); ++k) {
    if (reps[k] == removed_count[k]) dead.push_back(distinct[k]);
  }
  return Difference(full, IntSet::FromSorted(dead));
}

}  // namespace

bool ApCover::Contains(int64_t x) const {
  if (x < start || x > last()) return false;
  return (x - start) % diff == 0;
}

bool ApCover::Covers(const IntSet& a) const {
  if (a.empty()) return true;
  if (a.min() < start || a.max() > last()) return false;
  for (const Run& r : a.runs()) {
    if (r.lo != r.hi && diff != 1) return false;
    if (!Contains(r.lo)) return false;
  }
  return true;
}

IntSet Sumset(const IntSet& a, const IntSet& b) {
  if (a.empty() || b.empty()) return IntSet();
  RunSplit sa = RunSplit::Of(a), sb = RunSplit::Of(b);
  double pieces = static_cast<double>(sa.longs.size()) * b.runs().size() +
                  static_cast<double>(sa.shorts.size()) * sb.longs.size();
  RequireBudget(pieces <= 1e8, "sumset has too many long-run pieces");
  std::vector<Run> runs = ShortSumRuns(sa.shorts, sb.shorts);
  runs.reserve(runs.size() + static_cast<size_t>(pieces));
  for (const Run& x : sa.longs)
    for (const Run& y : b.runs()) runs.push_back({x.lo + y.lo, x.hi + y.hi});
  for (int64_t x : sa.shorts)
    for (const Run& y : sb.longs) runs.push_back({x + y.lo, x + y.hi});
  return IntSet::FromRuns(std::move(runs));
}

IntSet RestrictedSumset(const IntSet& a, const IntSet& b, const PairConstraint& g) {
  g.CheckReferences(a, b);
  return RestrictedSumsetImpl(a, b, g.removed());
}

IntSet Dilate(const IntSet& a, int64_t c) {
  if (a.empty()) return IntSet();
  if (c == 0) return IntSet::FromSorted({0});
  if (c == 1) return a;
  if (c == -1) {
    std::vector<Run> runs;
    for (const Run& r : a.runs()) runs.push_back({-r.hi, -r.lo});
    return IntSet::FromRuns(std::move(runs));
  }
  std::vector<int64_t> v;
  v.reserve(a.size());
  a.for_each([&](int64_t x) { v.push_back(x * c); });
  if (c < 0) std::reverse(v.begin(), v.end());
  return IntSet::FromSorted(v);
}

std::vector<IndexPair> MidpointPairs(const IntSet& a) {
  std::vector<IndexPair> out;
  int64_t n = a.size();
  RequireBudget(static_cast<double>(n) * n / 2 <= kPairWorkLimit,
                "midpoint pair enumeration exceeds the pair budget");
  std::vector<int64_t> e = a.elements();
  for (int64_t i = 0; i < n; ++i) {
    for (int64_t j = i; j < n; ++j) {
      int64_t s = e[i] + e[j];
      if (s & 1) continue;
      auto it = std::lower_bound(e.begin(), e.end(), s / 2);
      if (it != e.end() && *it == s / 2) {
        out.push_back({i, j});
        if (i != j) out.push_back({j, i});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IndexPair> MidpointPairs(const LatticeSet& a) {
  std::vector<IndexPair> out;
  const int d = a.dim();
  const int64_t n = a.size();
  if (n == 0) return out;
  // Index lookup over the bounding box.
  std::vector<int64_t> lo(d, INT64_MAX), hi(d, INT64_MIN);
  for (int64_t i = 0; i < n; ++i) {
    auto p = a.point(i);
    for (int k = 0; k < d; ++k) {
      lo[k] = std::min(lo[k], p[k]);
      hi[k] = std::max(hi[k], p[k]);
    }
  }
  std::vector<int64_t> stride(d);
  double box = 1;
  for (int k = d - 1; k >= 0; --k) {
    stride[k] = static_cast<int64_t>(box);
    box *= static_cast<double>(hi[k] - lo[k] + 1);
  }
  const bool dense = box <= 5e7;
  std::vector<int32_t> dense_index;
  std::unordered_map<int64_t, int64_t> sparse_index;
  auto key_of = [&](const int64_t* p) -> int64_t {
    int64_t key = 0;
    for (int k = 0; k < d; ++k) {
      if (p[k] < lo[k] || p[k] > hi[k]) return -1;
      key += (p[k] - lo[k]) * stride[k];
    }
    return key;
  };
  if (dense) {
    dense_index.assign(static_cast<size_t>(box), -1);
  } else {
    RequireBudget(box < 9e18, "lattice bounding box too large");
  }
  for (int64_t i = 0; i < n; ++i) {
    int64_t key = key_of(a.point(i).data());
    if (dense) {
      dense_index[key] = static_cast<int32_t>(i);
    } else {
      sparse_index[key] = i;
    }
  }
  auto lookup = [&](const int64_t* p) -> int64_t {
    int64_t key = key_of(p);
    if (key < 0) return -1;
    if (dense) return dense_index[key];
    auto it = sparse_index.find(key);
    return it == sparse_index.end() ? -1 : it->second;
  };

  // Parallelogram law about the box center: with q(x) = |2x - c|^2, a pair
  // a = m - b, a' = m + b satisfies 8|b|^2 = q(a) + q(a') - 2 q(m).
  int64_t qmax = 0, qmin = INT64_MAX;
  for (int64_t i = 0; i < n; ++i) {
    auto p = a.point(i);
    int64_t q = 0;
    for (int k = 0; k < d; ++k) {
      int64_t t = 2 * p[k] - (lo[k] + hi[k]);
      q += t * t;
    }
    qmax = std::max(qmax, q);
    qmin = std::min(qmin, q);
  }
  int64_t r2 = (qmax - qmin) / 4;
  int64_t r = static_cast<int64_t>(std::sqrt(static_cast<double>(r2))) + 1;
  double ball_estimate = std::pow(2.0 * r + 1, d);
  double pair_cost = static_cast<double>(n) * n / 2.0;
  std::vector<int64_t> m(d), x(d), y(d);
  if (ball_estimate * 3 < pair_cost) {
    // Enumerate displacement vectors b with |b|^2 <= r2.
    std::vector<int64_t> ball;
    std::vector<int64_t> b(d, -r);
    int64_t count = 0;
    while (true) {
      int64_t q = 0;
      for (int k = 0; k < d; ++k) q += b[k] * b[k];
      if (q <= r2) {
        ball.insert(ball.end(), b.begin(), b.end());
        ++count;
      }
      int k = d - 1;
      while (k >= 0 && b[k] == r) b[k--] = -r;
      if (k < 0) break;
      ++b[k];
    }
    RequireBudget(static_cast<double>(count) * n <= kPairWorkLimit,
                  "midpoint enumeration exceeds the pair budget");
    for (int64_t i = 0; i < n; ++i) {
      auto p = a.point(i);
      for (int64_t t = 0; t < count; ++t) {
        const int64_t* bv = ball.data() + t * d;
        for (int k = 0; k < d; ++k) {
          x[k] = p[k] - bv[k];
          y[k] = p[k] + bv[k];
        }
        int64_t ix = lookup(x.data());
        if (ix < 0) continue;
        int64_t iy = lookup(y.data());
        if (iy < 0) continue;
        out.push_back({ix, iy});
      }
    }
  } else {
    RequireBudget(pair_cost <= kPairWorkLimit,
                  "midpoint pair enumeration exceeds the pair budget");
    for (int64_t i = 0; i < n; ++i) {
      const int64_t* p = a.point(i).data();
      for (int64_t j = i; j < n; ++j) {
        const int64_t* q = a.point(j).data();
        bool even = true;
        for (int k = 0; k < d && even; ++k) even = ((p[k] + q[k]) & 1) == 0;
        if (!even) continue;
        for (int k = 0; k < d; ++k) m[k] = (p[k] + q[k]) / 2;
        if (lookup(m.data()) < 0) continue;
        out.push_back({i, j});
        if (i != j) out.push_back({j, i});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ApCover MinimalApCover(const IntSet& a) {
  Require(a.size() >= 2, "an AP cover needs at least two elements");
  int64_t g = 0;
  for (const Run& r : a.runs()) {
    if (r.hi > r.lo) {
      g = 1;
      break;
    }
    g = std::gcd(g, r.lo - a.min());
  }
  return ApCover{a.min(), g, (a.max() - a.min()) / g + 1};
}

int64_t FreimanImage(std::span<const int64_t> p, int64_t base) {
  __int128 v = 0;
  for (int k = static_cast<int>(p.size()) - 1; k >= 0; --k) v = v * base + p[k];
  return static_cast<int64_t>(v);
}

IntSet FreimanEmbed(const LatticeSet& a, int64_t base) {
  Require(base >= 10 * a.box_radius() && base >= 2,
          "embedding base must be at least 10 times the box radius");
  __int128 bound = a.box_radius();
  __int128 power = 1;
  for (int k = 1; k < a.dim(); ++k) {
    power *= base;
    bound += power * a.box_radius();
    RequireBudget(bound < (static_cast<__int128>(1) << 61),
                  "embedded values overflow 64-bit integers");
  }
  std::vector<int64_t> v(a.size());
  for (int64_t i = 0; i < a.size(); ++i) v[i] = FreimanImage(a.point(i), base);
  IntSet out = IntSet::FromUnsorted(std::move(v));
  Require(out.size() == a.size(), "embedding is not injective");
  return out;
}

DoublingReport MakeDoublingReport(const IntSet& a, const PairConstraint* g) {
  DoublingReport r;
  r.n = a.size();
  r.sumset_size = Sumset(a, a).size();
  double n = static_cast<double>(r.n);
  r.doubling = r.n ? r.sumset_size / n : 0.0;
  r.k = r.doubling;
  if (g) {
    r.restricted_size = RestrictedSumset(a, a, *g).size();
    r.removed_pairs = g->removed_count();
    r.k = r.n ? *r.restricted_size / n : 0.0;
    r.delta = g->density();
  }
  return r;
}

namespace {

LatticeSet UnpackSums(const IntSet& keys, const LatticePacking& pk,
                      int64_t box_radius) {
  std::vector<int64_t> flat;
  flat.reserve(keys.size() * pk.dim);
  keys.for_each([&](int64_t key) {
    auto p = pk.UnpackSum(key, 2);
    flat.insert(flat.end(), p.begin(), p.end());
  });
  return LatticeSet::FromSortedFlat(pk.dim, box_radius, std::move(flat));
}

}  // namespace

LatticeSet LatticeSumset(const LatticeSet& a, const LatticeSet& b) {
  Require(a.dim() == b.dim(), "lattice sets have different dimensions");
  auto pk = LatticePacking::ForSums(a.dim(), std::max(a.box_radius(), b.box_radius()));
  IntSet s = Sumset(PackedKeys(a, pk), PackedKeys(b, pk));
  return UnpackSums(s, pk, a.box_radius() + b.box_radius());
}

LatticeSet LatticeRestrictedSumset(const LatticeSet& a, const LatticeSet& b,
                                   const PairConstraint& g) {
  Require(a.dim() == b.dim(), "lattice sets have different dimensions");
  g.CheckReferences(a, b);
  auto pk = LatticePacking::ForSums(a.dim(), std::max(a.box_radius(), b.box_radius()));
  IntSet s = RestrictedSumsetImpl(PackedKeys(a, pk), PackedKeys(b, pk), g.removed());
  return UnpackSums(s, pk, a.box_radius() + b.box_radius());
}

LatticeSet LatticeDilate(const LatticeSet& a, int64_t c) {
  std::vector<std::vector<int64_t>> pts;
  pts.reserve(a.size());
  for (int64_t i = 0; i < a.size(); ++i) {
    auto p = a.point(i);
    std::vector<int64_t> q(p.begin(), p.end());
    for (auto& v : q) v *= c;
    pts.push_back(std::move(q));
  }
  return LatticeSet::FromPoints(a.dim(), a.box_radius() * std::llabs(c), std::move(pts));
}

}  // namespace bsglab
