#include <random>
#include <set>

#include "doctest.h"

#include "bsglab/error.hpp"
#include "bsglab/sumset.hpp"

using namespace bsglab;

namespace {

std::set<int64_t> BruteSumset(const IntSet& a, const IntSet& b) {
  std::set<int64_t> out;
  for (int64_t x : a.elements())
    for (int64_t y : b.elements()) out.insert(x + y);
  return out;
}

std::vector<int64_t> Elems(const std::set<int64_t>& s) { return {s.begin(), s.end()}; }

IntSet RandomSet(std::mt19937_64& rng, int n, int64_t lo, int64_t hi) {
  std::uniform_int_distribution<int64_t> dist(lo, hi);
  std::vector<int64_t> v;
  for (int i = 0; i < n; ++i) v.push_back(dist(rng));
  return IntSet::FromUnsorted(v);
}

}  // namespace

TEST_CASE("interval sumset") {
  IntSet a = IntSet::Interval(1, 10);
  IntSet s = Sumset(a, a);
  CHECK(s == IntSet::Interval(2, 20));
  CHECK(s.size() == 19);
  CHECK(Sumset(IntSet::FromSorted({0}), IntSet::FromSorted({0})) == IntSet::FromSorted({0}));
  CHECK(Sumset(a, IntSet()).empty());
}

TEST_CASE("sumset matches pair enumeration") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; ++t) {
    IntSet a = RandomSet(rng, 50, 0, 10'000);
    CHECK(Sumset(a, a).elements() == Elems(BruteSumset(a, a)));
  }
  // Long runs mixed with isolated points.
  IntSet a = Union(IntSet::Interval(0, 99), IntSet::FromSorted({150, 400, 401, 1000}));
  IntSet b = Union(IntSet::Interval(-500, -440), IntSet::FromSorted({7, 9}));
  CHECK(Sumset(a, b).elements() == Elems(BruteSumset(a, b)));
}

TEST_CASE("sumset symmetry and the Cauchy-Davenport bound") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 30; ++t) {
    IntSet a = RandomSet(rng, 1 + t % 9, -30, 30);
    IntSet b = RandomSet(rng, 1 + t % 7, -30, 30);
    IntSet s = Sumset(a, b);
    CHECK(s == Sumset(b, a));
    CHECK(s.size() >= a.size() + b.size() - 1);
    if (a.size() >= 2 && b.size() >= 2) {
      ApCover pa = MinimalApCover(a), pb = MinimalApCover(b);
      bool both_ap = pa.length == a.size() && pb.length == b.size() && pa.diff == pb.diff;
      CHECK((s.size() == a.size() + b.size() - 1) == both_ap);
    }
  }
}

TEST_CASE("restricted sumset basics") {
  IntSet a = IntSet::FromSorted({1, 4, 6, 10});
  CHECK(RestrictedSumset(a, a, PairConstraint::ForIntSets(a, a, {})) == Sumset(a, a));
  std::vector<IndexPair> all;
  for (int64_t i = 0; i < 4; ++i)
    for (int64_t j = 0; j < 4; ++j) all.push_back({i, j});
  CHECK(RestrictedSumset(a, a, PairConstraint::ForIntSets(a, a, all)).empty());
  // 2 = 1 + 1 has one representation; removing it kills the sum.
  IntSet r = RestrictedSumset(a, a, PairConstraint::ForIntSets(a, a, {{0, 0}}));
  CHECK_FALSE(r.contains(2));
  // 10 = 4 + 6 = 6 + 4; removing one orientation keeps it.
  r = RestrictedSumset(a, a, PairConstraint::ForIntSets(a, a, {{1, 2}}));
  CHECK(r.contains(10));
}

TEST_CASE("restricted sumset rejects a constraint built for other sets") {
  IntSet a = IntSet::Interval(1, 4), b = IntSet::Interval(1, 5);
  PairConstraint g = PairConstraint::ForIntSets(a, a, {});
  CHECK_THROWS_AS(RestrictedSumset(a, b, g), PreconditionError);
}

TEST_CASE("restricted sumset is monotone in the removed pairs") {
  std::mt19937_64 rng(9);
  IntSet a = RandomSet(rng, 30, 0, 80);
  std::vector<IndexPair> removed;
  int64_t prev = Sumset(a, a).size();
  std::uniform_int_distribution<int64_t> idx(0, a.size() - 1);
  std::set<IndexPair> seen;
  for (int step = 0; step < 300; ++step) {
    IndexPair p{idx(rng), idx(rng)};
    if (!seen.insert(p).second) continue;
    removed.assign(seen.begin(), seen.end());
    IntSet r = RestrictedSumset(a, a, PairConstraint::ForIntSets(a, a, removed));
    CHECK(r.size() <= prev);
    CHECK(IsSubset(r, Sumset(a, a)));
    prev = r.size();
  }
}

TEST_CASE("near-extremal example") {
  IntSet a = Union(IntSet::Interval(1, 900), IntSet::Interval(1100, 1200));
  std::vector<IndexPair> removed;
  for (int64_t i = 900; i < a.size(); ++i)
    for (int64_t j = 900; j < a.size(); ++j) removed.push_back({i, j});
  PairConstraint g = PairConstraint::ForIntSets(a, a, removed);
  CHECK(RestrictedSumset(a, a, g).size() == 2099);
  DoublingReport r = MakeDoublingReport(a, &g);
  CHECK(r.n == 1001);
  CHECK(r.k == doctest::Approx(2099.0 / 1001));
}

TEST_CASE("doubling report") {
  DoublingReport r = MakeDoublingReport(IntSet::Interval(1, 10), nullptr);
  CHECK(r.k == doctest::Approx(1.9));
  CHECK(r.delta == 0);
  for (int64_t n : {2, 5, 17}) {
    std::vector<int64_t> ap;
    for (int64_t i = 0; i < n; ++i) ap.push_back(3 + 5 * i);
    DoublingReport q = MakeDoublingReport(IntSet::FromSorted(ap), nullptr);
    CHECK(q.doubling == doctest::Approx(static_cast<double>(2 * n - 1) / n));
    CHECK(q.doubling < 2);
  }
}

TEST_CASE("dilate") {
  CHECK(Dilate(IntSet::FromSorted({1, 2, 3}), 2) == IntSet::FromSorted({2, 4, 6}));
  IntSet a = IntSet::FromSorted({-3, 0, 5});
  CHECK(Dilate(a, 1) == a);
  CHECK(Dilate(a, -2) == IntSet::FromSorted({-10, 0, 6}));
}

TEST_CASE("midpoint pairs on integers") {
  auto p = MidpointPairs(IntSet::FromSorted({1, 2, 3}));
  std::vector<IndexPair> expected = {{0, 0}, {0, 2}, {1, 1}, {2, 0}, {2, 2}};
  CHECK(p == expected);
  CHECK(MidpointPairs(IntSet::FromSorted({0, 1})).size() == 2);

  std::mt19937_64 rng(10);
  IntSet a = RandomSet(rng, 40, -60, 60);
  std::vector<int64_t> e = a.elements();
  std::vector<IndexPair> brute;
  for (size_t i = 0; i < e.size(); ++i)
    for (size_t j = 0; j < e.size(); ++j)
      if ((e[i] + e[j]) % 2 == 0 && a.contains((e[i] + e[j]) / 2))
        brute.push_back({static_cast<int64_t>(i), static_cast<int64_t>(j)});
  auto got = MidpointPairs(a);
  CHECK(got == brute);
  for (auto [i, j] : got) CHECK(std::binary_search(got.begin(), got.end(), IndexPair{j, i}));
}

TEST_CASE("midpoint pairs on lattices") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int64_t> c(-4, 4);
  std::vector<std::vector<int64_t>> pts;
  for (int i = 0; i < 60; ++i) pts.push_back({c(rng), c(rng), c(rng)});
  LatticeSet a = LatticeSet::FromPoints(3, 4, pts);
  std::vector<IndexPair> brute;
  for (int64_t i = 0; i < a.size(); ++i)
    for (int64_t j = 0; j < a.size(); ++j) {
      std::vector<int64_t> m(3);
      bool ok = true;
      for (int k = 0; k < 3; ++k) {
        int64_t s = a.point(i)[k] + a.point(j)[k];
        ok = ok && s % 2 == 0;
        m[k] = s / 2;
      }
      if (ok && a.contains(m)) brute.push_back({i, j});
    }
  CHECK(MidpointPairs(a) == brute);
}

TEST_CASE("minimal AP cover") {
  ApCover c = MinimalApCover(IntSet::FromSorted({2, 5, 8, 14}));
  CHECK(c.start == 2);
  CHECK(c.diff == 3);
  CHECK(c.length == 5);
  CHECK(c.Covers(IntSet::FromSorted({2, 5, 8, 14})));
  c = MinimalApCover(IntSet::Interval(1, 12));
  CHECK(c.diff == 1);
  CHECK(c.length == 12);
  c = MinimalApCover(IntSet::FromSorted({0, 7}));
  CHECK(c.diff == 7);
  CHECK(c.length == 2);
  CHECK_THROWS_AS(MinimalApCover(IntSet::FromSorted({4})), PreconditionError);
  CHECK_THROWS_AS(MinimalApCover(IntSet()), PreconditionError);
  // length == |A| iff A is an AP
  CHECK(MinimalApCover(IntSet::FromSorted({1, 4, 7, 10})).length == 4);
  CHECK(MinimalApCover(IntSet::FromSorted({1, 4, 7, 13})).length == 5);
}

TEST_CASE("Freiman embedding") {
  std::vector<int64_t> p1 = {1, 2}, p2 = {-3, -3};
  CHECK(FreimanImage(p1, 30) == 61);
  CHECK(FreimanImage(p2, 30) == -93);
  LatticeSet line = LatticeSet::FromPoints(1, 5, {{-2}, {0}, {4}});
  CHECK(FreimanEmbed(line, 50) == IntSet::FromSorted({-2, 0, 4}));
  LatticeSet small = LatticeSet::FromPoints(2, 3, {{0, 0}});
  CHECK_THROWS_AS(FreimanEmbed(small, 29), PreconditionError);

  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int64_t> c(-5, 5);
  std::vector<std::vector<int64_t>> pts;
  while (pts.size() < 12) pts.push_back({c(rng), c(rng), c(rng)});
  LatticeSet a = LatticeSet::FromPoints(3, 5, pts);
  std::vector<int64_t> img;
  for (int64_t i = 0; i < a.size(); ++i) img.push_back(FreimanImage(a.point(i), 50));
  int64_t bad = 0;
  const int64_t n = a.size();
  for (int64_t i = 0; i < n; ++i)
    for (int64_t j = 0; j < n; ++j)
      for (int64_t k = 0; k < n; ++k)
        for (int64_t l = 0; l < n; ++l) {
          bool vec = true;
          for (int q = 0; q < 3; ++q)
            vec = vec && a.point(i)[q] + a.point(j)[q] == a.point(k)[q] + a.point(l)[q];
          if (vec != (img[i] + img[j] == img[k] + img[l])) ++bad;
        }
  CHECK(bad == 0);
  IntSet e = FreimanEmbed(a, 50);
  CHECK(e.size() == a.size());
  CHECK(Sumset(e, e).size() == LatticeSumset(a, a).size());
}

TEST_CASE("lattice sumset, restricted sumset and dilate") {
  LatticeSet a = LatticeSet::FromPoints(2, 3, {{0, 0}, {1, 0}, {0, 1}, {-3, 2}});
  LatticeSet s = LatticeSumset(a, a);
  std::set<std::vector<int64_t>> brute;
  for (int64_t i = 0; i < a.size(); ++i)
    for (int64_t j = 0; j < a.size(); ++j)
      brute.insert({a.point(i)[0] + a.point(j)[0], a.point(i)[1] + a.point(j)[1]});
  CHECK(s.size() == static_cast<int64_t>(brute.size()));
  for (const auto& p : brute) CHECK(s.contains(p));
  // Only the diagonal has midpoints in this set.
  auto mids = MidpointPairs(a);
  CHECK(mids.size() == 4);
  PairConstraint g = PairConstraint::ForLatticeSets(a, a, mids);
  LatticeSet r = LatticeRestrictedSumset(a, a, g);
  LatticeSet d = LatticeDilate(a, 2);
  for (int64_t i = 0; i < d.size(); ++i) {
    CHECK(s.contains(d.point(i)));
    CHECK_FALSE(r.contains(d.point(i)));
  }
}
