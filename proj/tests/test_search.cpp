#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"

#include "bsglab/search.hpp"
#include "bsglab/sumset.hpp"

using namespace bsglab;

namespace {

int64_t NaiveSumsetSize(const std::vector<int64_t>& a) {
  std::set<int64_t> s;
  for (int64_t x : a)
    for (int64_t y : a) s.insert(x + y);
  return static_cast<int64_t>(s.size());
}

// Reference greedy: try every element, keep the one giving the smallest
// sumset, smallest element on ties.
std::vector<int64_t> NaiveGreedy(std::vector<int64_t> a, int64_t k,
                                 std::vector<int64_t>* sizes) {
  std::vector<int64_t> order;
  for (int64_t step = 0; step < k; ++step) {
    int64_t best_x = 0, best = INT64_MAX;
    for (size_t i = 0; i < a.size(); ++i) {
      std::vector<int64_t> b = a;
      b.erase(b.begin() + i);
      int64_t sz = NaiveSumsetSize(b);
      if (sz < best) {
        best = sz;
        best_x = a[i];
      }
    }
    order.push_back(best_x);
    sizes->push_back(best);
    a.erase(std::find(a.begin(), a.end(), best_x));
  }
  return order;
}

IntSet RandomMixedSet(std::mt19937_64& rng, bool with_runs) {
  std::vector<int64_t> v;
  std::uniform_int_distribution<int64_t> pos(-300, 300), cnt(5, 40);
  int64_t n = cnt(rng);
  for (int64_t i = 0; i < n; ++i) v.push_back(pos(rng));
  if (with_runs) {
    std::uniform_int_distribution<int64_t> len(32, 70), nr(1, 2);
    int64_t runs = nr(rng);
    for (int64_t r = 0; r < runs; ++r) {
      int64_t lo = pos(rng), l = len(rng);
      for (int64_t x = lo; x < lo + l; ++x) v.push_back(x);
    }
  }
  return IntSet::FromUnsorted(v);
}

}  // namespace

TEST_CASE("greedy engine matches the reference greedy on sparse sets") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    IntSet a = RandomMixedSet(rng, false);
    int64_t k = std::min<int64_t>(a.size() - 1, 8);
    std::vector<int64_t> sizes;
    auto expect = NaiveGreedy(a.elements(), k, &sizes);
    GreedyTrajectory g = GreedyShrink(a, k);
    REQUIRE(g.removed == expect);
    REQUIRE(g.sumset_sizes == sizes);
  }
}

TEST_CASE("greedy engine matches the reference greedy with long runs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    IntSet a = RandomMixedSet(rng, true);
    int64_t k = 10;
    std::vector<int64_t> sizes;
    auto expect = NaiveGreedy(a.elements(), k, &sizes);
    GreedyTrajectory g = GreedyShrink(a, k);
    REQUIRE(g.removed == expect);
    REQUIRE(g.sumset_sizes == sizes);
    IntSet survivors = g.SurvivorsAfter(a, k);
    IntSet full = Sumset(a, a);
    CHECK(g.MissingAfter(k) == Difference(full, Sumset(survivors, survivors)));
  }
}

TEST_CASE("exhaustive shrink on an interval removes both endpoints") {
  SearchConfig cfg;
  cfg.epsilon = Rational(1, 5);
  cfg.strategy = Strategy::kExhaustive;
  ShrinkResult r = ShrinkSearch(IntSet::Interval(1, 10), cfg);
  CHECK(r.achieved == 15);
  CHECK(r.certified_minimum);
  // The minimum is attained by several subsets; dropping both endpoints is one.
  IntSet inner = IntSet::Interval(2, 9);
  CHECK(Sumset(inner, inner).size() == r.achieved);
}
