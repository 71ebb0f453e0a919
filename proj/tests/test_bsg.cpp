#include <cmath>
#include <random>
#include <set>

#include "doctest.h"

#include "bsglab/bsg.hpp"
#include "bsglab/error.hpp"
#include "bsglab/sumset.hpp"

using namespace bsglab;

namespace {

// Minimum number of deletions by trying every subset.
int64_t BruteMinimumRemoval(const RemovalInstance& inst) {
  std::vector<std::pair<int, int64_t>> all;
  for (int64_t x : inst.a.elements()) all.push_back({0, x});
  for (int64_t x : inst.b.elements()) all.push_back({1, x});
  for (int64_t x : inst.c.elements()) all.push_back({2, x});
  const int n = static_cast<int>(all.size());
  int best = n;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    int pop = __builtin_popcount(mask);
    if (pop >= best) continue;
    std::vector<int64_t> sets[3];
    for (int i = 0; i < n; ++i)
      if (!(mask >> i & 1)) sets[all[i].first].push_back(all[i].second);
    RemovalInstance r{IntSet::FromSorted(sets[0]), IntSet::FromSorted(sets[1]),
                      IntSet::FromSorted(sets[2]), inst.group};
    if (SolutionCount(r) == 0) best = pop;
  }
  return best;
}

int64_t BruteSolutions(const RemovalInstance& inst) {
  int64_t n = 0;
  for (int64_t x : inst.a.elements())
    for (int64_t y : inst.b.elements())
      if (inst.c.contains(inst.group.Add(x, y))) ++n;
  return n;
}

}  // namespace

TEST_CASE("extraction with the full constraint") {
  IntSet a = IntSet::FromSorted({1, 3, 4, 9, 12});
  ExtractionResult e = BsgExtract(a, a, PairConstraint::ForIntSets(a, a, {}));
  CHECK(e.a_prime == a);
  CHECK(e.b_prime == a);
  double k = static_cast<double>(Sumset(a, a).size()) / 5;
  CHECK(e.bound == doctest::Approx(k * k * k * 5));
  CHECK(e.bound_holds);
}

TEST_CASE("extraction with a removed corner block") {
  IntSet a = IntSet::Interval(1, 100);
  std::vector<IndexPair> removed;
  for (int64_t i = 95; i < 100; ++i)
    for (int64_t j = 95; j < 100; ++j) removed.push_back({i, j});
  PairConstraint g = PairConstraint::ForIntSets(a, a, removed);
  ExtractionResult e = BsgExtract(a, a, g);
  CHECK(e.delta == doctest::Approx(0.0025));
  CHECK(e.threshold == doctest::Approx(95));
  // Brute-force degrees: each of 96..100 keeps 95 partners, exactly the threshold.
  std::vector<int64_t> keep;
  for (int64_t i = 0; i < 100; ++i) {
    int64_t deg = 100;
    for (auto [x, y] : removed)
      if (x == i) --deg;
    if (deg * 1.0 >= 95) keep.push_back(i + 1);
  }
  CHECK(e.a_prime == IntSet::FromSorted(keep));
  CHECK(e.a_prime.size() == 100);
  CHECK(e.extracted_sumset_size <= e.bound);
  CHECK(e.bound_holds);
}

TEST_CASE("extraction on random sparse removals") {
  std::mt19937_64 rng(21);
  const int64_t n = 200;
  IntSet a = IntSet::Interval(1, n);
  std::uniform_int_distribution<int64_t> idx(0, n - 1);
  std::set<IndexPair> removed;
  while (static_cast<int64_t>(removed.size()) < n * n / 100) removed.insert({idx(rng), idx(rng)});
  PairConstraint g = PairConstraint::ForIntSets(a, a, {removed.begin(), removed.end()});
  ExtractionResult e = BsgExtract(a, a, g);
  CHECK(e.a_prime.size() >= 180);
  CHECK(e.b_prime.size() >= 180);
  CHECK(e.bound_holds);
  CHECK(e.sizes_hold);
}

TEST_CASE("extraction preconditions") {
  IntSet a = IntSet::Interval(1, 4);
  std::vector<IndexPair> removed = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  CHECK_THROWS_AS(BsgExtract(a, a, PairConstraint::ForIntSets(a, a, removed)), PreconditionError);
  IntSet b = IntSet::Interval(1, 5);
  CHECK_THROWS_AS(BsgExtract(a, b, PairConstraint::ForIntSets(a, b, {})), PreconditionError);
}

TEST_CASE("restricted sumset to removal instance") {
  IntSet a = IntSet::FromSorted({0, 2, 5});
  RemovalInstance full = BsgToRemoval(a, a, PairConstraint::ForIntSets(a, a, {}));
  CHECK(full.c.empty());
  CHECK(SolutionCount(full) == 0);

  std::vector<IndexPair> all;
  for (int64_t i = 0; i < 3; ++i)
    for (int64_t j = 0; j < 3; ++j) all.push_back({i, j});
  RemovalInstance none = BsgToRemoval(a, a, PairConstraint::ForIntSets(a, a, all));
  CHECK(none.c == Sumset(a, a));

  // The top block of the near-extremal example: every top-top sum is lost.
  IntSet e = Union(IntSet::Interval(1, 900), IntSet::Interval(1100, 1200));
  std::vector<IndexPair> removed;
  for (int64_t i = 900; i < e.size(); ++i)
    for (int64_t j = 900; j < e.size(); ++j) removed.push_back({i, j});
  RemovalInstance inst = BsgToRemoval(e, e, PairConstraint::ForIntSets(e, e, removed));
  CHECK(inst.c == IntSet::Interval(2200, 2400));
  CHECK(SolutionCount(inst) == 101 * 101);
  CHECK(SolutionCount(inst) <= static_cast<int64_t>(removed.size()));
}

TEST_CASE("removal instance to restricted sumset") {
  RemovalInstance empty{IntSet::Interval(0, 3), IntSet::Interval(0, 3), IntSet(), Group::Integers()};
  auto [a0, b0, g0] = RemovalToBsg(empty);
  CHECK(g0.removed_count() == 0);

  RemovalInstance inst{IntSet::FromSorted({0, 1}), IntSet::FromSorted({0, 1}),
                       IntSet::FromSorted({2}), Group::Integers()};
  auto [a, b, g] = RemovalToBsg(inst);
  CHECK(g.removed() == std::vector<IndexPair>{{1, 1}});
  CHECK(g.removed_count() <= SolutionCount(inst));
  CHECK(Intersection(RestrictedSumset(a, b, g), inst.c).empty());
}

TEST_CASE("duality round trip") {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 50; ++t) {
    std::uniform_int_distribution<int64_t> v(-20, 20);
    std::vector<int64_t> xa, xb;
    for (int i = 0; i < 12; ++i) {
      xa.push_back(v(rng));
      xb.push_back(v(rng));
    }
    IntSet a = IntSet::FromUnsorted(xa), b = IntSet::FromUnsorted(xb);
    std::uniform_int_distribution<int64_t> ia(0, a.size() - 1), ib(0, b.size() - 1);
    std::set<IndexPair> rem;
    for (int i = 0; i < 15; ++i) rem.insert({ia(rng), ib(rng)});
    PairConstraint g = PairConstraint::ForIntSets(a, b, {rem.begin(), rem.end()});
    RemovalInstance inst = BsgToRemoval(a, b, g);
    auto [a2, b2, g2] = RemovalToBsg(inst);
    for (const IndexPair& p : g2.removed()) CHECK(rem.count(p) == 1);
    CHECK(RestrictedSumset(a2, b2, g2) == RestrictedSumset(a, b, g));
  }
}

TEST_CASE("solution counts match brute force in every group") {
  RemovalInstance z{IntSet::FromSorted({0, 1, 3}), IntSet::FromSorted({1, 2}),
                    IntSet::FromSorted({2, 3, 5}), Group::Integers()};
  CHECK(SolutionCount(z) == BruteSolutions(z));
  CHECK(static_cast<int64_t>(Solutions(z).size()) == SolutionCount(z));
  RemovalInstance cyc{IntSet::FromSorted({0, 3, 5}), IntSet::FromSorted({2, 4}),
                      IntSet::FromSorted({0, 1}), Group::Cyclic(7)};
  CHECK(SolutionCount(cyc) == BruteSolutions(cyc));
  RemovalInstance f3{IntSet::FromSorted({0, 1, 4, 8}), IntSet::FromSorted({1, 2, 5}),
                     IntSet::FromSorted({0, 2, 3, 6}), Group::VectorSpace(3, 2)};
  CHECK(SolutionCount(f3) == BruteSolutions(f3));
  RemovalInstance bad{IntSet::FromSorted({9}), IntSet(), IntSet(), Group::VectorSpace(3, 2)};
  CHECK_THROWS_AS(SolutionCount(bad), PreconditionError);
}

TEST_CASE("removal solver") {
  RemovalInstance none{IntSet::FromSorted({0}), IntSet::FromSorted({5}),
                       IntSet::FromSorted({1}), Group::Integers()};
  RemovalSolution s0 = SolveRemoval(none, RemovalMode::kGreedy);
  CHECK(s0.removed_count == 0);

  RemovalInstance small{IntSet::FromSorted({0, 1}), IntSet::FromSorted({0, 1}),
                        IntSet::FromSorted({0, 1, 2}), Group::Integers()};
  RemovalSolution ex = SolveRemoval(small, RemovalMode::kExhaustive);
  RemovalSolution gr = SolveRemoval(small, RemovalMode::kGreedy);
  CHECK(ex.certified_minimum);
  CHECK(ex.removed_count == BruteMinimumRemoval(small));
  CHECK(gr.removed_count >= ex.removed_count);
  CHECK(ex.solutions_after == 0);
  CHECK(gr.solutions_after == 0);
}

TEST_CASE("removal solver on F_3^2") {
  std::vector<int64_t> all;
  for (int64_t x = 0; x < 9; ++x) all.push_back(x);
  RemovalInstance inst{IntSet::FromSorted(all), IntSet::FromSorted(all), IntSet::FromSorted(all),
                       Group::VectorSpace(3, 2)};
  CHECK(SolutionCount(inst) == 81);
  RemovalSolution ex = SolveRemoval(inst, RemovalMode::kExhaustive);
  RemovalSolution gr = SolveRemoval(inst, RemovalMode::kGreedy);
  CHECK(ex.solutions_after == 0);
  CHECK(gr.solutions_after == 0);
  // With A', B' nonempty, |C'| <= 9 - max(|A'|, |B'|), so at most
  // 9 + min(|A'|, |B'|) < 18 elements survive; emptying one part keeps 18.
  CHECK(ex.removed_count == 9);
  CHECK(gr.removed_count >= ex.removed_count);
  MESSAGE("F_3^2 greedy gap: " << gr.removed_count - ex.removed_count);
}

TEST_CASE("exhaustive removal refuses large instances") {
  RemovalInstance big{IntSet::Interval(0, 10), IntSet::Interval(0, 10), IntSet::Interval(0, 10),
                      Group::Integers()};
  CHECK_THROWS_AS(SolveRemoval(big, RemovalMode::kExhaustive), BudgetError);
}

TEST_CASE("random small instances: exhaustive equals brute force") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int64_t> v(0, 6);
  for (int t = 0; t < 15; ++t) {
    std::vector<int64_t> xa, xb, xc;
    for (int i = 0; i < 4; ++i) {
      xa.push_back(v(rng));
      xb.push_back(v(rng));
      xc.push_back(v(rng) + v(rng));
    }
    RemovalInstance inst{IntSet::FromUnsorted(xa), IntSet::FromUnsorted(xb),
                         IntSet::FromUnsorted(xc), Group::Integers()};
    RemovalSolution ex = SolveRemoval(inst, RemovalMode::kExhaustive);
    CHECK(ex.removed_count == BruteMinimumRemoval(inst));
    CHECK(SolveRemoval(inst, RemovalMode::kGreedy).removed_count >= ex.removed_count);
  }
}
