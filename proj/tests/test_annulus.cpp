#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"

#include "bsglab/annulus.hpp"
#include "bsglab/error.hpp"
#include "bsglab/sumset.hpp"

using namespace bsglab;

namespace {

// The cube a/M + [0, 1/M]^d lies in the trimmed annulus. Each coordinate
// contributes max(|v|, |v+1|) to the far corner and min(|v|, |v+1|) to
// the near one; everything is compared in integers scaled by den^2.
bool OracleMember(const std::vector<int64_t>& a, const AnnulusSpec& s) {
  const int64_t en = s.eta.numerator(), ed = s.eta.denominator();
  const int64_t tn = s.trim.numerator(), td = s.trim.denominator();
  int64_t far = 0, near = 0;
  for (int64_t v : a) {
    int64_t hi = std::max(std::abs(v), std::abs(v + 1));
    int64_t lo = std::min(std::abs(v), std::abs(v + 1));
    if (hi * td > tn * s.M) return false;
    far += hi * hi;
    near += lo * lo;
  }
  int64_t inner = (ed - en) * s.M;
  return far <= s.M * s.M && near * ed * ed >= inner * inner;
}

std::vector<std::vector<int64_t>> OraclePoints(const AnnulusSpec& s) {
  std::vector<std::vector<int64_t>> out;
  std::vector<int64_t> p(s.d, -s.M - 1);
  while (true) {
    if (OracleMember(p, s)) out.push_back(p);
    int k = s.d - 1;
    while (k >= 0 && p[k] == s.M) p[k--] = -s.M - 1;
    if (k < 0) break;
    ++p[k];
  }
  return out;
}

LatticeSet Build(int d, int64_t M, Rational eta, Rational trim) {
  return BuildAnnulusSet(AnnulusSpec::Make(d, M, eta, trim)).points;
}

}  // namespace

TEST_CASE("annulus set matches the rational oracle") {
  struct Case {
    int d;
    int64_t M;
    Rational eta, trim;
  };
  for (const Case& c : {Case{2, 8, {1, 4}, {1}}, Case{2, 13, {1, 4}, {7, 8}},
                        Case{3, 6, {1, 2}, {1}}, Case{3, 9, {1, 8}, {5, 6}}}) {
    AnnulusSpec s = AnnulusSpec::Make(c.d, c.M, c.eta, c.trim);
    LatticeSet built = BuildAnnulusSet(s).points;
    LatticeSet oracle = LatticeSet::FromPoints(c.d, c.M, OraclePoints(s));
    CHECK(built == oracle);
    for (int64_t i = 0; i < built.size(); ++i) CHECK(InDiscretizedAnnulus(built.point(i), s));
  }
}

TEST_CASE("annulus set is symmetric under reflection and coordinate swaps") {
  LatticeSet a = Build(3, 14, {1, 8}, {1});
  REQUIRE(a.size() > 0);
  std::vector<int64_t> q(3);
  for (int64_t i = 0; i < a.size(); ++i) {
    auto p = a.point(i);
    for (int k = 0; k < 3; ++k) q[k] = -p[k] - 1;
    CHECK(a.contains(q));
    q = {p[1], p[2], p[0]};
    CHECK(a.contains(q));
    q = {p[1], p[0], p[2]};
    CHECK(a.contains(q));
  }
}

TEST_CASE("annulus spec validation") {
  CHECK(AnnulusSpec::DefaultEta(3) == Rational(1, 8));
  CHECK(AnnulusSpec::DefaultTrim(2) == Rational(1023, 1024));
  CHECK_THROWS_AS(AnnulusSpec::Make(1, 10), PreconditionError);
  CHECK_THROWS_AS(AnnulusSpec::Make(3, 10, Rational(3, 10)), PreconditionError);
  CHECK_THROWS_AS(AnnulusSpec::Make(3, 10, Rational(1)), PreconditionError);
  CHECK_THROWS_AS(AnnulusSpec::Make(3, 10, std::nullopt, Rational(0)), PreconditionError);
  CHECK_THROWS_AS(BuildAnnulusSet(AnnulusSpec::Make(3, 60), 100), BudgetError);
}

TEST_CASE("interior of a box and of scattered points") {
  std::vector<std::vector<int64_t>> box, inner;
  for (int64_t x = 0; x <= 4; ++x)
    for (int64_t y = 0; y <= 4; ++y) {
      box.push_back({x, y});
      if (x < 4 && y < 4) inner.push_back({x, y});
    }
  box.push_back({8, 8});
  CHECK(Interior(LatticeSet::FromPoints(2, 10, box)) == LatticeSet::FromPoints(2, 10, inner));

  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int64_t> c(-5, 5);
  std::set<std::vector<int64_t>> pts;
  for (int i = 0; i < 70; ++i) pts.insert({c(rng), c(rng)});
  LatticeSet a = LatticeSet::FromPoints(2, 6, {pts.begin(), pts.end()});
  std::vector<std::vector<int64_t>> expect;
  for (const auto& p : pts)
    if (pts.count({p[0] + 1, p[1]}) && pts.count({p[0], p[1] + 1}) &&
        pts.count({p[0] + 1, p[1] + 1}))
      expect.push_back(p);
  CHECK(Interior(a) == LatticeSet::FromPoints(2, 6, expect));
}

TEST_CASE("midpoint constraint on a short segment") {
  LatticeSet a = LatticeSet::FromPoints(2, 5, {{0, 0}, {1, 0}, {2, 0}, {0, 3}});
  PairConstraint g = BuildMidpointGamma(a);
  // Four diagonal pairs and the two orderings of (0,0), (2,0).
  CHECK(g.removed_count() == 6);
  int64_t i0 = a.index_of(std::vector<int64_t>{0, 0});
  int64_t i2 = a.index_of(std::vector<int64_t>{2, 0});
  CHECK(g.is_removed(i0, i2));
  CHECK(g.is_removed(i2, i0));
  LatticeSet r = LatticeRestrictedSumset(a, a, g);
  for (int64_t i = 0; i < a.size(); ++i) {
    auto p = a.point(i);
    CHECK_FALSE(r.contains(std::vector<int64_t>{2 * p[0], 2 * p[1]}));
  }
}

TEST_CASE("doubled annulus points are all missing") {
  LatticeSet a = Build(2, 20, {1, 4}, {1});
  PairConstraint g = BuildMidpointGamma(a);
  LatticeSet r = LatticeRestrictedSumset(a, a, g);
  LatticeSet doubled = LatticeDilate(a, 2);
  for (int64_t i = 0; i < doubled.size(); ++i) CHECK_FALSE(r.contains(doubled.point(i)));
}

TEST_CASE("projections are Freiman isomorphisms") {
  LatticeSet a = Build(3, 10, {1, 4}, {1});
  IntSet plain = ProjectToZ(a);
  std::vector<int64_t> perm;
  IntSet sym = SymmetricProjection(a, &perm);
  CHECK(plain.size() == a.size());
  CHECK(sym.size() == a.size());
  CHECK(Dilate(sym, -1) == sym);
  const int64_t sums = LatticeSumset(a, a).size();
  CHECK(Sumset(plain, plain).size() == sums);
  CHECK(Sumset(sym, sym).size() == sums);
  // perm sends lattice index i to the index of pi(2 a_i + 1).
  std::vector<int64_t> lifted(3), values = sym.elements();
  for (int64_t i = 0; i < a.size(); ++i) {
    auto p = a.point(i);
    for (int k = 0; k < 3; ++k) lifted[k] = 2 * p[k] + 1;
    CHECK(values[perm[i]] == FreimanImage(lifted, 10 * a.box_radius()));
  }
}

TEST_CASE("small counterexample") {
  CounterexampleSpec spec;
  spec.annulus = AnnulusSpec::Make(2, 12);
  spec.lambda = Rational(1, 4);
  CHECK(spec.L() == 40);
  spec.lambda = Rational(3, 10);
  CHECK(spec.L() == 34);
  spec.lambda = Rational(1, 4);
  CHECK(spec.epsilon() == Rational(1, 256));

  Counterexample c = BuildCounterexample(spec);
  CHECK(c.a0.size() == c.lattice.size());
  CHECK(Dilate(c.a0, -1) == c.a0);
  CHECK(c.N == c.a0.elements().back());
  CHECK(c.a.size() == c.a0.size() + (spec.L() - 1) * c.N);
  CHECK(c.missing_floor == (c.a0.size() + 1) / 2);
  CHECK(c.sumset_size == Sumset(c.a, c.a).size());
  CHECK(c.restricted_size == RestrictedSumset(c.a, c.a, c.gamma).size());
  CHECK(c.sumset_size - c.restricted_size >= c.missing_floor);
  CHECK(c.gamma.removed_count() == c.gamma0.removed_count());
  CHECK(c.gamma.density() <= c.gamma0.density());
  Json report = CounterexampleReport(c);
  CHECK(report["missing_floor_holds"].get<bool>());
}

TEST_CASE("property report on the small counterexample") {
  CounterexampleSpec spec;
  spec.annulus = AnnulusSpec::Make(2, 12);
  Counterexample c = BuildCounterexample(spec);
  PropertyReport r = VerifyProperties(c.a0, c.gamma0, 2);
  CHECK(r.n == c.a0.size());
  CHECK(r.doubles_missing);
  CHECK(r.sumset_size == Sumset(c.a0, c.a0).size());
  CHECK(r.shrink_removals == 0);
  CHECK(r.shrink_holds);
}

TEST_CASE("neighbor counts on an interval") {
  for (int64_t n : {50, 97, 200}) {
    IntSet a = IntSet::Interval(1, n);
    PropertyReport r = VerifyProperties(a, PairConstraint::ForIntSets(a, a, {}), 2);
    CHECK(r.neighbor_window == n / 10);
    CHECK(r.min_neighbors == n / 10 + 1);
    CHECK_FALSE(r.doubles_missing);
    CHECK(r.interval_ratio == doctest::Approx(1.0).epsilon(0.05));
  }
}

TEST_CASE("missing sums split into three ranges") {
  IntSet a0 = IntSet::FromSorted({-5, -2, 0, 2, 5});
  const int64_t N = 5, L = 3;
  IntSet a = Union(a0, IntSet::Interval(N + 1, L * N));
  MissingSplit same = ClassifyMissingSums(a, a, N, L);
  CHECK(same.u1.empty());
  CHECK(same.u2.empty());
  CHECK(same.u3.empty());
  CHECK(same.anomalies.empty());

  for (int64_t drop : {int64_t{-5}, int64_t{0}, int64_t{15}}) {
    std::vector<int64_t> keep;
    for (int64_t x : a.elements())
      if (x != drop) keep.push_back(x);
    IntSet ap = IntSet::FromSorted(keep);
    MissingSplit m = ClassifyMissingSums(a, ap, N, L);
    IntSet missing = Difference(Sumset(a, a), Sumset(ap, ap));
    std::vector<int64_t> u1, u2, u3;
    for (int64_t s : missing.elements()) {
      if (s <= 0) u1.push_back(s);
      else if (s <= 2 * N) u2.push_back(s);
      else u3.push_back(s);
    }
    CHECK(m.u1 == IntSet::FromSorted(u1));
    CHECK(m.u2 == IntSet::FromSorted(u2));
    CHECK(m.u3 == IntSet::FromSorted(u3));
    CHECK(m.anomalies.empty());
  }
}

TEST_CASE("lattice count stays below the volume") {
  for (int d : {2, 3})
    for (int64_t M : {10, 20, 40}) {
      SandwichPoint s = CheckSandwich(AnnulusSpec::Make(d, M));
      CHECK(s.upper_holds);
      CHECK(s.gap >= 0);
    }
  SandwichPoint coarse = CheckSandwich(AnnulusSpec::Make(2, 16));
  SandwichPoint fine = CheckSandwich(AnnulusSpec::Make(2, 128));
  CHECK(fine.gap < coarse.gap);
}
