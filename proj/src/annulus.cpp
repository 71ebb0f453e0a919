#include "bsglab/annulus.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "bsglab/error.hpp"
#include "bsglab/geometry.hpp"
#include "bsglab/search.hpp"
#include "bsglab/sumset.hpp"

namespace bsglab {

namespace {

using i128 = __int128;

int64_t MaxCorner(int64_t v) { return std::max(std::llabs(v), std::llabs(v + 1)); }

int64_t MinCorner(int64_t v) {
  if (v == -1 || v == 0) return 0;
  return std::min(std::llabs(v), std::llabs(v + 1));
}

bool IsPowerOfTwo(int64_t v) { return v > 0 && (v & (v - 1)) == 0; }

// Exact thresholds of the membership test, scaled to integers.
struct Thresholds {
  i128 outer2;      // M^2
  i128 inner_num;   // (den - num)^2 M^2, compared with sum minc^2 den^2
  i128 den2;        // den^2
  i128 trim_num;    // tn M, compared with maxc td
  i128 trim_den;

  explicit Thresholds(const AnnulusSpec& s) {
    i128 m = s.M;
    outer2 = m * m;
    i128 en = s.eta.numerator(), ed = s.eta.denominator();
    inner_num = (ed - en) * (ed - en) * m * m;
    den2 = ed * ed;
    trim_num = static_cast<i128>(s.trim.numerator()) * m;
    trim_den = s.trim.denominator();
  }
  bool Inner(i128 sum_min) const { return sum_min * den2 >= inner_num; }
  bool Trim(int64_t maxc) const { return maxc * trim_den <= trim_num; }
};

struct AnnulusSearch {
  const AnnulusSpec& spec;
  const Thresholds th;
  int64_t cap;
  std::vector<int64_t> cur;
  std::vector<int64_t> coords;
  int64_t trimmed = 0;
  int64_t visited = 0;

  AnnulusSearch(const AnnulusSpec& s, int64_t c) : spec(s), th(s), cap(c), cur(s.d) {}

  void Visit(int i, i128 pmax, i128 pmin, bool trim_ok) {
    ++visited;
    if (i == spec.d) {
      if (!th.Inner(pmin)) return;
      if (!trim_ok) {
        ++trimmed;
        return;
      }
      coords.insert(coords.end(), cur.begin(), cur.end());
      RequireBudget(static_cast<int64_t>(coords.size()) / spec.d <= cap,
                    "annulus set exceeds the point cap");
      return;
    }
    for (int64_t v = -spec.M; v < spec.M; ++v) {
      i128 mx = MaxCorner(v), mn = MinCorner(v);
      i128 nmax = pmax + mx * mx;
      if (nmax > th.outer2) continue;
      i128 nmin = pmin + mn * mn;
      // Later coordinates add at most outer2 - nmax to the min-corner sum.
      if (!th.Inner(nmin + (th.outer2 - nmax))) continue;
      cur[i] = v;
      Visit(i + 1, nmax, nmin, trim_ok && th.Trim(static_cast<int64_t>(mx)));
    }
  }
};

}  // namespace

Rational AnnulusSpec::DefaultEta(int d) {
  Require(d >= 1 && d <= 62, "dimension out of range");
  return Rational(1, int64_t{1} << d);
}

Rational AnnulusSpec::DefaultTrim(int d) {
  Require(d >= 1 && d <= 76, "dimension out of range for the default trim");
  int64_t p = 1;
  for (int i = 0; i < 10; ++i) p *= d;
  return Rational(p - 1, p);
}

AnnulusSpec AnnulusSpec::Make(int d, int64_t M, std::optional<Rational> eta,
                              std::optional<Rational> trim) {
  AnnulusSpec s;
  s.d = d;
  s.M = M;
  s.eta = eta ? *eta : DefaultEta(d);
  s.trim = trim ? *trim : DefaultTrim(d);
  s.Validate();
  return s;
}

void AnnulusSpec::Validate() const {
  Require(d >= 2 && d <= 16, "annulus dimension must lie in [2, 16]");
  Require(M >= 1 && M <= (int64_t{1} << 20), "M must lie in [1, 2^20]");
  Require(eta > 0 && eta < 1, "eta must lie in (0, 1)");
  Require(IsPowerOfTwo(eta.denominator()) && eta.denominator() <= (int64_t{1} << 30),
          "eta must be a dyadic rational with denominator at most 2^30");
  Require(trim > 0 && trim <= 1, "trim must lie in (0, 1]");
  Require(trim.denominator() <= (int64_t{1} << 40), "trim denominator too large");
}

bool InDiscretizedAnnulus(std::span<const int64_t> a, const AnnulusSpec& spec) {
  Require(static_cast<int>(a.size()) == spec.d, "point dimension mismatch");
  Thresholds th(spec);
  i128 smax = 0, smin = 0;
  for (int64_t v : a) {
    i128 mx = MaxCorner(v), mn = MinCorner(v);
    smax += mx * mx;
    smin += mn * mn;
    if (!th.Trim(static_cast<int64_t>(mx))) return false;
  }
  return smax <= th.outer2 && th.Inner(smin);
}

AnnulusBuild BuildAnnulusSet(const AnnulusSpec& spec, int64_t point_cap) {
  spec.Validate();
  AnnulusSearch search(spec, point_cap);
  search.Visit(0, 0, 0, true);
  AnnulusBuild out;
  out.points = LatticeSet::FromSortedFlat(spec.d, spec.M, std::move(search.coords));
  out.trimmed = search.trimmed;
  out.visited = search.visited;
  return out;
}

PairConstraint BuildMidpointGamma(const LatticeSet& a) {
  return PairConstraint::ForLatticeSets(a, a, MidpointPairs(a));
}

IntSet ProjectToZ(const LatticeSet& a) { return FreimanEmbed(a, 10 * a.box_radius()); }

IntSet SymmetricProjection(const LatticeSet& a, std::vector<int64_t>* perm) {
  const int64_t base = 10 * a.box_radius();
  i128 span = 1;
  for (int i = 0; i < a.dim(); ++i) {
    span *= base;
    RequireBudget(span < (static_cast<i128>(1) << 60), "projection overflows 64 bits");
  }
  std::vector<int64_t> lifted(a.dim());
  std::vector<std::pair<int64_t, int64_t>> values(a.size());
  for (int64_t i = 0; i < a.size(); ++i) {
    auto p = a.point(i);
    for (int k = 0; k < a.dim(); ++k) lifted[k] = 2 * p[k] + 1;
    values[i] = {FreimanImage(lifted, base), i};
  }
  std::sort(values.begin(), values.end());
  std::vector<int64_t> sorted(values.size());
  if (perm) perm->assign(values.size(), 0);
  for (size_t r = 0; r < values.size(); ++r) {
    sorted[r] = values[r].first;
    if (perm) (*perm)[values[r].second] = static_cast<int64_t>(r);
  }
  return IntSet::FromSorted(sorted);
}

LatticeSet Interior(const LatticeSet& a) {
  const int d = a.dim();
  Require(d <= 20, "dimension too large for the interior test");
  std::vector<int64_t> coords, q(d);
  for (int64_t i = 0; i < a.size(); ++i) {
    auto p = a.point(i);
    bool inside = true;
    for (uint32_t mask = 1; inside && mask < (1u << d); ++mask) {
      for (int k = 0; k < d; ++k) q[k] = p[k] + ((mask >> k) & 1);
      inside = a.contains(q);
    }
    if (inside) coords.insert(coords.end(), p.begin(), p.end());
  }
  return LatticeSet::FromSortedFlat(d, a.box_radius(), std::move(coords));
}

SandwichPoint CheckSandwich(const AnnulusSpec& spec, int64_t point_cap) {
  AnnulusBuild b = BuildAnnulusSet(spec, point_cap);
  SandwichPoint s;
  s.M = spec.M;
  s.count = b.points.size();
  s.normalized = static_cast<double>(s.count) / std::pow(static_cast<double>(spec.M), spec.d);
  double trim = ToDouble(spec.trim);
  s.volume = TrimmedAnnulusVolume(spec.d, ToDouble(spec.eta), trim);
  s.gap = s.volume - s.normalized;
  s.upper_holds = s.normalized <= s.volume;
  return s;
}

int64_t CounterexampleSpec::L() const {
  Require(lambda > 0, "lambda must be positive");
  int64_t num = 10 * lambda.denominator(), den = lambda.numerator();
  return (num + den - 1) / den;
}

double CounterexampleSpec::delta() const {
  double d = annulus.d;
  return std::exp2(-d * d / 3);
}

Rational CounterexampleSpec::epsilon() const {
  i128 p = 1;
  for (int64_t i = 0; i < C_exp * annulus.d; ++i) {
    p *= annulus.d;
    Require(p * lambda.denominator() < (static_cast<i128>(1) << 62),
            "epsilon = lambda d^(-C d) does not fit in 64-bit rationals");
  }
  return Rational(lambda.numerator(), static_cast<int64_t>(p * lambda.denominator()));
}

void CounterexampleSpec::Validate() const {
  annulus.Validate();
  Require(lambda > 0 && lambda < Rational(1, 2), "lambda must lie in (0, 1/2)");
  Require(C_exp >= 0 && C_exp <= 16, "C_exp must lie in [0, 16]");
}

Counterexample BuildCounterexample(const CounterexampleSpec& spec, int64_t point_cap) {
  spec.Validate();
  Counterexample c;
  c.spec = spec;
  AnnulusBuild b = BuildAnnulusSet(spec.annulus, point_cap);
  Require(!b.points.empty(), "the annulus set is empty at this resolution");
  c.lattice = std::move(b.points);
  c.trimmed = b.trimmed;

  std::vector<int64_t> perm;
  c.a0 = SymmetricProjection(c.lattice, &perm);
  std::vector<IndexPair> removed = MidpointPairs(c.lattice);
  for (auto& [i, j] : removed) {
    i = perm[i];
    j = perm[j];
  }
  c.gamma0 = PairConstraint::ForIntSets(c.a0, c.a0, removed);
  if (!(Dilate(c.a0, -1) == c.a0)) throw std::logic_error("projected set is not symmetric");

  c.N = c.a0.max();
  const int64_t L = spec.L();
  RequireBudget(static_cast<i128>(L) * c.N < (static_cast<i128>(1) << 60),
                "L N overflows 64 bits");
  c.a = Union(c.a0, IntSet::Interval(c.N + 1, L * c.N));
  // a0 occupies the first |a0| indices of a, so the removed pairs carry over.
  c.gamma = PairConstraint::ForIntSets(c.a, c.a, c.gamma0.removed());
  c.sumset_size = Sumset(c.a, c.a).size();
  c.restricted_size = RestrictedSumset(c.a, c.a, c.gamma).size();
  c.missing_floor = (c.a0.size() + 1) / 2;
  return c;
}

Json CounterexampleReport(const Counterexample& c) {
  const auto& s = c.spec;
  const int d = s.annulus.d;
  Json j;
  j["d"] = d;
  j["M"] = s.annulus.M;
  j["eta"] = FormatRational(s.annulus.eta);
  j["trim"] = FormatRational(s.annulus.trim);
  j["lambda"] = FormatRational(s.lambda);
  j["L"] = s.L();
  j["C_exp"] = s.C_exp;
  j["epsilon"] = FormatRational(s.epsilon());
  j["delta_target"] = s.delta();
  j["lattice_size"] = c.lattice.size();
  j["trimmed_points"] = c.trimmed;
  j["a0_size"] = c.a0.size();
  j["N"] = c.N;
  j["a_size"] = c.a.size();
  j["sumset_size"] = c.sumset_size;
  j["restricted_size"] = c.restricted_size;
  j["removed_pairs"] = c.gamma.removed_count();
  j["delta_actual"] = c.gamma.density();
  j["delta_a0"] = c.gamma0.density();
  double n = static_cast<double>(c.a.size());
  j["doubling"] = c.sumset_size / n;
  j["doubling_target"] = 2 + ToDouble(s.lambda);
  j["doubling_holds"] = c.sumset_size <= (2 + ToDouble(s.lambda)) * n;
  j["restricted_doubling"] = c.restricted_size / n;
  j["missing_sums"] = c.sumset_size - c.restricted_size;
  j["missing_floor"] = c.missing_floor;
  j["missing_floor_holds"] = c.restricted_size <= c.sumset_size - c.missing_floor;
  double half_box = std::pow(10.0 * s.annulus.M, d) / 2;
  j["projection_interval_ratio"] = 2 * half_box / static_cast<double>(c.a0.size());
  return j;
}

PropertyReport VerifyProperties(const IntSet& a0, const PairConstraint& g0, int d) {
  Require(!a0.empty(), "empty set");
  Require(d >= 1, "dimension must be positive");
  g0.CheckReferences(a0, a0);
  PropertyReport r;
  r.n = a0.size();
  const double n = static_cast<double>(r.n);
  r.interval_ratio = static_cast<double>(a0.max() - a0.min() + 1) / n;

  IntSet s = Sumset(a0, a0);
  IntSet rs = RestrictedSumset(a0, a0, g0);
  IntSet doubles = Dilate(a0, 2);
  r.sumset_size = s.size();
  r.restricted_size = rs.size();
  r.doubling = static_cast<double>(s.size()) / n;
  r.doubling_over_4d = r.doubling / std::pow(4.0, d);
  r.doubles_missing = IsSubset(doubles, s) && Intersection(doubles, rs).empty();

  double k = std::floor(n / std::pow(800.0, d));
  r.shrink_removals = static_cast<int64_t>(k);
  if (r.shrink_removals == 0) {
    r.shrink_min_sumset = s.size();
  } else {
    r.shrink_min_sumset = GreedyShrink(a0, r.shrink_removals).SizeAfter(r.shrink_removals);
  }
  r.shrink_target = s.size() - r.n / 80;
  r.shrink_holds = 80 * r.shrink_min_sumset >= 80 * s.size() - r.n;

  r.neighbor_window = r.n / 10;
  r.min_neighbors = r.n;
  a0.for_each([&](int64_t x) {
    r.min_neighbors =
        std::min(r.min_neighbors, a0.count_in(x - r.neighbor_window, x + r.neighbor_window));
  });
  r.min_neighbor_fraction = static_cast<double>(r.min_neighbors) / n;
  return r;
}

Json ToJson(const PropertyReport& r) {
  Json j;
  j["n"] = r.n;
  j["interval_ratio"] = r.interval_ratio;
  j["sumset_size"] = r.sumset_size;
  j["doubling"] = r.doubling;
  j["doubling_over_4_pow_d"] = r.doubling_over_4d;
  j["restricted_size"] = r.restricted_size;
  j["doubles_missing"] = r.doubles_missing;
  j["shrink_removals"] = r.shrink_removals;
  j["shrink_min_sumset"] = r.shrink_min_sumset;
  j["shrink_target"] = r.shrink_target;
  j["shrink_holds"] = r.shrink_holds;
  j["neighbor_window"] = r.neighbor_window;
  j["min_neighbors"] = r.min_neighbors;
  j["min_neighbor_fraction"] = r.min_neighbor_fraction;
  return j;
}

MissingSplit ClassifyMissingSums(const IntSet& a, const IntSet& a_prime, int64_t N, int64_t L) {
  Require(IsSubset(a_prime, a), "A' must be a subset of A");
  return ClassifyMissing(Difference(Sumset(a, a), Sumset(a_prime, a_prime)), N, L);
}

MissingSplit ClassifyMissing(const IntSet& missing, int64_t N, int64_t L) {
  Require(N >= 1 && L >= 1, "N and L must be positive");
  MissingSplit m;
  IntSet r1 = IntSet::Interval(-2 * N, 0);
  IntSet r2 = IntSet::Interval(1, 2 * N);
  IntSet r3 = IntSet::Interval(2 * N + 1, 2 * L * N);
  m.u1 = Intersection(missing, r1);
  m.u2 = Intersection(missing, r2);
  m.u3 = Intersection(missing, r3);
  m.anomalies = Difference(missing, IntSet::Interval(-2 * N, 2 * L * N));
  return m;
}

Json ToJson(const MissingSplit& m) {
  Json j;
  j["u1_size"] = m.u1.size();
  j["u2_size"] = m.u2.size();
  j["u3_size"] = m.u3.size();
  j["total"] = m.u1.size() + m.u2.size() + m.u3.size();
  j["anomalies"] = ToJson(m.anomalies);
  return j;
}

}  // namespace bsglab
