#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "bsglab/int_set.hpp"
#include "bsglab/io.hpp"
#include "bsglab/lattice_set.hpp"
#include "bsglab/pair_constraint.hpp"
#include "bsglab/rational.hpp"

namespace bsglab {

// Lattice points a whose cube a/M + [0, 1/M]^d lies in the trimmed annulus
// {1 - eta <= |x| <= 1, max |x_i| <= trim}.
struct AnnulusSpec {
  int d = 3;
  Rational eta{1, 8};
  int64_t M = 30;
  Rational trim{1};

  static Rational DefaultEta(int d);   // 2^-d
  static Rational DefaultTrim(int d);  // (d^10 - 1) / d^10
  static AnnulusSpec Make(int d, int64_t M, std::optional<Rational> eta = std::nullopt,
                          std::optional<Rational> trim = std::nullopt);
  void Validate() const;
};

inline constexpr int64_t kDefaultAnnulusPointCap = 1'000'000;

struct AnnulusBuild {
  LatticeSet points;
  int64_t trimmed = 0;  // points rejected only by the corner trim
  int64_t visited = 0;  // search nodes
};

// Exact integer membership test for one point.
bool InDiscretizedAnnulus(std::span<const int64_t> a, const AnnulusSpec& spec);
AnnulusBuild BuildAnnulusSet(const AnnulusSpec& spec,
                             int64_t point_cap = kDefaultAnnulusPointCap);

// Gamma on A x A removing exactly the pairs whose midpoint is in A.
PairConstraint BuildMidpointGamma(const LatticeSet& a);

// Base-10M embedding into Z.
IntSet ProjectToZ(const LatticeSet& a);

// The odd lift 2 pi(a) + pi(1, ..., 1) = pi(2a + 1). Cubes are anchored at
// a, so a -> -a - 1 is the symmetry of the lattice set and the lift turns
// it into x -> -x. perm[i] is the index in the result of lattice point i.
IntSet SymmetricProjection(const LatticeSet& a, std::vector<int64_t>* perm = nullptr);

// Lattice points a of A with a + {0,1}^d inside A.
LatticeSet Interior(const LatticeSet& a);

// vol of the trimmed annulus versus the lattice count.
struct SandwichPoint {
  int64_t M = 0;
  int64_t count = 0;
  double normalized = 0;  // count / M^d
  double volume = 0;      // vol of the trimmed annulus
  double gap = 0;         // volume - normalized
  bool upper_holds = false;
};
SandwichPoint CheckSandwich(const AnnulusSpec& spec, int64_t point_cap = kDefaultAnnulusPointCap);

struct CounterexampleSpec {
  Rational lambda{1, 4};
  AnnulusSpec annulus;
  int64_t C_exp = 3;

  int64_t L() const;              // ceil(10 / lambda)
  double delta() const;           // 2^(-d^2 / 3)
  Rational epsilon() const;       // lambda d^(-C_exp d)
  void Validate() const;
};

struct Counterexample {
  CounterexampleSpec spec;
  LatticeSet lattice;
  int64_t trimmed = 0;
  IntSet a0;
  PairConstraint gamma0;  // on a0 x a0
  int64_t N = 0;          // max(a0)
  IntSet a;               // a0 together with N+1 .. L N
  PairConstraint gamma;   // on a x a
  int64_t sumset_size = 0;
  int64_t restricted_size = 0;
  int64_t missing_floor = 0;  // ceil(|a0| / 2)
};

Counterexample BuildCounterexample(const CounterexampleSpec& spec,
                                   int64_t point_cap = kDefaultAnnulusPointCap);
Json CounterexampleReport(const Counterexample& c);

struct PropertyReport {
  int64_t n = 0;
  // (1) interval length of A over |A|
  double interval_ratio = 0;
  // (2) doubling against 4^d
  int64_t sumset_size = 0;
  double doubling = 0;
  double doubling_over_4d = 0;
  // (3) 2A inside (A+A) minus the restricted sumset
  bool doubles_missing = false;
  int64_t restricted_size = 0;
  // (4) greedy shrink with floor(800^-d |A|) removals
  int64_t shrink_removals = 0;
  int64_t shrink_min_sumset = 0;
  int64_t shrink_target = 0;  // |A+A| - floor(|A| / 80)
  bool shrink_holds = false;
  // (5) fewest elements within distance |A| / 10
  int64_t neighbor_window = 0;
  int64_t min_neighbors = 0;
  double min_neighbor_fraction = 0;
};

PropertyReport VerifyProperties(const IntSet& a0, const PairConstraint& g0, int d);
Json ToJson(const PropertyReport& r);

struct MissingSplit {
  IntSet u1;  // in [-2N, 0]
  IntSet u2;  // in [1, 2N]
  IntSet u3;  // in [2N + 1, 2 L N]
  IntSet anomalies;
};
MissingSplit ClassifyMissingSums(const IntSet& a, const IntSet& a_prime, int64_t N, int64_t L);
MissingSplit ClassifyMissing(const IntSet& missing, int64_t N, int64_t L);
Json ToJson(const MissingSplit& m);

}  // namespace bsglab
