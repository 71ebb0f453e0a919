#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "bsglab/int_set.hpp"
#include "bsglab/io.hpp"
#include "bsglab/pair_constraint.hpp"

namespace bsglab {

// Ambient group of a removal instance. Elements are encoded as integers:
// residues in [0, m) for cyclic groups, base-p digit strings for F_p^n.
struct Group {
  enum class Kind { kIntegers, kCyclic, kVectorSpace };
  Kind kind = Kind::kIntegers;
  int64_t modulus = 0;  // m for cyclic(m)
  int64_t prime = 0;    // p for F_p^n
  int exponent = 0;     // n for F_p^n

  static Group Integers() { return {}; }
  static Group Cyclic(int64_t m);
  static Group VectorSpace(int64_t p, int n);

  int64_t Add(int64_t x, int64_t y) const;
  bool IsValid(int64_t x) const;
  // Number of elements, or 0 for Z.
  int64_t Order() const;
  std::string Name() const;
};

struct RemovalInstance {
  IntSet a, b, c;
  Group group;
};

// Ordered solutions (a, b, c) with a + b = c, as indices into A, B, C.
std::vector<std::array<int64_t, 3>> Solutions(const RemovalInstance& inst);
int64_t SolutionCount(const RemovalInstance& inst);

struct ExtractionResult {
  IntSet a_prime, b_prime;
  int64_t n = 0;
  int64_t removed_pairs = 0;
  // Smallest Gamma-degree kept; equals N - isqrt(|removed|), i.e. the least
  // integer >= (1 - delta^{1/2}) N.
  int64_t min_degree = 0;
  double threshold = 0;  // (1 - delta^{1/2}) N
  double delta = 0;
  int64_t restricted_size = 0;  // |A +_Gamma B|
  double k = 0;                 // |A +_Gamma B| / N
  int64_t extracted_sumset_size = 0;  // |A' + B'|
  double bound = 0;                   // K^3 N / (1 - 2 delta^{1/2})^2
  bool sizes_hold = false;
  bool bound_holds = false;  // decided in exact arithmetic
};

// Keeps the elements whose Gamma-degree is at least (1 - delta^{1/2}) N.
// Requires |A| = |B| = N >= 1 and delta < 1/4.
ExtractionResult BsgExtract(const IntSet& a, const IntSet& b, const PairConstraint& g);

// C = (A + B) \ (A +_Gamma B), in Z.
RemovalInstance BsgToRemoval(const IntSet& a, const IntSet& b, const PairConstraint& g);

// Gamma = {(a, b) : a + b not in C}.
std::tuple<IntSet, IntSet, PairConstraint> RemovalToBsg(const RemovalInstance& inst);

enum class RemovalMode { kGreedy, kExhaustive };

inline constexpr int64_t kExhaustiveRemovalCap = 30;

struct RemovalSolution {
  IntSet a, b, c;                          // survivors
  IntSet removed_a, removed_b, removed_c;  // deleted elements
  int64_t removed_count = 0;
  int64_t solutions_before = 0;
  int64_t solutions_after = 0;  // recounted; always 0
  bool certified_minimum = false;
};

// Greedy deletes the element in the most surviving solutions, ties broken
// by smallest value, then C before B before A. Exhaustive finds a minimum
// deletion by branch and bound and refuses instances with
// |A| + |B| + |C| > kExhaustiveRemovalCap.
RemovalSolution SolveRemoval(const RemovalInstance& inst, RemovalMode mode);

Json ToJson(const ExtractionResult& r);
Json ToJson(const RemovalInstance& inst);
Json ToJson(const RemovalSolution& s);
RemovalInstance RemovalInstanceFromJson(const Json& j);

}  // namespace bsglab
